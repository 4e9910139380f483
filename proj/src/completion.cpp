#include "matroidlab/completion.hpp"

#include <algorithm>
#include <random>

#include "matroidlab/isomorphism.hpp"
#include "matroidlab/line_geometry.hpp"
#include "matroidlab/modular_cut.hpp"
#include "matroidlab/modularity.hpp"

namespace matroidlab {

PairPolicy PairPolicy::parse(const std::string& text) {
  if (text == "lex") return lex();
  if (text == "revlex") return revlex();
  if (text == "random") return random(0);
  const std::string prefix = "random:";
  if (text.rfind(prefix, 0) == 0) {
    try {
      return random(std::stoull(text.substr(prefix.size())));
    } catch (const std::exception&) {
      fail(Errc::UnsupportedParam, "bad policy seed in '" + text + "'");
    }
  }
  fail(Errc::UnsupportedParam, "unknown pair policy '" + text + "'");
}

std::string PairPolicy::id() const {
  switch (kind) {
    case PairPolicyKind::Lexicographic: return "lex";
    case PairPolicyKind::ReverseLexicographic: return "revlex";
    case PairPolicyKind::SeededRandom: return "random:" + std::to_string(seed);
  }
  return "unknown";
}

namespace {

const ClassifiedPair& select_pair(const std::vector<ClassifiedPair>& pairs,
                                  const PairPolicy& policy, std::mt19937_64& rng) {
  switch (policy.kind) {
    case PairPolicyKind::Lexicographic: return pairs.front();
    case PairPolicyKind::ReverseLexicographic: return pairs.back();
    case PairPolicyKind::SeededRandom: return pairs[rng() % pairs.size()];
  }
  return pairs.front();
}

void check_iteration_invariants(const Matroid& cur) {
  if (!cur.loopless() || cur.rank() != 4)
    fail(Errc::InternalInvariant, "intermediate matroid lost rank or looplessness");
  if (auto w = hypermodularity_witness(cur)) {
    fail(Errc::InternalInvariant,
         "intermediate matroid is not hypermodular; hyperplanes " + subset_to_string(w->x) +
             " and " + subset_to_string(w->y) + " have defect " + std::to_string(w->defect));
  }
  if (auto q = find_vamos_among(cur, cur.flats_of_rank(2))) {
    fail(Errc::VamosFound, "Vamos line arrangement " + subset_to_string(q->lines[0]) + ", " +
                               subset_to_string(q->lines[1]) + ", " +
                               subset_to_string(q->lines[2]) + ", " +
                               subset_to_string(q->lines[3]));
  }
}

}  // namespace

CompletionTrace complete(const Matroid& m, const CompletionOptions& options) {
  if (m.rank() != 4)
    fail(Errc::PreconditionViolated, "complete needs a rank-4 matroid");
  if (!m.loopless())
    fail(Errc::PreconditionViolated,
         "complete needs a loopless matroid; use complete_with_loops");
  if (auto w = hypermodularity_witness(m)) {
    fail(Errc::NotHypermodular, "hyperplanes " + subset_to_string(w->x) + " and " +
                                    subset_to_string(w->y) + " have defect " +
                                    std::to_string(w->defect));
  }

  CompletionTrace trace;
  trace.input = m;
  trace.policy_id = options.policy.id();
  trace.nonprincipal_cut_count = static_cast<int>(nonprincipal_cuts(m).size());

  std::mt19937_64 rng(options.policy.seed);
  Matroid cur = m;
  long long defect = matroid_modular_defect(cur);
  trace.defect_sequence.push_back(defect);

  while (defect > 0) {
    if (!options.fast) check_iteration_invariants(cur);
    const auto pairs = nonmodular_pairs(cur);
    const ClassifiedPair& picked = select_pair(pairs, options.policy, rng);
    ModularCut cut = generated_cut(cur, {picked.pair.x, picked.pair.y});
    if (cut.classification != CutClass::ProperNonPrincipal) {
      fail(Errc::InternalInvariant, "generated cut of pair " + subset_to_string(picked.pair.x) +
                                        ", " + subset_to_string(picked.pair.y) +
                                        " classified as " +
                                        cut_class_name(cut.classification));
    }
    ExtensionStep step = extend(cur, cut);
    if (step.defect_after >= step.defect_before) {
      fail(Errc::NonTermination,
           "modular defect did not decrease: " + std::to_string(step.defect_before) + " -> " +
               std::to_string(step.defect_after) +
               " (the generating pair's defect must drop by one)");
    }
    cur = step.result;
    defect = step.defect_after;
    trace.defect_sequence.push_back(defect);
    trace.steps.push_back(std::move(step));
  }

  trace.result = cur;
  if (!options.fast) check_iteration_invariants(trace.result);
  if (trace.step_count() != trace.nonprincipal_cut_count) {
    fail(Errc::InternalInvariant,
         "extension count " + std::to_string(trace.step_count()) +
             " differs from the non-principal cut count " +
             std::to_string(trace.nonprincipal_cut_count));
  }
  if (restrict_to(trace.result, m.ground()) != m)
    fail(Errc::InternalInvariant, "completion result does not restrict to the input");
  return trace;
}

CompletionTrace complete_with_loops(const Matroid& m, const CompletionOptions& options) {
  if (m.rank() < 3) fail(Errc::RankTooSmall, "hypermodularity needs rank >= 3");
  if (m.rank() != 4)
    fail(Errc::PreconditionViolated, "complete_with_loops needs a rank-4 matroid");
  const Subset loops = m.loops();
  if (loops == kEmptySet) return complete(m, options);

  const Matroid core = delete_elements(m, loops);
  CompletionTrace trace = complete(core, options);
  const int n_core = core.size();
  const int k_new = trace.step_count();
  const int n_loops = popcount(loops);

  // Loops go back to their original indices; the added elements follow the
  // original ground set.
  Matroid with_loops = direct_sum_loops(trace.result, n_loops);
  std::vector<int> perm(with_loops.size());
  const auto original_nonloops = elements_of(m.ground() & ~loops);
  const auto original_loops = elements_of(loops);
  for (int i = 0; i < n_core; ++i) perm[i] = original_nonloops[i];
  for (int i = 0; i < k_new; ++i) perm[n_core + i] = m.size() + i;
  for (int i = 0; i < n_loops; ++i) perm[n_core + k_new + i] = original_loops[i];
  Matroid final_matroid = relabel(with_loops, perm);
  if (!m.labels().empty()) {
    std::vector<std::string> labels = m.labels();
    for (int i = 0; i < k_new; ++i)
      labels.push_back(fresh_element_label(labels, m.size() + i));
    final_matroid = final_matroid.with_labels(std::move(labels));
  }

  if (restrict_to(final_matroid, m.ground()) != m)
    fail(Errc::InternalInvariant, "loop re-attachment lost the restriction law");

  trace.input = m;
  trace.result = std::move(final_matroid);
  trace.loops_reattached = n_loops;
  return trace;
}

PolicyInvarianceReport policy_invariance_report(const Matroid& m,
                                                const std::vector<PairPolicy>& policies) {
  PolicyInvarianceReport rep;
  std::vector<Matroid> results;
  for (const PairPolicy& p : policies) {
    CompletionTrace t = complete(m, CompletionOptions{p, false});
    rep.policy_ids.push_back(p.id());
    rep.step_counts.push_back(t.step_count());
    results.push_back(t.result);
  }
  rep.counts_equal = std::all_of(rep.step_counts.begin(), rep.step_counts.end(),
                                 [&](int c) { return c == rep.step_counts.front(); });
  if (!rep.counts_equal) {
    fail(Errc::InternalInvariant, "completion step counts differ across policies");
  }
  bool all_iso = true;
  bool determined = true;
  for (size_t i = 0; i + 1 < results.size() && all_iso; ++i) {
    try {
      if (!is_isomorphic(results[i], results[i + 1])) all_iso = false;
    } catch (const Error& e) {
      if (e.code() != Errc::BudgetExceeded) throw;
      determined = false;
    }
  }
  if (determined) rep.pairwise_isomorphic = all_iso;
  return rep;
}

}  // namespace matroidlab
