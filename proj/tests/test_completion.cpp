#include <doctest.h>

#include <set>

#include "matroidlab/catalog.hpp"
#include "matroidlab/completion.hpp"
#include "matroidlab/isomorphism.hpp"
#include "matroidlab/line_geometry.hpp"
#include "matroidlab/modular_cut.hpp"
#include "matroidlab/modularity.hpp"
#include "support/corpus.hpp"

using namespace matroidlab;

namespace {

Matroid pg32_minus_point() { return delete_elements(pg3(2), single(0)); }

// Each step adds exactly one flat and keeps the rank-4 structure.
void audit_step(const ExtensionStep& step) {
  const Matroid& base = step.base;
  const Matroid& next = step.result;
  const Subset e = single(step.new_element);

  CHECK(next.loopless());
  CHECK(next.rank() == 4);
  CHECK(is_hypermodular(next));
  CHECK(step.defect_after < step.defect_before);
  CHECK(next.flat_count() == base.flat_count() + 1);

  // flats(next) == phi(flats(base)) plus the rank-1 flat {e}
  std::set<Subset> expected;
  for (Subset f : base.all_flats()) {
    Subset img = phi(step, f);
    CHECK(next.flat_rank(img) == base.flat_rank(f));
    expected.insert(img);
  }
  expected.insert(e);
  CHECK(next.flat_rank(e) == 1);
  std::set<Subset> actual(next.all_flats().begin(), next.all_flats().end());
  CHECK(actual == expected);

  // the rank >= 2 part of the lattice is carried over unchanged: phi is a
  // containment-preserving bijection there, covers included
  for (Subset a : base.all_flats()) {
    if (base.flat_rank(a) < 2) continue;
    for (Subset b : base.all_flats()) {
      if (base.flat_rank(b) < 2) continue;
      CHECK(is_subset(a, b) == is_subset(phi(step, a), phi(step, b)));
    }
  }

  // every non-modular pair of the extension pulls back to one of the base
  for (const auto& cp : nonmodular_pairs(next)) {
    auto preimage = [&](Subset g) {
      Subset l = g & ~e;
      REQUIRE(base.is_flat(l));
      REQUIRE(phi(step, l) == g);
      return l;
    };
    Subset px = preimage(cp.pair.x);
    Subset py = preimage(cp.pair.y);
    CHECK(modular_defect_pair(base, px, py).defect > 0);
  }
}

}  // namespace

TEST_CASE("completing a modular matroid is a no-op") {
  CompletionTrace trace = complete(pg3(2));
  CHECK(trace.step_count() == 0);
  CHECK(trace.result == pg3(2));
  CHECK(trace.defect_sequence == std::vector<long long>{0});
  CHECK(trace.nonprincipal_cut_count == 0);
}

TEST_CASE("headline completion: pg3(2) minus a point") {
  Matroid d = pg32_minus_point();
  CompletionTrace trace = complete(d);
  CHECK(trace.step_count() == 1);
  CHECK(trace.nonprincipal_cut_count == 1);
  CHECK(trace.result.size() == 15);
  CHECK(is_modular(trace.result));
  CHECK(matroid_modular_defect(trace.result) == 0);
  CHECK(trace.defect_sequence == std::vector<long long>{49, 0});
  CHECK(restrict_to(trace.result, d.ground()) == d);
  CHECK(is_isomorphic(trace.result, pg3(2)));
  for (const auto& step : trace.steps) audit_step(step);
}

TEST_CASE("completion of pg3(3) minus two points takes two steps") {
  Matroid d = delete_elements(pg3(3), subset_of({0, 1}));
  REQUIRE(is_hypermodular(d));
  CompletionTrace trace = complete(d);
  CHECK(trace.step_count() == 2);
  CHECK(trace.nonprincipal_cut_count == 2);
  CHECK(is_modular(trace.result));
  CHECK(trace.result.size() == 40);
  CHECK(is_isomorphic(trace.result, pg3(3)));
  for (const auto& step : trace.steps) audit_step(step);
  // strictly decreasing to zero
  for (size_t i = 1; i < trace.defect_sequence.size(); ++i)
    CHECK(trace.defect_sequence[i] < trace.defect_sequence[i - 1]);
  CHECK(trace.defect_sequence.back() == 0);
}

TEST_CASE("completion preconditions") {
  try {
    complete(vamos());
    REQUIRE(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotHypermodular);
  }
  try {
    complete(uniform(3, 5));
    REQUIRE(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::PreconditionViolated);
  }
  try {
    complete(direct_sum_loops(pg32_minus_point(), 1));
    REQUIRE(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::PreconditionViolated);
  }
}

TEST_CASE("loops are split off and re-attached in place") {
  Matroid core = pg32_minus_point();
  Matroid with = direct_sum_loops(core, 3);
  // move the loops to scattered positions
  std::vector<int> perm(with.size());
  std::vector<int> nonloop_slots;
  std::vector<int> loop_slots = {2, 5, 9};
  std::set<int> taken(loop_slots.begin(), loop_slots.end());
  for (int i = 0; i < with.size(); ++i)
    if (!taken.count(i) && static_cast<int>(nonloop_slots.size()) < core.size())
      nonloop_slots.push_back(i);
  for (int i = 0; i < core.size(); ++i) perm[i] = nonloop_slots[i];
  for (int i = 0; i < 3; ++i) perm[core.size() + i] = loop_slots[i];
  Matroid m = relabel(with, perm);
  REQUIRE(m.loops() == subset_of(loop_slots));

  CompletionTrace trace = complete_with_loops(m);
  CHECK(trace.loops_reattached == 3);
  CHECK(trace.step_count() == 1);
  CHECK(trace.result.size() == m.size() + 1);
  CHECK(trace.result.loops() == m.loops());
  CHECK(is_modular(trace.result));
  CHECK(restrict_to(trace.result, m.ground()) == m);

  // agrees with completing the loopless part and re-attaching by hand
  CompletionTrace inner = complete(core);
  Matroid manual = direct_sum_loops(inner.result, 3);
  std::vector<int> perm2(manual.size());
  for (int i = 0; i < core.size(); ++i) perm2[i] = nonloop_slots[i];
  perm2[core.size()] = m.size();  // the added element
  for (int i = 0; i < 3; ++i) perm2[core.size() + 1 + i] = loop_slots[i];
  CHECK(trace.result == relabel(manual, perm2));
}

TEST_CASE("complete_with_loops edge cases") {
  // loopless input: identical to complete
  Matroid d = pg32_minus_point();
  CHECK(complete_with_loops(d).result == complete(d).result);
  // a rank-0 pile of loops is below the hypermodularity threshold
  try {
    complete_with_loops(uniform(0, 5));
    REQUIRE(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::RankTooSmall);
  }
}

TEST_CASE("policy invariance") {
  std::vector<PairPolicy> policies = {PairPolicy::lex(), PairPolicy::revlex(),
                                      PairPolicy::random(42)};
  auto rep = policy_invariance_report(pg32_minus_point(), policies);
  CHECK(rep.step_counts == std::vector<int>{1, 1, 1});
  CHECK(rep.counts_equal);
  REQUIRE(rep.pairwise_isomorphic.has_value());
  CHECK(*rep.pairwise_isomorphic);

  auto rep0 = policy_invariance_report(pg3(2), policies);
  CHECK(rep0.step_counts == std::vector<int>{0, 0, 0});

  auto rep3 = policy_invariance_report(delete_elements(pg3(3), subset_of({0, 1})), policies);
  CHECK(rep3.step_counts == std::vector<int>{2, 2, 2});
  CHECK(rep3.counts_equal);
}

TEST_CASE("policy parsing and determinism") {
  CHECK(PairPolicy::parse("lex").id() == "lex");
  CHECK(PairPolicy::parse("revlex").id() == "revlex");
  CHECK(PairPolicy::parse("random:7").id() == "random:7");
  CHECK(PairPolicy::parse("random").id() == "random:0");
  try {
    PairPolicy::parse("noise");
    REQUIRE(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::UnsupportedParam);
  }
  // the same seed reproduces the same trace
  Matroid d = delete_elements(pg3(3), subset_of({0, 1}));
  CompletionTrace a = complete(d, {PairPolicy::random(5), false});
  CompletionTrace b = complete(d, {PairPolicy::random(5), false});
  REQUIRE(a.step_count() == b.step_count());
  for (int i = 0; i < a.step_count(); ++i)
    CHECK(a.steps[i].result == b.steps[i].result);
}

TEST_CASE("fast mode gives the same trace as the checked mode") {
  Matroid d = pg32_minus_point();
  CompletionTrace checked = complete(d, {PairPolicy::lex(), false});
  CompletionTrace fast = complete(d, {PairPolicy::lex(), true});
  CHECK(checked.result == fast.result);
  CHECK(checked.defect_sequence == fast.defect_sequence);
}
