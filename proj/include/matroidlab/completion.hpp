#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "matroidlab/extension.hpp"
#include "matroidlab/matroid.hpp"

namespace matroidlab {

// Pair selection for the completion loop. The extension count is
// policy-independent; the policy only fixes the order of the trace.
enum class PairPolicyKind { Lexicographic, ReverseLexicographic, SeededRandom };

struct PairPolicy {
  PairPolicyKind kind = PairPolicyKind::Lexicographic;
  std::uint64_t seed = 0;

  static PairPolicy lex() { return {PairPolicyKind::Lexicographic, 0}; }
  static PairPolicy revlex() { return {PairPolicyKind::ReverseLexicographic, 0}; }
  static PairPolicy random(std::uint64_t seed) { return {PairPolicyKind::SeededRandom, seed}; }
  /// "lex" | "revlex" | "random" | "random:SEED"
  static PairPolicy parse(const std::string& text);
  std::string id() const;
};

struct CompletionOptions {
  PairPolicy policy = PairPolicy::lex();
  // Skips the per-iteration re-verification (hypermodularity, Vamos
  // freeness, cut classification) that runs by default.
  bool fast = false;
};

/// Record of one completion run: the input, every extension step, the
/// terminal matroid, and the defect bookkeeping. The defect sequence is
/// strictly decreasing and ends at 0; the number of steps equals the
/// number of non-principal modular cuts of the input.
struct CompletionTrace {
  Matroid input;
  std::vector<ExtensionStep> steps;
  Matroid result;
  std::vector<long long> defect_sequence;
  int nonprincipal_cut_count = 0;
  std::string policy_id;
  int loops_reattached = 0;

  int step_count() const { return static_cast<int>(steps.size()); }
};

/// Iterated extension of a loopless rank-4 hypermodular matroid by the
/// cuts generated by its non-modular pairs, until the matroid is modular.
/// Throws NotHypermodular (with a witness hyperplane pair), VamosFound,
/// NonTermination, PreconditionViolated.
CompletionTrace complete(const Matroid& m, const CompletionOptions& options = {});

/// Splits off loops, completes the loopless part, and re-attaches the
/// loops at their original indices; new elements are appended after the
/// original ground set. Step matroids inside the trace are indexed over
/// the loopless core.
CompletionTrace complete_with_loops(const Matroid& m, const CompletionOptions& options = {});

struct PolicyInvarianceReport {
  std::vector<std::string> policy_ids;
  std::vector<int> step_counts;
  bool counts_equal = false;
  // Pairwise isomorphism of the results; nullopt when a search exceeded
  // its budget. Observational only; the count equality is the assertion.
  std::optional<bool> pairwise_isomorphic;
};

/// Runs complete() under each policy and compares. Throws
/// InternalInvariant when the step counts disagree.
PolicyInvarianceReport policy_invariance_report(const Matroid& m,
                                                const std::vector<PairPolicy>& policies);

}  // namespace matroidlab
