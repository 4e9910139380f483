#pragma once

#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "matroidlab/matroid.hpp"
#include "matroidlab/modular_cut.hpp"

namespace matroidlab {

// Hard budgets for the exhaustive searches. Every search either completes
// or throws BudgetExceeded; emptiness certificates are only issued by
// completed searches.
struct SearchBudget {
  long long max_nodes = 20'000'000;  // rank-assignment attempts
  int max_cuts = 200'000;            // modular cuts per matroid
  int max_extensions = 200'000;      // matroids per enumeration level
};

/// Every modular cut of m (including the empty cut), via the bijection
/// between nonempty modular cuts and closed sets of corank-1 flats.
/// Canonically ordered; throws BudgetExceeded.
std::vector<ModularCut> all_modular_cuts(const Matroid& m, const SearchBudget& budget = {});

/// All matroids on E(m) plus k new elements that restrict to m, generated
/// by iterated single-element extensions over all modular cuts at each
/// level, deduplicated by flat-table equality.
std::vector<Matroid> enumerate_extensions(const Matroid& m, int k,
                                          const SearchBudget& budget = {});

/// Two extensions of a common restriction: elements 0..shared-1 of both
/// matroids are identified and the restrictions there must agree exactly.
struct AmalgamProblem {
  Matroid m1;
  Matroid m2;
  int shared = 0;
};

struct NoAmalgamCertificate {
  long long nodes_explored = 0;
};

/// Exhaustive search over integer-valued, unit-increase, locally
/// submodular rank functions on the union ground set whose restrictions
/// match both inputs. Union elements are ordered: shared part, then m1's
/// extras, then m2's extras. Returns a fully validated witness or a
/// certificate that no amalgam exists. Throws BudgetExceeded,
/// PreconditionViolated.
std::variant<Matroid, NoAmalgamCertificate> find_amalgam(const AmalgamProblem& problem,
                                                         const SearchBudget& budget = {});

struct StickyProbeReport {
  enum class Outcome { NoWitnessFound, WitnessFound, BudgetExceeded };
  Outcome outcome = Outcome::NoWitnessFound;
  int pairs_checked = 0;
  // Set when a pair of extensions admits no amalgam.
  std::optional<std::pair<Matroid, Matroid>> witness_pair;
  long long certificate_nodes = 0;
};

/// Searches pairs of single-element extensions of m for a pair without an
/// amalgam. A modular m never yields a witness.
StickyProbeReport sticky_probe(const Matroid& m, const SearchBudget& budget = {});

}  // namespace matroidlab
