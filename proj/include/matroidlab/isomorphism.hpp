#pragma once

#include <optional>
#include <vector>

#include "matroidlab/matroid.hpp"

namespace matroidlab {

/// Backtracking search for an element bijection mapping the flat table of
/// `a` onto that of `b`. Returns the permutation (a-index -> b-index) or
/// nullopt when none exists. Candidates are pruned by rank invariants of
/// pairs, triples and quadruples; a complete map is verified against the
/// full flat tables. Throws BudgetExceeded when the node budget runs out.
std::optional<std::vector<int>> find_isomorphism(const Matroid& a, const Matroid& b,
                                                 long long node_budget = 20'000'000);

bool is_isomorphic(const Matroid& a, const Matroid& b,
                   long long node_budget = 20'000'000);

}  // namespace matroidlab
