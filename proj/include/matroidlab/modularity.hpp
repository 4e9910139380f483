#pragma once

#include <optional>
#include <vector>

#include "matroidlab/matroid.hpp"

namespace matroidlab {

/// Modular defect bookkeeping for one pair of flats:
/// defect = r(x) + r(y) - r(x u y) - r(x n y) >= 0.
struct PairDefectReport {
  Subset x = 0;
  Subset y = 0;
  int rank_x = 0;
  int rank_y = 0;
  int rank_union = 0;
  int rank_meet = 0;
  int defect = 0;
};

PairDefectReport modular_defect_pair(const Matroid& m, Subset x, Subset y);

bool is_modular_pair(const Matroid& m, Subset x, Subset y);

/// A flat is modular when it forms a modular pair with every flat.
bool is_modular_flat(const Matroid& m, Subset f);

bool is_modular(const Matroid& m);
std::optional<PairDefectReport> modularity_witness(const Matroid& m);

/// Every pair of corank-1 flats is modular. Requires rank >= 3
/// (RankTooSmall otherwise).
bool is_hypermodular(const Matroid& m);
std::optional<PairDefectReport> hypermodularity_witness(const Matroid& m);

/// Sum of modular defects over all unordered pairs of distinct flats;
/// zero exactly for modular matroids.
long long matroid_modular_defect(const Matroid& m);

// In a loopless rank-4 hypermodular matroid the non-modular pairs are
// exactly the disjoint (rank-3, rank-2) pairs and the disjoint
// (rank-2, rank-2) pairs whose union has rank 3.
enum class NonModularPairKind { PlaneLine, LineLine };

const char* pair_kind_name(NonModularPairKind k);

struct ClassifiedPair {
  PairDefectReport pair;  // pair.x has the larger rank
  NonModularPairKind kind = NonModularPairKind::PlaneLine;
};

/// All non-modular pairs of flats, classified. Preconditions: loopless,
/// rank 4, hypermodular (PreconditionViolated otherwise). PlaneLine pairs
/// come first; both groups in canonical (x, y) order.
std::vector<ClassifiedPair> nonmodular_pairs(const Matroid& m);

/// Number of rank-3 flats containing a rank-2 flat of a loopless rank-4
/// matroid. Throws NotRank2Flat.
int planes_through_line_count(const Matroid& m, Subset line);

/// Shared precondition check for the rank-4 structure results; throws
/// PreconditionViolated with `who` in the message.
void require_rank4_loopless_hypermodular(const Matroid& m, const char* who);

}  // namespace matroidlab
