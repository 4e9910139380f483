#pragma once

#include <functional>
#include <string>
#include <unordered_map>
#include <vector>

#include "matroidlab/errors.hpp"
#include "matroidlab/subset.hpp"

namespace matroidlab {

// Hard representation cap (bit width); can be lowered with MATROID_MAX_N.
// Exhaustive algorithms are exponential in n, the practical ceiling for
// completion runs is around n = 16 plus catalog projective spaces.
int max_ground_size();

struct GroundSet {
  int n = 0;
  explicit GroundSet(int size);
  Subset all() const { return full_set(n); }
};

/// A finite matroid on elements 0..n-1, canonically represented by its
/// flats grouped by rank. Construction validates the lattice axioms:
/// pairwise intersections of flats are flats, and for every flat L the
/// minimal flats properly containing L partition the remaining elements.
/// Instances are immutable and safe for concurrent reads.
class Matroid {
 public:
  /// The empty matroid (no elements, rank 0).
  Matroid();

  /// Validates the axioms and the rank grading; throws Error on violation
  /// (F1Violated / F2PrimeViolated / RankTableMismatch / ValidationError).
  static Matroid from_flats(int n, std::vector<std::vector<Subset>> flats_by_rank,
                            std::vector<std::string> labels = {});

  /// Checks nonemptiness, equicardinality and basis exchange, then derives
  /// the flats table by closure saturation.
  static Matroid from_bases(int n, const std::vector<Subset>& bases,
                            std::vector<std::string> labels = {});

  /// Checks the circuit axioms (antichain, weak elimination), then derives
  /// the flats table. Exponential in n; guarded by max_ground_size().
  static Matroid from_circuits(int n, const std::vector<Subset>& circuits,
                               std::vector<std::string> labels = {});

  /// Builds the flats table of the matroid whose rank function is `rank`
  /// by closure saturation from cl(emptyset). The function must be a valid
  /// matroid rank function; the resulting table is fully re-validated.
  static Matroid from_rank_fn(int n, const std::function<int(Subset)>& rank,
                              std::vector<std::string> labels = {});

  int size() const { return n_; }
  int rank() const { return rank_; }
  Subset ground() const { return full_set(n_); }
  Subset loops() const { return flats_by_rank_[0][0]; }
  bool loopless() const { return loops() == kEmptySet; }
  int corank_of(Subset x) const { return rank_ - rank_of(x); }

  /// Rank of the smallest flat containing x.
  int rank_of(Subset x) const;
  /// The smallest flat containing x.
  Subset closure(Subset x) const;

  bool is_flat(Subset f) const { return flat_rank_.count(f) != 0; }
  /// Rank of a flat; throws NotAFlat.
  int flat_rank(Subset f) const;
  void require_flat(Subset f) const;

  const std::vector<std::vector<Subset>>& flats_by_rank() const { return flats_by_rank_; }
  const std::vector<Subset>& flats_of_rank(int k) const { return flats_by_rank_[k]; }
  /// All flats in canonical order (ascending rank, then ascending mask).
  const std::vector<Subset>& all_flats() const { return all_flats_; }
  int flat_count() const { return static_cast<int>(all_flats_.size()); }
  /// Flats of rank rank() - corank; empty when out of range.
  std::vector<Subset> corank_flats(int corank) const;
  std::vector<Subset> hyperplanes() const { return corank_flats(1); }

  /// Optional user-facing element names; empty when defaulted. Structural
  /// comparison ignores labels.
  const std::vector<std::string>& labels() const { return labels_; }
  std::string label_of(int e) const;
  Matroid with_labels(std::vector<std::string> labels) const;

  bool operator==(const Matroid& other) const {
    return n_ == other.n_ && flats_by_rank_ == other.flats_by_rank_;
  }
  bool operator!=(const Matroid& other) const { return !(*this == other); }
  bool operator<(const Matroid& other) const;  // arbitrary total order, for dedup

 private:
  int n_ = 0;
  int rank_ = 0;
  std::vector<std::vector<Subset>> flats_by_rank_;
  std::vector<Subset> all_flats_;
  std::unordered_map<Subset, int> flat_rank_;
  std::vector<std::string> labels_;
};

/// Contraction by a flat: matroid on E - F with rank(X) = r(X u F) - r(F).
/// Elements are re-indexed compactly, preserving order. Throws NotAFlat.
Matroid contract(const Matroid& m, Subset flat);

/// Deletion: matroid on E - d with the restricted rank function; elements
/// re-indexed compactly, preserving order.
Matroid delete_elements(const Matroid& m, Subset d);

/// restrict_to(m, x) == delete_elements(m, E - x).
Matroid restrict_to(const Matroid& m, Subset keep);

/// Appends k loop elements at indices n..n+k-1; ranks unchanged.
Matroid direct_sum_loops(const Matroid& m, int k);

/// Image of m under the permutation perm (element i becomes perm[i]).
Matroid relabel(const Matroid& m, const std::vector<int>& perm);

/// "e<index>", with underscores appended until it avoids `taken`.
std::string fresh_element_label(const std::vector<std::string>& taken, int index);

}  // namespace matroidlab
