#pragma once

#include <vector>

#include "matroidlab/matroid.hpp"

namespace matroidlab {

/// The geometric lattice of a matroid: all flats with the cover relation.
/// Graded; the meet of two nodes is set intersection.
struct FlatLattice {
  struct Node {
    Subset flat;
    int rank;
  };

  std::vector<Node> nodes;  // canonical order (rank, mask)
  std::vector<std::vector<int>> upper_covers;
  int bottom = 0;
  int top = 0;

  int node_count() const { return static_cast<int>(nodes.size()); }
  int cover_count() const;
  int index_of(Subset flat) const;  // -1 when absent
  int meet(int a, int b) const;     // index of nodes[a].flat & nodes[b].flat
};

FlatLattice lattice(const Matroid& m);

}  // namespace matroidlab
