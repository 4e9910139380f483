#include "matroidlab/lattice.hpp"

#include <algorithm>
#include <unordered_map>

namespace matroidlab {

namespace {
std::unordered_map<Subset, int> index_map(const std::vector<FlatLattice::Node>& nodes) {
  std::unordered_map<Subset, int> out;
  for (int i = 0; i < static_cast<int>(nodes.size()); ++i) out.emplace(nodes[i].flat, i);
  return out;
}
}  // namespace

int FlatLattice::cover_count() const {
  int total = 0;
  for (const auto& ups : upper_covers) total += static_cast<int>(ups.size());
  return total;
}

int FlatLattice::index_of(Subset flat) const {
  for (int i = 0; i < node_count(); ++i)
    if (nodes[i].flat == flat) return i;
  return -1;
}

int FlatLattice::meet(int a, int b) const {
  return index_of(nodes[a].flat & nodes[b].flat);
}

FlatLattice lattice(const Matroid& m) {
  FlatLattice l;
  for (int k = 0; k <= m.rank(); ++k) {
    for (Subset f : m.flats_of_rank(k)) l.nodes.push_back({f, k});
  }
  auto idx = index_map(l.nodes);
  l.upper_covers.resize(l.nodes.size());
  // In a graded lattice the covers of a flat are exactly the flats of the
  // next rank containing it.
  for (int i = 0; i < l.node_count(); ++i) {
    const auto& node = l.nodes[i];
    if (node.rank == m.rank()) continue;
    for (Subset g : m.flats_of_rank(node.rank + 1)) {
      if (is_subset(node.flat, g)) l.upper_covers[i].push_back(idx.at(g));
    }
  }
  l.bottom = idx.at(m.loops());
  l.top = idx.at(m.ground());
  return l;
}

}  // namespace matroidlab
