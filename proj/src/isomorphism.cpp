#include "matroidlab/isomorphism.hpp"

#include <algorithm>
#include <map>

namespace matroidlab {

namespace {

// Per-element invariant: for each rank, the sorted sizes of the flats of
// that rank containing the element.
std::vector<std::vector<int>> element_signature(const Matroid& m, int e) {
  std::vector<std::vector<int>> sig(m.rank() + 1);
  for (int k = 0; k <= m.rank(); ++k) {
    for (Subset f : m.flats_of_rank(k))
      if (test_bit(f, e)) sig[k].push_back(popcount(f));
    std::sort(sig[k].begin(), sig[k].end());
  }
  return sig;
}

struct Side {
  const Matroid& m;
  std::vector<Subset> pair_cl;    // n*n closure masks of {a,b}
  std::vector<Subset> triple_cl;  // n*n*n closure masks of {a,b,c}
  int n;

  explicit Side(const Matroid& mm) : m(mm), n(mm.size()) {
    pair_cl.assign(static_cast<size_t>(n) * n, 0);
    for (int a = 0; a < n; ++a)
      for (int b = a; b < n; ++b) {
        Subset cl = m.closure(single(a) | single(b));
        pair_cl[a * n + b] = pair_cl[b * n + a] = cl;
      }
    triple_cl.assign(static_cast<size_t>(n) * n * n, 0);
    for (int a = 0; a < n; ++a)
      for (int b = a; b < n; ++b)
        for (int c = b; c < n; ++c) {
          Subset cl = m.closure(pair_cl[a * n + b] | single(c));
          size_t perms[6] = {
              (static_cast<size_t>(a) * n + b) * n + c, (static_cast<size_t>(a) * n + c) * n + b,
              (static_cast<size_t>(b) * n + a) * n + c, (static_cast<size_t>(b) * n + c) * n + a,
              (static_cast<size_t>(c) * n + a) * n + b, (static_cast<size_t>(c) * n + b) * n + a};
          for (size_t p : perms) triple_cl[p] = cl;
        }
  }

  Subset pcl(int a, int b) const { return pair_cl[a * n + b]; }
  Subset tcl(int a, int b, int c) const {
    return triple_cl[(static_cast<size_t>(a) * n + b) * n + c];
  }
};

bool tables_match(const Matroid& a, const Matroid& b, const std::vector<int>& perm) {
  for (int k = 0; k <= a.rank(); ++k) {
    std::vector<Subset> mapped;
    for (Subset f : a.flats_of_rank(k)) {
      Subset g = 0;
      for_each_element(f, [&](int e) { g |= single(perm[e]); });
      mapped.push_back(g);
    }
    std::sort(mapped.begin(), mapped.end());
    if (mapped != b.flats_of_rank(k)) return false;
  }
  return true;
}

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const Matroid& a, const Matroid& b,
                                                 long long node_budget) {
  if (a.size() != b.size() || a.rank() != b.rank()) return std::nullopt;
  if (a.flat_count() != b.flat_count()) return std::nullopt;
  for (int k = 0; k <= a.rank(); ++k) {
    auto sizes = [](const std::vector<Subset>& level) {
      std::vector<int> out;
      for (Subset f : level) out.push_back(popcount(f));
      std::sort(out.begin(), out.end());
      return out;
    };
    if (a.flats_of_rank(k).size() != b.flats_of_rank(k).size()) return std::nullopt;
    if (sizes(a.flats_of_rank(k)) != sizes(b.flats_of_rank(k))) return std::nullopt;
  }

  const int n = a.size();
  if (n == 0) return std::vector<int>{};

  // Candidate targets by signature.
  std::map<std::vector<std::vector<int>>, std::vector<int>> sig_to_b;
  for (int e = 0; e < n; ++e) sig_to_b[element_signature(b, e)].push_back(e);
  std::vector<std::vector<int>> candidates(n);
  for (int e = 0; e < n; ++e) {
    auto it = sig_to_b.find(element_signature(a, e));
    if (it == sig_to_b.end()) return std::nullopt;
    candidates[e] = it->second;
  }

  Side sa(a), sb(b);
  std::vector<int> perm(n, -1);
  std::vector<bool> used(n, false);
  long long nodes = 0;

  // Depth-first over elements in index order; prune with closure-size and
  // rank agreement on pairs, triples and quadruples against the prefix.
  auto consistent = [&](int depth, int target) {
    for (int j = 0; j < depth; ++j) {
      Subset ca = sa.pcl(j, depth), cb = sb.pcl(perm[j], target);
      if (popcount(ca) != popcount(cb)) return false;
      if (a.flat_rank(ca) != b.flat_rank(cb)) return false;
    }
    for (int j = 0; j < depth; ++j) {
      for (int k = j + 1; k < depth; ++k) {
        Subset ca = sa.tcl(j, k, depth), cb = sb.tcl(perm[j], perm[k], target);
        if (popcount(ca) != popcount(cb)) return false;
        if (a.flat_rank(ca) != b.flat_rank(cb)) return false;
        // Quadruples: l in cl{j,k,depth} must match.
        for (int l = 0; l < depth; ++l) {
          if (l == j || l == k) continue;
          if (test_bit(ca, l) != test_bit(cb, perm[l])) return false;
        }
      }
    }
    return true;
  };

  std::optional<std::vector<int>> found;
  auto dfs = [&](auto&& self, int depth) -> bool {
    if (depth == n) {
      if (tables_match(a, b, perm)) {
        found = perm;
        return true;
      }
      return false;
    }
    for (int target : candidates[depth]) {
      if (used[target]) continue;
      if (++nodes > node_budget)
        fail(Errc::BudgetExceeded, "isomorphism search exceeded its node budget");
      if (!consistent(depth, target)) continue;
      perm[depth] = target;
      used[target] = true;
      if (self(self, depth + 1)) return true;
      perm[depth] = -1;
      used[target] = false;
    }
    return false;
  };
  dfs(dfs, 0);
  return found;
}

bool is_isomorphic(const Matroid& a, const Matroid& b, long long node_budget) {
  return find_isomorphism(a, b, node_budget).has_value();
}

}  // namespace matroidlab
