#include "matroidlab/amalgam.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

#include "matroidlab/extension.hpp"

namespace matroidlab {

std::vector<ModularCut> all_modular_cuts(const Matroid& m, const SearchBudget& budget) {
  const auto hyperplanes = m.corank_flats(1);
  const int h_count = static_cast<int>(hyperplanes.size());
  if (h_count > 64)
    fail(Errc::BudgetExceeded, "modular cut enumeration supports at most 64 hyperplanes");

  // Nonempty modular cuts correspond to the closed hyperplane sets: when
  // two members intersect in a corank-2 flat, every corank-1 flat above
  // that intersection joins. Sets are masks over hyperplane indices;
  // force[i][j] is what the pair {i, j} pulls in.
  std::vector<std::vector<std::uint64_t>> force(h_count,
                                                std::vector<std::uint64_t>(h_count, 0));
  for (int i = 0; i < h_count; ++i) {
    for (int j = i + 1; j < h_count; ++j) {
      Subset t = hyperplanes[i] & hyperplanes[j];
      if (m.rank() - m.flat_rank(t) != 2) continue;
      std::uint64_t mask = 0;
      for (int k = 0; k < h_count; ++k)
        if (is_subset(t, hyperplanes[k])) mask |= std::uint64_t{1} << k;
      force[i][j] = force[j][i] = mask;
    }
  }
  auto close = [&](std::uint64_t s) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::uint64_t a = s; a; a &= a - 1) {
        int i = std::countr_zero(a);
        for (std::uint64_t b = a & (a - 1); b; b &= b - 1) {
          std::uint64_t add = force[i][std::countr_zero(b)] & ~s;
          if (add) {
            s |= add;
            changed = true;
          }
        }
      }
    }
    return s;
  };

  // The closed sets form a closure system; breadth-first generation from
  // the closure of the empty set reaches all of them.
  std::set<std::uint64_t> closed;
  std::queue<std::uint64_t> todo;
  closed.insert(close(0));
  todo.push(close(0));
  while (!todo.empty()) {
    std::uint64_t s = todo.front();
    todo.pop();
    for (int h = 0; h < h_count; ++h) {
      if (s & (std::uint64_t{1} << h)) continue;
      std::uint64_t t = close(s | (std::uint64_t{1} << h));
      if (closed.insert(t).second) {
        if (static_cast<int>(closed.size()) > budget.max_cuts)
          fail(Errc::BudgetExceeded, "modular cut enumeration exceeded max_cuts");
        todo.push(t);
      }
    }
  }

  // over[f]: hyperplane-index mask of the corank-1 flats containing f.
  const auto& flats = m.all_flats();
  std::vector<std::uint64_t> over(flats.size(), 0);
  for (size_t fi = 0; fi < flats.size(); ++fi)
    for (int k = 0; k < h_count; ++k)
      if (is_subset(flats[fi], hyperplanes[k])) over[fi] |= std::uint64_t{1} << k;

  std::vector<ModularCut> out;
  out.push_back(make_modular_cut(m, {}));  // the empty modular cut
  for (std::uint64_t s : closed) {
    std::vector<Subset> members;
    for (size_t fi = 0; fi < flats.size(); ++fi) {
      if (flats[fi] != m.ground() && (over[fi] & ~s)) continue;
      members.push_back(flats[fi]);
    }
    out.push_back(detail::classify_unchecked(m, std::move(members)));
  }
  std::sort(out.begin(), out.end(),
            [](const ModularCut& a, const ModularCut& b) { return a.members < b.members; });
  return out;
}

std::vector<Matroid> enumerate_extensions(const Matroid& m, int k, const SearchBudget& budget) {
  if (k < 0) fail(Errc::ValidationError, "negative extension count");
  if (m.size() + k > 11)
    fail(Errc::BudgetExceeded, "extension enumeration is capped at 11 total elements");

  std::vector<Matroid> level = {m};
  for (int round = 0; round < k; ++round) {
    std::set<Matroid> next;
    for (const Matroid& cur : level) {
      for (const ModularCut& cut : all_modular_cuts(cur, budget)) {
        next.insert(extend_matroid(cur, cut));
        if (static_cast<int>(next.size()) > budget.max_extensions)
          fail(Errc::BudgetExceeded, "extension enumeration exceeded max_extensions");
      }
    }
    level.assign(next.begin(), next.end());
  }
  return level;
}

std::variant<Matroid, NoAmalgamCertificate> find_amalgam(const AmalgamProblem& problem,
                                                         const SearchBudget& budget) {
  const Matroid& m1 = problem.m1;
  const Matroid& m2 = problem.m2;
  const int shared = problem.shared;
  if (shared < 0 || shared > m1.size() || shared > m2.size())
    fail(Errc::PreconditionViolated, "shared prefix larger than a ground set");
  if (restrict_to(m1, full_set(shared)) != restrict_to(m2, full_set(shared)))
    fail(Errc::PreconditionViolated,
         "the two matroids do not restrict to the same matroid on the shared part");

  const int n1 = m1.size();
  const int n2 = m2.size();
  const int n = n1 + n2 - shared;
  if (n > 12) fail(Errc::BudgetExceeded, "amalgam search is capped at 12 union elements");

  const Subset e1_mask = full_set(n1);
  Subset e2_mask = full_set(shared);
  for (int j = shared; j < n2; ++j) e2_mask |= single(n1 + j - shared);
  auto to_m2 = [&](Subset x) {
    Subset out = x & full_set(shared);
    for (int j = shared; j < n2; ++j)
      if (test_bit(x, n1 + j - shared)) out |= single(j);
    return out;
  };

  const int size = 1 << n;
  std::vector<int> fixed(size, -1);
  for (Subset x = 0; x < static_cast<Subset>(size); ++x) {
    if (is_subset(x, e1_mask))
      fixed[x] = m1.rank_of(x);
    else if (is_subset(x, e2_mask))
      fixed[x] = m2.rank_of(to_m2(x));
  }

  // Subsets in assignment order: all proper subsets of X precede X.
  std::vector<Subset> order;
  order.reserve(size);
  for (int c = 0; c <= n; ++c)
    for (Subset x = 0; x < static_cast<Subset>(size); ++x)
      if (popcount(x) == c) order.push_back(x);

  std::vector<int> rank(size, -1);
  long long nodes = 0;

  // Unit increase plus local submodularity against assigned subsets; these
  // conditions on the full table characterize matroid rank functions.
  auto bounds = [&](Subset x, int& lo, int& hi) {
    lo = 0;
    hi = popcount(x);
    for_each_element(x, [&](int a) {
      int below = rank[x & ~single(a)];
      lo = std::max(lo, below);
      hi = std::min(hi, below + 1);
    });
    for_each_element(x, [&](int a) {
      Subset xa = x & ~single(a);
      for_each_element(xa, [&](int b) {
        if (b >= a) return;
        hi = std::min(hi, rank[xa] + rank[x & ~single(b)] - rank[xa & ~single(b)]);
      });
    });
  };

  auto dfs = [&](auto&& self, size_t pos) -> bool {
    if (pos == order.size()) return true;
    Subset x = order[pos];
    if (++nodes > budget.max_nodes)
      fail(Errc::BudgetExceeded, "amalgam search exceeded max_nodes");
    if (x == kEmptySet) {
      rank[x] = 0;
      if (self(self, pos + 1)) return true;
      rank[x] = -1;
      return false;
    }
    int lo = 0, hi = 0;
    bounds(x, lo, hi);
    if (fixed[x] >= 0) {
      if (fixed[x] < lo || fixed[x] > hi) return false;
      lo = hi = fixed[x];
    }
    for (int v = lo; v <= hi; ++v) {
      rank[x] = v;
      if (self(self, pos + 1)) return true;
    }
    rank[x] = -1;
    return false;
  };

  if (dfs(dfs, 0)) {
    Matroid witness =
        Matroid::from_rank_fn(n, [&](Subset x) { return rank[x]; });
    if (restrict_to(witness, e1_mask) != m1)
      fail(Errc::InternalInvariant, "amalgam witness does not restrict to m1");
    Matroid back = restrict_to(witness, e2_mask);
    if (back != m2)
      fail(Errc::InternalInvariant, "amalgam witness does not restrict to m2");
    return witness;
  }
  return NoAmalgamCertificate{nodes};
}

StickyProbeReport sticky_probe(const Matroid& m, const SearchBudget& budget) {
  StickyProbeReport rep;
  std::vector<Matroid> extensions;
  bool budget_hit = false;
  try {
    extensions = enumerate_extensions(m, 1, budget);
  } catch (const Error& e) {
    if (e.code() != Errc::BudgetExceeded) throw;
    rep.outcome = StickyProbeReport::Outcome::BudgetExceeded;
    return rep;
  }
  for (size_t i = 0; i < extensions.size() && !rep.witness_pair; ++i) {
    for (size_t j = i; j < extensions.size() && !rep.witness_pair; ++j) {
      AmalgamProblem p{extensions[i], extensions[j], m.size()};
      ++rep.pairs_checked;
      try {
        auto outcome = find_amalgam(p, budget);
        if (auto* cert = std::get_if<NoAmalgamCertificate>(&outcome)) {
          rep.witness_pair = {extensions[i], extensions[j]};
          rep.certificate_nodes = cert->nodes_explored;
        }
      } catch (const Error& e) {
        if (e.code() != Errc::BudgetExceeded) throw;
        budget_hit = true;
      }
    }
  }
  if (rep.witness_pair)
    rep.outcome = StickyProbeReport::Outcome::WitnessFound;
  else if (budget_hit)
    rep.outcome = StickyProbeReport::Outcome::BudgetExceeded;
  else
    rep.outcome = StickyProbeReport::Outcome::NoWitnessFound;
  return rep;
}

}  // namespace matroidlab
