#include "matroidlab/matroid.hpp"

#include <algorithm>
#include <cstdlib>
#include <queue>
#include <set>
#include <sstream>
#include <unordered_set>

namespace matroidlab {

int max_ground_size() {
  static const int cap = [] {
    if (const char* env = std::getenv("MATROID_MAX_N")) {
      char* end = nullptr;
      long v = std::strtol(env, &end, 10);
      if (end != env && *end == '\0' && v >= 0 && v <= kMaxGroundSize)
        return static_cast<int>(v);
    }
    return kMaxGroundSize;
  }();
  return cap;
}

GroundSet::GroundSet(int size) : n(size) {
  if (n < 0 || n > max_ground_size()) {
    fail(Errc::ValidationError,
         "ground set size " + std::to_string(n) + " outside [0, " +
             std::to_string(max_ground_size()) + "]");
  }
}

namespace {

void sort_level(std::vector<Subset>& level) { std::sort(level.begin(), level.end()); }

std::string flat_str(Subset f) { return subset_to_string(f); }

}  // namespace

Matroid::Matroid() : flats_by_rank_{{kEmptySet}}, all_flats_{kEmptySet} {
  flat_rank_.emplace(kEmptySet, 0);
}

Matroid Matroid::from_flats(int n, std::vector<std::vector<Subset>> flats_by_rank,
                            std::vector<std::string> labels) {
  GroundSet ground(n);
  const Subset full = ground.all();

  if (flats_by_rank.empty()) fail(Errc::EmptyFamily, "no flats given");
  for (auto& level : flats_by_rank) {
    if (level.empty()) fail(Errc::ValidationError, "empty rank level in flats table");
    sort_level(level);
  }
  const int top_rank = static_cast<int>(flats_by_rank.size()) - 1;

  Matroid m;
  m.all_flats_.clear();
  m.flat_rank_.clear();
  m.n_ = n;
  m.rank_ = top_rank;
  m.flats_by_rank_ = std::move(flats_by_rank);
  for (int k = 0; k <= top_rank; ++k) {
    for (Subset f : m.flats_by_rank_[k]) {
      if (!is_subset(f, full))
        fail(Errc::ValidationError, "flat " + flat_str(f) + " outside the ground set");
      if (!m.flat_rank_.emplace(f, k).second)
        fail(Errc::ValidationError, "duplicate flat " + flat_str(f));
      m.all_flats_.push_back(f);
    }
  }

  if (m.flats_by_rank_[0].size() != 1)
    fail(Errc::ValidationError, "expected exactly one rank-0 flat");
  if (m.flats_by_rank_[top_rank].size() != 1 || m.flats_by_rank_[top_rank][0] != full)
    fail(Errc::ValidationError, "the unique top flat must be the full ground set");
  const Subset bottom = m.flats_by_rank_[0][0];
  for (Subset f : m.all_flats_) {
    if (!is_subset(bottom, f))
      fail(Errc::ValidationError,
           "rank-0 flat " + flat_str(bottom) + " not contained in flat " + flat_str(f));
  }

  // (F1): pairwise intersections of flats are flats.
  const auto& flats = m.all_flats_;
  for (size_t i = 0; i < flats.size(); ++i) {
    for (size_t j = i + 1; j < flats.size(); ++j) {
      Subset meet = flats[i] & flats[j];
      if (!m.flat_rank_.count(meet)) {
        fail(Errc::F1Violated, "intersection of flats " + flat_str(flats[i]) + " and " +
                                   flat_str(flats[j]) + " = " + flat_str(meet) +
                                   " is not a flat");
      }
    }
  }

  // (F2'): for every flat L, the minimal flats properly containing L
  // partition E - L. Minimal proper supersets double as the cover relation,
  // so the rank grading is checked in the same pass.
  for (Subset l : flats) {
    std::vector<Subset> above;
    for (Subset g : flats)
      if (is_proper_subset(l, g)) above.push_back(g);
    std::vector<Subset> minimal;
    for (Subset g : above) {
      bool is_min = true;
      for (Subset h : above) {
        if (h != g && is_proper_subset(h, g)) {
          is_min = false;
          break;
        }
      }
      if (is_min) minimal.push_back(g);
    }
    Subset covered = 0;
    for (Subset g : minimal) {
      Subset diff = g & ~l;
      if (covered & diff) {
        fail(Errc::F2PrimeViolated,
             "minimal flats above " + flat_str(l) + " overlap on " +
                 flat_str(covered & diff));
      }
      covered |= diff;
    }
    if (covered != (full & ~l)) {
      fail(Errc::F2PrimeViolated,
           "minimal flats above " + flat_str(l) + " cover " + flat_str(covered) +
               " instead of " + flat_str(full & ~l));
    }
    for (Subset g : minimal) {
      if (m.flat_rank_.at(g) != m.flat_rank_.at(l) + 1) {
        fail(Errc::RankTableMismatch,
             "flat " + flat_str(g) + " covers " + flat_str(l) +
                 " but their table ranks differ by more than one");
      }
    }
  }

  if (!labels.empty()) {
    if (static_cast<int>(labels.size()) != n)
      fail(Errc::ValidationError, "label count does not match element count");
    std::unordered_set<std::string> seen(labels.begin(), labels.end());
    if (static_cast<int>(seen.size()) != n)
      fail(Errc::ValidationError, "duplicate element labels");
    m.labels_ = std::move(labels);
  }
  return m;
}

int Matroid::rank_of(Subset x) const {
  if (!is_subset(x, ground()))
    fail(Errc::ValidationError, "subset " + flat_str(x) + " outside the ground set");
  for (int k = 0; k <= rank_; ++k) {
    for (Subset f : flats_by_rank_[k]) {
      if (is_subset(x, f)) return k;
    }
  }
  fail(Errc::InternalInvariant, "no flat contains " + flat_str(x));
}

Subset Matroid::closure(Subset x) const {
  if (!is_subset(x, ground()))
    fail(Errc::ValidationError, "subset " + flat_str(x) + " outside the ground set");
  for (int k = 0; k <= rank_; ++k) {
    for (Subset f : flats_by_rank_[k]) {
      if (is_subset(x, f)) return f;
    }
  }
  fail(Errc::InternalInvariant, "no flat contains " + flat_str(x));
}

int Matroid::flat_rank(Subset f) const {
  auto it = flat_rank_.find(f);
  if (it == flat_rank_.end()) fail(Errc::NotAFlat, flat_str(f) + " is not a flat");
  return it->second;
}

void Matroid::require_flat(Subset f) const {
  if (!is_flat(f)) fail(Errc::NotAFlat, flat_str(f) + " is not a flat");
}

std::vector<Subset> Matroid::corank_flats(int corank) const {
  int k = rank_ - corank;
  if (k < 0 || k > rank_) return {};
  return flats_by_rank_[k];
}

std::string Matroid::label_of(int e) const {
  if (e < 0 || e >= n_) fail(Errc::ValidationError, "element index out of range");
  return labels_.empty() ? std::to_string(e) : labels_[e];
}

Matroid Matroid::with_labels(std::vector<std::string> labels) const {
  return from_flats(n_, flats_by_rank_, std::move(labels));
}

bool Matroid::operator<(const Matroid& other) const {
  if (n_ != other.n_) return n_ < other.n_;
  if (rank_ != other.rank_) return rank_ < other.rank_;
  return flats_by_rank_ < other.flats_by_rank_;
}

Matroid Matroid::from_rank_fn(int n, const std::function<int(Subset)>& rank,
                              std::vector<std::string> labels) {
  GroundSet ground(n);
  const Subset full = ground.all();

  auto close = [&](Subset x) {
    int r = rank(x);
    Subset out = x;
    for_each_element(full & ~x, [&](int e) {
      if (rank(x | single(e)) == r) out |= single(e);
    });
    return out;
  };

  // Closure saturation: every flat is reachable from cl(emptyset) by
  // closing one-element augmentations.
  std::set<Subset> seen;
  std::queue<Subset> todo;
  Subset bottom = close(kEmptySet);
  seen.insert(bottom);
  todo.push(bottom);
  int top_rank = rank(full);
  std::vector<std::vector<Subset>> table(top_rank + 1);
  while (!todo.empty()) {
    Subset f = todo.front();
    todo.pop();
    int r = rank(f);
    if (r < 0 || r > top_rank)
      fail(Errc::ValidationError, "rank function out of range on " + flat_str(f));
    table[r].push_back(f);
    for_each_element(full & ~f, [&](int e) {
      Subset g = close(f | single(e));
      if (seen.insert(g).second) todo.push(g);
    });
  }
  return from_flats(n, std::move(table), std::move(labels));
}

Matroid Matroid::from_bases(int n, const std::vector<Subset>& bases,
                            std::vector<std::string> labels) {
  GroundSet ground(n);
  const Subset full = ground.all();
  if (bases.empty()) fail(Errc::EmptyFamily, "no bases given");

  std::vector<Subset> fam;
  std::set<Subset> dedup(bases.begin(), bases.end());
  fam.assign(dedup.begin(), dedup.end());
  const int r = popcount(fam.front());
  for (Subset b : fam) {
    if (!is_subset(b, full))
      fail(Errc::ValidationError, "basis " + flat_str(b) + " outside the ground set");
    if (popcount(b) != r)
      fail(Errc::NotEquicardinal, "bases " + flat_str(fam.front()) + " and " +
                                      flat_str(b) + " differ in size");
  }

  // Basis exchange: for all B1, B2 and x in B1 - B2 there is y in B2 - B1
  // with B1 - x + y a basis.
  for (Subset b1 : fam) {
    for (Subset b2 : fam) {
      if (b1 == b2) continue;
      bool violated = false;
      int bad_x = -1;
      for_each_element(b1 & ~b2, [&](int x) {
        if (violated) return;
        bool found = false;
        for_each_element(b2 & ~b1, [&](int y) {
          if (!found && dedup.count((b1 & ~single(x)) | single(y))) found = true;
        });
        if (!found) {
          violated = true;
          bad_x = x;
        }
      });
      if (violated) {
        fail(Errc::ExchangeAxiomViolated,
             "no exchange for element " + std::to_string(bad_x) + " of basis " +
                 flat_str(b1) + " against basis " + flat_str(b2));
      }
    }
  }

  auto rank = [fam](Subset x) {
    int best = 0;
    for (Subset b : fam) best = std::max(best, popcount(b & x));
    return best;
  };
  return from_rank_fn(n, rank, std::move(labels));
}

Matroid Matroid::from_circuits(int n, const std::vector<Subset>& circuits,
                               std::vector<std::string> labels) {
  GroundSet ground(n);
  const Subset full = ground.all();

  std::set<Subset> dedup(circuits.begin(), circuits.end());
  std::vector<Subset> fam(dedup.begin(), dedup.end());
  for (Subset c : fam) {
    if (!is_subset(c, full))
      fail(Errc::ValidationError, "circuit " + flat_str(c) + " outside the ground set");
    if (c == kEmptySet) fail(Errc::CircuitAxiomViolated, "the empty set cannot be a circuit");
  }
  for (Subset c1 : fam) {
    for (Subset c2 : fam) {
      if (c1 != c2 && is_subset(c1, c2))
        fail(Errc::CircuitAxiomViolated,
             "circuit " + flat_str(c1) + " contained in circuit " + flat_str(c2));
    }
  }
  // Weak elimination.
  for (Subset c1 : fam) {
    for (Subset c2 : fam) {
      if (c1 >= c2) continue;
      Subset common = c1 & c2;
      bool bad = false;
      int bad_e = -1;
      for_each_element(common, [&](int e) {
        if (bad) return;
        Subset pool = (c1 | c2) & ~single(e);
        bool found = false;
        for (Subset c3 : fam) {
          if (is_subset(c3, pool)) {
            found = true;
            break;
          }
        }
        if (!found) {
          bad = true;
          bad_e = e;
        }
      });
      if (bad) {
        fail(Errc::CircuitAxiomViolated,
             "no circuit inside " + flat_str((c1 | c2) & ~single(bad_e)) +
                 " eliminating element " + std::to_string(bad_e) + " from " +
                 flat_str(c1) + " and " + flat_str(c2));
      }
    }
  }

  auto independent = [fam](Subset x) {
    for (Subset c : fam)
      if (is_subset(c, x)) return false;
    return true;
  };
  // Greedy rank over the independence oracle.
  auto rank = [independent](Subset x) {
    Subset acc = 0;
    for_each_element(x, [&](int e) {
      if (independent(acc | single(e))) acc |= single(e);
    });
    return popcount(acc);
  };
  return from_rank_fn(n, rank, std::move(labels));
}

namespace {

// Order-preserving compaction of the elements of `keep` to 0..|keep|-1.
std::vector<int> compaction_map(int n, Subset keep) {
  std::vector<int> map(n, -1);
  int next = 0;
  for (int i = 0; i < n; ++i)
    if (test_bit(keep, i)) map[i] = next++;
  return map;
}

Subset remap(Subset s, const std::vector<int>& map) {
  Subset out = 0;
  for_each_element(s, [&](int e) {
    if (map[e] >= 0) out |= single(map[e]);
  });
  return out;
}

std::vector<std::string> sliced_labels(const Matroid& m, Subset keep) {
  if (m.labels().empty()) return {};
  std::vector<std::string> out;
  for (int i = 0; i < m.size(); ++i)
    if (test_bit(keep, i)) out.push_back(m.labels()[i]);
  return out;
}

}  // namespace

Matroid contract(const Matroid& m, Subset flat) {
  m.require_flat(flat);
  const int base_rank = m.flat_rank(flat);
  const Subset keep = m.ground() & ~flat;
  const auto map = compaction_map(m.size(), keep);

  std::vector<std::vector<Subset>> table(m.rank() - base_rank + 1);
  for (int k = base_rank; k <= m.rank(); ++k) {
    for (Subset g : m.flats_of_rank(k)) {
      if (is_subset(flat, g)) table[k - base_rank].push_back(remap(g & keep, map));
    }
  }
  return Matroid::from_flats(popcount(keep), std::move(table), sliced_labels(m, keep));
}

Matroid delete_elements(const Matroid& m, Subset d) {
  if (!is_subset(d, m.ground()))
    fail(Errc::ValidationError, "deleted set outside the ground set");
  const Subset keep = m.ground() & ~d;
  const auto map = compaction_map(m.size(), keep);

  // Flats of the restriction are the traces F & keep of flats F; the trace's
  // rank is its rank in m.
  std::set<Subset> seen;
  const int new_rank = m.rank_of(keep);
  std::vector<std::vector<Subset>> table(new_rank + 1);
  for (Subset f : m.all_flats()) {
    Subset a = f & keep;
    if (!seen.insert(a).second) continue;
    table[m.rank_of(a)].push_back(remap(a, map));
  }
  return Matroid::from_flats(popcount(keep), std::move(table), sliced_labels(m, keep));
}

Matroid restrict_to(const Matroid& m, Subset keep) {
  if (!is_subset(keep, m.ground()))
    fail(Errc::ValidationError, "restriction set outside the ground set");
  return delete_elements(m, m.ground() & ~keep);
}

std::string fresh_element_label(const std::vector<std::string>& taken, int index) {
  std::string label = "e" + std::to_string(index);
  while (std::find(taken.begin(), taken.end(), label) != taken.end()) label += '_';
  return label;
}

Matroid direct_sum_loops(const Matroid& m, int k) {
  if (k < 0) fail(Errc::ValidationError, "negative loop count");
  GroundSet ground(m.size() + k);  // cap check
  if (k == 0) return m;
  const Subset loop_block = full_set(k) << m.size();
  std::vector<std::vector<Subset>> table = m.flats_by_rank();
  for (auto& level : table)
    for (Subset& f : level) f |= loop_block;
  std::vector<std::string> labels = m.labels();
  if (!labels.empty()) {
    for (int i = 0; i < k; ++i)
      labels.push_back(fresh_element_label(labels, m.size() + i));
  }
  return Matroid::from_flats(ground.n, std::move(table), std::move(labels));
}

Matroid relabel(const Matroid& m, const std::vector<int>& perm) {
  const int n = m.size();
  if (static_cast<int>(perm.size()) != n)
    fail(Errc::ValidationError, "permutation size does not match ground set");
  std::vector<bool> hit(n, false);
  for (int p : perm) {
    if (p < 0 || p >= n || hit[p]) fail(Errc::ValidationError, "not a permutation");
    hit[p] = true;
  }
  std::vector<std::vector<Subset>> table(m.rank() + 1);
  for (int k = 0; k <= m.rank(); ++k) {
    for (Subset f : m.flats_of_rank(k)) {
      Subset g = 0;
      for_each_element(f, [&](int e) { g |= single(perm[e]); });
      table[k].push_back(g);
    }
  }
  std::vector<std::string> labels;
  if (!m.labels().empty()) {
    labels.resize(n);
    for (int i = 0; i < n; ++i) labels[perm[i]] = m.labels()[i];
  }
  return Matroid::from_flats(n, std::move(table), std::move(labels));
}

}  // namespace matroidlab
