#include "matroidlab/modularity.hpp"

#include <algorithm>

namespace matroidlab {

PairDefectReport modular_defect_pair(const Matroid& m, Subset x, Subset y) {
  m.require_flat(x);
  m.require_flat(y);
  PairDefectReport r;
  r.x = x;
  r.y = y;
  r.rank_x = m.flat_rank(x);
  r.rank_y = m.flat_rank(y);
  r.rank_union = m.rank_of(x | y);
  r.rank_meet = m.flat_rank(x & y);  // an intersection of flats is a flat
  r.defect = r.rank_x + r.rank_y - r.rank_union - r.rank_meet;
  return r;
}

bool is_modular_pair(const Matroid& m, Subset x, Subset y) {
  return modular_defect_pair(m, x, y).defect == 0;
}

bool is_modular_flat(const Matroid& m, Subset f) {
  m.require_flat(f);
  for (Subset l : m.all_flats()) {
    if (modular_defect_pair(m, f, l).defect != 0) return false;
  }
  return true;
}

std::optional<PairDefectReport> modularity_witness(const Matroid& m) {
  const auto& flats = m.all_flats();
  for (size_t i = 0; i < flats.size(); ++i) {
    for (size_t j = i + 1; j < flats.size(); ++j) {
      auto rep = modular_defect_pair(m, flats[i], flats[j]);
      if (rep.defect != 0) return rep;
    }
  }
  return std::nullopt;
}

bool is_modular(const Matroid& m) { return !modularity_witness(m).has_value(); }

std::optional<PairDefectReport> hypermodularity_witness(const Matroid& m) {
  if (m.rank() < 3) fail(Errc::RankTooSmall, "hypermodularity needs rank >= 3");
  const auto hyper = m.corank_flats(1);
  for (size_t i = 0; i < hyper.size(); ++i) {
    for (size_t j = i + 1; j < hyper.size(); ++j) {
      auto rep = modular_defect_pair(m, hyper[i], hyper[j]);
      if (rep.defect != 0) return rep;
    }
  }
  return std::nullopt;
}

bool is_hypermodular(const Matroid& m) { return !hypermodularity_witness(m).has_value(); }

long long matroid_modular_defect(const Matroid& m) {
  long long total = 0;
  const auto& flats = m.all_flats();
  for (size_t i = 0; i < flats.size(); ++i) {
    for (size_t j = i + 1; j < flats.size(); ++j) {
      total += modular_defect_pair(m, flats[i], flats[j]).defect;
    }
  }
  return total;
}

const char* pair_kind_name(NonModularPairKind k) {
  return k == NonModularPairKind::PlaneLine ? "plane-line" : "line-line";
}

void require_rank4_loopless_hypermodular(const Matroid& m, const char* who) {
  if (m.rank() != 4)
    fail(Errc::PreconditionViolated, std::string(who) + " needs a rank-4 matroid");
  if (!m.loopless())
    fail(Errc::PreconditionViolated, std::string(who) + " needs a loopless matroid");
  if (auto w = hypermodularity_witness(m)) {
    fail(Errc::PreconditionViolated,
         std::string(who) + " needs a hypermodular matroid; hyperplanes " +
             subset_to_string(w->x) + " and " + subset_to_string(w->y) +
             " have defect " + std::to_string(w->defect));
  }
}

std::vector<ClassifiedPair> nonmodular_pairs(const Matroid& m) {
  require_rank4_loopless_hypermodular(m, "nonmodular_pairs");

  std::vector<ClassifiedPair> out;
  const auto& flats = m.all_flats();
  for (size_t i = 0; i < flats.size(); ++i) {
    for (size_t j = i + 1; j < flats.size(); ++j) {
      Subset a = flats[i], b = flats[j];
      if (m.flat_rank(a) < m.flat_rank(b)) std::swap(a, b);
      auto rep = modular_defect_pair(m, a, b);
      if (rep.defect == 0) continue;
      ClassifiedPair cp;
      cp.pair = rep;
      if ((rep.x & rep.y) == 0 && rep.rank_x == 3 && rep.rank_y == 2) {
        cp.kind = NonModularPairKind::PlaneLine;
      } else if ((rep.x & rep.y) == 0 && rep.rank_x == 2 && rep.rank_y == 2 &&
                 rep.rank_union == 3) {
        cp.kind = NonModularPairKind::LineLine;
      } else {
        fail(Errc::InternalInvariant,
             "non-modular pair " + subset_to_string(rep.x) + ", " + subset_to_string(rep.y) +
                 " does not match the rank-4 hypermodular classification");
      }
      out.push_back(cp);
    }
  }
  std::sort(out.begin(), out.end(), [](const ClassifiedPair& a, const ClassifiedPair& b) {
    if (a.kind != b.kind) return a.kind == NonModularPairKind::PlaneLine;
    if (a.pair.x != b.pair.x) return a.pair.x < b.pair.x;
    return a.pair.y < b.pair.y;
  });
  return out;
}

int planes_through_line_count(const Matroid& m, Subset line) {
  if (m.rank() != 4 || !m.loopless())
    fail(Errc::PreconditionViolated, "planes_through_line_count needs a loopless rank-4 matroid");
  if (!m.is_flat(line) || m.flat_rank(line) != 2)
    fail(Errc::NotRank2Flat, subset_to_string(line) + " is not a rank-2 flat");
  int count = 0;
  for (Subset f : m.flats_of_rank(3)) {
    if (is_subset(line, f)) ++count;
  }
  return count;
}

}  // namespace matroidlab
