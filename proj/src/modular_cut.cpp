#include "matroidlab/modular_cut.hpp"

#include <algorithm>
#include <set>

#include "matroidlab/line_geometry.hpp"

namespace matroidlab {

const char* cut_class_name(CutClass c) {
  switch (c) {
    case CutClass::Empty: return "empty";
    case CutClass::Improper: return "improper";
    case CutClass::Principal: return "principal";
    case CutClass::ProperNonPrincipal: return "proper-non-principal";
  }
  return "unknown";
}

bool ModularCut::contains(Subset f) const {
  return std::binary_search(members.begin(), members.end(), f);
}

std::vector<Subset> ModularCut::members_of_rank(const Matroid& m, int k) const {
  std::vector<Subset> out;
  for (Subset f : members)
    if (m.flat_rank(f) == k) out.push_back(f);
  return out;
}

std::optional<CutViolation> modular_cut_violation(const Matroid& m,
                                                  const std::vector<Subset>& members) {
  for (Subset f : members) m.require_flat(f);
  std::set<Subset> in(members.begin(), members.end());

  for (Subset l : in) {
    for (Subset f : m.all_flats()) {
      if (is_proper_subset(l, f) && !in.count(f))
        return CutViolation{CutViolation::Kind::NotUpwardClosed, l, f};
    }
  }
  for (Subset f : in) {
    for (Subset l : in) {
      if (f >= l) continue;
      if (is_modular_pair(m, f, l) && !in.count(f & l))
        return CutViolation{CutViolation::Kind::MissingModularMeet, f, l};
    }
  }
  return std::nullopt;
}

bool is_modular_cut(const Matroid& m, const std::vector<Subset>& members) {
  return !modular_cut_violation(m, members).has_value();
}

CutClass classify_cut(const Matroid& m, const std::vector<Subset>& members) {
  return make_modular_cut(m, members).classification;
}

ModularCut make_modular_cut(const Matroid& m, std::vector<Subset> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  if (auto v = modular_cut_violation(m, members)) {
    fail(Errc::NotAModularCut,
         v->kind == CutViolation::Kind::NotUpwardClosed
             ? "flat " + subset_to_string(v->b) + " above member " + subset_to_string(v->a) +
                   " is missing"
             : "intersection of modular pair " + subset_to_string(v->a) + ", " +
                   subset_to_string(v->b) + " is missing");
  }
  return detail::classify_unchecked(m, std::move(members));
}

ModularCut detail::classify_unchecked(const Matroid& m, std::vector<Subset> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());

  ModularCut cut;
  cut.members = std::move(members);
  if (cut.members.empty()) {
    cut.classification = CutClass::Empty;
    return cut;
  }
  if (cut.contains(m.loops())) {
    // Upward closure makes such a cut the whole lattice.
    cut.classification = CutClass::Improper;
    cut.principal_generator = m.loops();
    if (cut.size() != m.flat_count())
      fail(Errc::InternalInvariant, "cut containing the rank-0 flat is not the full lattice");
    return cut;
  }
  Subset meet = m.ground();
  for (Subset f : cut.members) meet &= f;
  if (cut.contains(meet)) {
    cut.classification = CutClass::Principal;
    cut.principal_generator = meet;
  } else {
    cut.classification = CutClass::ProperNonPrincipal;
  }
  return cut;
}

LinearSubclass linear_subclass(const Matroid& m, const std::vector<Subset>& corank2) {
  for (Subset t : corank2) {
    m.require_flat(t);
    if (m.rank() - m.flat_rank(t) != 2)
      fail(Errc::WrongCorank, subset_to_string(t) + " does not have corank 2");
  }
  const auto hyperplanes = m.corank_flats(1);

  std::set<Subset> s;
  auto add_hyperplanes_over = [&](Subset t) {
    bool grew = false;
    for (Subset h : hyperplanes) {
      if (is_subset(t, h) && s.insert(h).second) grew = true;
    }
    return grew;
  };
  for (Subset t : corank2) add_hyperplanes_over(t);

  // Saturate: corank-2 intersections of current members pull in every
  // corank-1 flat above them.
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<Subset> current(s.begin(), s.end());
    for (size_t i = 0; i < current.size() && !changed; ++i) {
      for (size_t j = i + 1; j < current.size() && !changed; ++j) {
        Subset t = current[i] & current[j];
        if (m.rank() - m.flat_rank(t) != 2) continue;
        if (add_hyperplanes_over(t)) changed = true;
      }
    }
  }

  LinearSubclass ls;
  ls.hyperplanes.assign(s.begin(), s.end());
  return ls;
}

ModularCut mc_from_linear_subclass(const Matroid& m, const LinearSubclass& ls) {
  std::set<Subset> in(ls.hyperplanes.begin(), ls.hyperplanes.end());
  for (Subset h : ls.hyperplanes) {
    m.require_flat(h);
    if (m.rank() - m.flat_rank(h) != 1)
      fail(Errc::ValidationError, subset_to_string(h) + " does not have corank 1");
  }
  const auto hyperplanes = m.corank_flats(1);
  std::vector<Subset> members;
  for (Subset f : m.all_flats()) {
    if (f == m.ground()) continue;
    bool all_in = true;
    for (Subset h : hyperplanes) {
      if (is_subset(f, h) && !in.count(h)) {
        all_in = false;
        break;
      }
    }
    if (all_in) members.push_back(f);
  }
  members.push_back(m.ground());
  return make_modular_cut(m, std::move(members));
}

ModularCut generated_cut(const Matroid& m, const std::vector<Subset>& generators) {
  for (Subset f : generators) m.require_flat(f);
  std::set<Subset> s(generators.begin(), generators.end());

  bool changed = true;
  while (changed) {
    changed = false;
    // Upward closure.
    std::vector<Subset> current(s.begin(), s.end());
    for (Subset l : current) {
      for (Subset f : m.all_flats()) {
        if (is_proper_subset(l, f) && s.insert(f).second) changed = true;
      }
    }
    // Intersections of modular pairs.
    current.assign(s.begin(), s.end());
    for (size_t i = 0; i < current.size(); ++i) {
      for (size_t j = i + 1; j < current.size(); ++j) {
        if (is_modular_pair(m, current[i], current[j]) &&
            s.insert(current[i] & current[j]).second) {
          changed = true;
        }
      }
    }
  }
  return make_modular_cut(m, std::vector<Subset>(s.begin(), s.end()));
}

ProperCutReport check_proper_cut_equivalences(const Matroid& m, const ModularCut& cut) {
  require_rank4_loopless_hypermodular(m, "check_proper_cut_equivalences");
  if (is_modular(m))
    fail(Errc::PreconditionViolated, "check_proper_cut_equivalences needs a non-modular matroid");

  std::vector<std::pair<Subset, Subset>> nonmod_in_cut;
  for (size_t i = 0; i < cut.members.size(); ++i) {
    for (size_t j = i + 1; j < cut.members.size(); ++j) {
      if (!is_modular_pair(m, cut.members[i], cut.members[j]))
        nonmod_in_cut.emplace_back(cut.members[i], cut.members[j]);
    }
  }
  if (nonmod_in_cut.empty())
    fail(Errc::PreconditionViolated, "check_proper_cut_equivalences needs a cut containing a non-modular pair");

  ProperCutReport rep;
  // (1) proper: does not contain the rank-0 flat.
  rep.proper = !cut.contains(m.loops());

  // (2) non-principal, and generated by each non-modular pair it contains.
  Subset meet = m.ground();
  for (Subset f : cut.members) meet &= f;
  bool nonprincipal = !cut.contains(meet);
  if (nonprincipal) {
    for (const auto& [x, y] : nonmod_in_cut) {
      if (!(generated_cut(m, {x, y}).members == cut.members)) {
        nonprincipal = false;
        break;
      }
    }
  }
  rep.nonprincipal_generated = nonprincipal;

  // (3) no flat of rank <= 1.
  rep.no_rank_le_1 = true;
  for (Subset f : cut.members) {
    if (m.flat_rank(f) <= 1) {
      rep.no_rank_le_1 = false;
      break;
    }
  }

  // (4) the rank-2 members partition E(M).
  rep.rank2_members = cut.members_of_rank(m, 2);
  Subset covered = 0;
  rep.rank2_partition = true;
  for (Subset t : rep.rank2_members) {
    if (covered & t) rep.rank2_partition = false;
    covered |= t;
  }
  if (covered != m.ground()) rep.rank2_partition = false;

  return rep;
}

bool cut_vamos_free(const Matroid& m, const ModularCut& cut) {
  require_rank4_loopless_hypermodular(m, "cut_vamos_free");
  bool generated_by_own_pair = false;
  for (size_t i = 0; i < cut.members.size() && !generated_by_own_pair; ++i) {
    for (size_t j = i + 1; j < cut.members.size() && !generated_by_own_pair; ++j) {
      if (!is_modular_pair(m, cut.members[i], cut.members[j]) &&
          generated_cut(m, {cut.members[i], cut.members[j]}).members == cut.members) {
        generated_by_own_pair = true;
      }
    }
  }
  if (!generated_by_own_pair)
    fail(Errc::PreconditionViolated,
         "cut_vamos_free needs a cut generated by a non-modular pair in it");
  return !find_vamos_among(m, cut.members_of_rank(m, 2)).has_value();
}

std::vector<ModularCut> nonprincipal_cuts(const Matroid& m) {
  require_rank4_loopless_hypermodular(m, "nonprincipal_cuts");
  std::vector<ModularCut> out;
  std::set<std::vector<Subset>> seen;
  for (const ClassifiedPair& cp : nonmodular_pairs(m)) {
    ModularCut cut = generated_cut(m, {cp.pair.x, cp.pair.y});
    if (cut.classification != CutClass::ProperNonPrincipal) {
      fail(Errc::InternalInvariant,
           "generated cut of a non-modular pair classified as " +
               std::string(cut_class_name(cut.classification)));
    }
    if (seen.insert(cut.members).second) out.push_back(std::move(cut));
  }
  std::sort(out.begin(), out.end(),
            [](const ModularCut& a, const ModularCut& b) { return a.members < b.members; });
  return out;
}

}  // namespace matroidlab
