#include "matroidlab/extension.hpp"

#include <algorithm>
#include <set>

#include "matroidlab/modularity.hpp"

namespace matroidlab {

namespace {

void require_cut_of(const Matroid& base, const ModularCut& cut) {
  if (modular_cut_violation(base, cut.members).has_value())
    fail(Errc::NotAModularCut, "cut is not a modular cut of the base matroid");
}

// Does some member of the cut cover l in the base lattice?
bool covered_by_member(const Matroid& base, const ModularCut& cut, Subset l) {
  const int k = base.flat_rank(l);
  if (k == base.rank()) return false;
  for (Subset g : base.flats_of_rank(k + 1)) {
    if (is_subset(l, g) && cut.contains(g)) return true;
  }
  return false;
}

}  // namespace

int extension_rank(const Matroid& base, const ModularCut& cut, Subset x) {
  const Subset e = single(base.size());
  if (!is_subset(x, base.ground() | e))
    fail(Errc::ValidationError, "subset outside the extended ground set");
  Subset rest = x & ~e;
  int r = base.rank_of(rest);
  if ((x & e) && !cut.contains(base.closure(rest))) return r + 1;
  return r;
}

Matroid extend_matroid(const Matroid& base, const ModularCut& cut) {
  require_cut_of(base, cut);
  GroundSet ground(base.size() + 1);
  const Subset e = single(base.size());
  const int new_rank = cut.empty() ? base.rank() + 1 : base.rank();

  std::vector<std::vector<Subset>> table(new_rank + 1);
  for (int k = 0; k <= base.rank(); ++k) {
    for (Subset f : base.flats_of_rank(k)) {
      if (cut.contains(f)) {
        table[k].push_back(f | e);  // phi(f)
      } else {
        table[k].push_back(f);  // phi(f)
        // L u {e} becomes a flat one rank up exactly when no member of the
        // cut covers L.
        if (!covered_by_member(base, cut, f)) table[k + 1].push_back(f | e);
      }
    }
  }

  std::vector<std::string> labels;
  if (!base.labels().empty()) {
    labels = base.labels();
    labels.push_back(fresh_element_label(labels, base.size()));
  }
  return Matroid::from_flats(ground.n, std::move(table), std::move(labels));
}

ExtensionStep extend(const Matroid& base, const ModularCut& cut) {
  ExtensionStep step;
  step.base = base;
  step.cut = cut;
  step.new_element = base.size();
  step.result = extend_matroid(base, cut);
  step.defect_before = matroid_modular_defect(base);
  step.defect_after = matroid_modular_defect(step.result);
  if (restrict_to(step.result, base.ground()) != base)
    fail(Errc::InternalInvariant, "extension does not restrict to its base");
  return step;
}

Subset phi(const ExtensionStep& step, Subset base_flat) {
  step.base.require_flat(base_flat);
  return step.cut.contains(base_flat) ? base_flat | single(step.new_element) : base_flat;
}

std::vector<std::pair<Subset, Subset>> phi_map(const ExtensionStep& step) {
  std::vector<std::pair<Subset, Subset>> out;
  out.reserve(step.base.flat_count());
  for (Subset f : step.base.all_flats()) out.emplace_back(f, phi(step, f));
  return out;
}

ExtensionLawReport verify_extension_laws(const ExtensionStep& step) {
  const Matroid& m = step.base;
  const Matroid& n = step.result;
  const Subset e = single(step.new_element);
  ExtensionLawReport rep;

  // phi: injective, rank preserving, image inside the result's flats.
  std::set<Subset> image;
  rep.phi_injective_rank_preserving = true;
  for (Subset f : m.all_flats()) {
    Subset g = phi(step, f);
    if (!image.insert(g).second || !n.is_flat(g) || n.flat_rank(g) != m.flat_rank(f))
      rep.phi_injective_rank_preserving = false;
  }

  rep.restriction_ok = restrict_to(n, m.ground()) == m;

  // Image complement: not hit by phi iff the rank formula added one, iff
  // the flat is L u {e} for a flat L outside the cut with no member of the
  // cut covering it. (For the empty cut this includes L = E(M).)
  rep.image_characterization_ok = true;
  for (Subset g : n.all_flats()) {
    bool outside = !image.count(g);
    bool rank_up = n.flat_rank(g) == m.rank_of(g & ~e) + 1;
    Subset l = g & ~e;
    bool structural = (g & e) && m.is_flat(l) && !step.cut.contains(l) &&
                      !covered_by_member(m, step.cut, l);
    if (outside != rank_up || outside != structural) rep.image_characterization_ok = false;
  }

  rep.empty_cut_iff_rank_up = step.cut.empty() == (n.rank() == m.rank() + 1);
  rep.improper_cut_iff_loop = step.cut.contains(m.loops()) == is_subset(e, n.loops());

  if (step.cut.classification == CutClass::ProperNonPrincipal) {
    for (size_t i = 0; i < step.cut.members.size(); ++i) {
      for (size_t j = i + 1; j < step.cut.members.size(); ++j) {
        Subset x = step.cut.members[i], y = step.cut.members[j];
        if (is_modular_pair(m, x, y)) continue;
        if (!(generated_cut(m, {x, y}).members == step.cut.members)) continue;
        ExtensionLawReport::PairDrop drop;
        drop.x = x;
        drop.y = y;
        drop.defect_base = modular_defect_pair(m, x, y).defect;
        drop.defect_result = modular_defect_pair(n, phi(step, x), phi(step, y)).defect;
        if (drop.defect_result != drop.defect_base - 1) rep.drops_by_one = false;
        rep.generating_pair_drops.push_back(drop);
      }
    }
  }
  return rep;
}

}  // namespace matroidlab
