#include <doctest.h>

#include <set>

#include "matroidlab/amalgam.hpp"
#include "matroidlab/catalog.hpp"
#include "matroidlab/modular_cut.hpp"
#include "matroidlab/modularity.hpp"
#include "support/corpus.hpp"
#include "support/oracle.hpp"

using namespace matroidlab;

namespace {

Matroid pg32_minus_point() { return delete_elements(pg3(2), single(0)); }

ModularCut the_pencil_cut(const Matroid& d) {
  auto cuts = nonprincipal_cuts(d);
  REQUIRE(cuts.size() == 1);
  return cuts[0];
}

}  // namespace

TEST_CASE("is_modular_cut basics") {
  Matroid p = pg3(2);
  CHECK(is_modular_cut(p, {p.ground()}));
  CHECK(is_modular_cut(p, {}));

  // a single plane is not upward closed; the witness names the missing top
  Subset plane = p.flats_of_rank(3)[0];
  auto v = modular_cut_violation(p, {plane});
  REQUIRE(v.has_value());
  CHECK(v->kind == CutViolation::Kind::NotUpwardClosed);
  CHECK(v->a == plane);
  CHECK(v->b == p.ground());

  // upward closed but missing a modular meet
  Matroid b3 = boolean_matroid(3);
  std::vector<Subset> members = {subset_of({0, 1}), subset_of({0, 2}), full_set(3)};
  auto w = modular_cut_violation(b3, members);
  REQUIRE(w.has_value());
  CHECK(w->kind == CutViolation::Kind::MissingModularMeet);
}

TEST_CASE("linear subclass generation") {
  Matroid p = pg3(2);
  CHECK(linear_subclass(p, {}).hyperplanes.empty());

  Subset line = p.flats_of_rank(2)[0];
  LinearSubclass ls = linear_subclass(p, {line});
  std::vector<Subset> expected;
  for (Subset h : p.flats_of_rank(3))
    if (is_subset(line, h)) expected.push_back(h);
  CHECK(ls.hyperplanes == expected);
  CHECK(ls.hyperplanes.size() == 3);

  try {
    linear_subclass(p, {single(0)});  // corank 3, not 2
    REQUIRE(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::WrongCorank);
  }
}

TEST_CASE("cut from a linear subclass") {
  Matroid p = pg3(2);
  CHECK(mc_from_linear_subclass(p, {}).members == std::vector<Subset>{p.ground()});

  Subset line = p.flats_of_rank(2)[0];
  ModularCut cut = mc_from_linear_subclass(p, linear_subclass(p, {line}));
  CHECK(cut.classification == CutClass::Principal);
  CHECK(cut.principal_generator == line);
  CHECK(cut.size() == 5);  // the line, three planes, the ground set
}

TEST_CASE("subclass <-> nonempty cut bijection on small instances") {
  for (const auto& m : {uniform(2, 3), boolean_matroid(3), uniform(3, 4), uniform(2, 4)}) {
    for (const ModularCut& cut : all_modular_cuts(m)) {
      if (cut.empty()) continue;
      LinearSubclass ls;
      ls.hyperplanes = cut.members_of_rank(m, m.rank() - 1);
      CHECK(mc_from_linear_subclass(m, ls).members == cut.members);
    }
  }
  // the other direction: generated subclasses round-trip through their cut
  Matroid d = pg32_minus_point();
  for (Subset t : {d.flats_of_rank(2)[0], d.flats_of_rank(2)[5]}) {
    LinearSubclass ls = linear_subclass(d, {t});
    ModularCut cut = mc_from_linear_subclass(d, ls);
    CHECK(cut.members_of_rank(d, 3) == ls.hyperplanes);
  }
}

TEST_CASE("generated cuts") {
  Matroid p = pg3(2);
  CHECK(generated_cut(p, {p.ground()}).members == std::vector<Subset>{p.ground()});

  Matroid b4 = boolean_matroid(4);
  Subset f = subset_of({0, 1});
  ModularCut principal = generated_cut(b4, {f});
  CHECK(principal.classification == CutClass::Principal);
  CHECK(principal.principal_generator == f);
  std::vector<Subset> above;
  for (Subset g : b4.all_flats())
    if (is_subset(f, g)) above.push_back(g);
  CHECK(principal.members == above);

  // the empty generating set yields the empty cut
  CHECK(generated_cut(p, {}).classification == CutClass::Empty);
}

TEST_CASE("the non-principal cut of pg3(2) minus a point") {
  Matroid d = pg32_minus_point();
  ModularCut cut = the_pencil_cut(d);
  CHECK(cut.classification == CutClass::ProperNonPrincipal);
  CHECK(cut.size() == 15);

  // the rank-2 members partition the 14 elements into 7 pairs
  auto lines = cut.members_of_rank(d, 2);
  CHECK(lines.size() == 7);
  Subset covered = 0;
  for (Subset t : lines) {
    CHECK(popcount(t) == 2);
    CHECK((covered & t) == 0);
    covered |= t;
  }
  CHECK(covered == d.ground());

  // every non-modular pair generates this same cut
  for (const auto& cp : nonmodular_pairs(d))
    CHECK(generated_cut(d, {cp.pair.x, cp.pair.y}).members == cut.members);
}

TEST_CASE("classify_cut") {
  Matroid p = pg3(2);
  CHECK(classify_cut(p, p.all_flats()) == CutClass::Improper);
  CHECK(classify_cut(p, {}) == CutClass::Empty);
  Subset point = single(3);
  ModularCut pc = generated_cut(p, {point});
  CHECK(pc.classification == CutClass::Principal);
  CHECK(pc.principal_generator == point);
  try {
    classify_cut(p, {p.flats_of_rank(3)[0]});
    REQUIRE(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotAModularCut);
  }
  // improper <=> contains the rank-0 flat <=> all flats, across small cuts
  for (const auto& m : {uniform(2, 3), boolean_matroid(3), uniform(3, 4)}) {
    for (const ModularCut& cut : all_modular_cuts(m)) {
      bool has_bottom = cut.contains(m.loops());
      CHECK(has_bottom == (cut.classification == CutClass::Improper));
      CHECK(has_bottom == (cut.size() == m.flat_count()));
    }
  }
}

TEST_CASE("proper cuts: four equivalent conditions") {
  Matroid d = pg32_minus_point();
  ModularCut cut = the_pencil_cut(d);

  ProperCutReport rep = check_proper_cut_equivalences(d, cut);
  CHECK(rep.proper);
  CHECK(rep.nonprincipal_generated);
  CHECK(rep.no_rank_le_1);
  CHECK(rep.rank2_partition);
  CHECK(rep.all_equal());
  CHECK(rep.rank2_members.size() == 7);

  // the improper cut fails all four conditions at once
  ModularCut improper = make_modular_cut(d, d.all_flats());
  ProperCutReport rep2 = check_proper_cut_equivalences(d, improper);
  CHECK(!rep2.proper);
  CHECK(!rep2.nonprincipal_generated);
  CHECK(!rep2.no_rank_le_1);
  CHECK(!rep2.rank2_partition);
  CHECK(rep2.all_equal());

  // a cut without a non-modular pair is outside the hypothesis
  try {
    check_proper_cut_equivalences(d, generated_cut(d, {single(0)}));
    REQUIRE(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::PreconditionViolated);
  }
}

TEST_CASE("a generated cut is proper iff free of Vamos line arrangements") {
  Matroid d = pg32_minus_point();
  ModularCut cut = the_pencil_cut(d);
  CHECK(cut_vamos_free(d, cut));
  CHECK(check_proper_cut_equivalences(d, cut).proper);

  // the hypothesis fails on the (non-hypermodular) vamos matroid
  Matroid v = vamos();
  ModularCut vcut = generated_cut(v, {subset_of({0, 1, 4, 5}), subset_of({2, 3, 6, 7})});
  try {
    cut_vamos_free(v, vcut);
    REQUIRE(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::PreconditionViolated);
  }
}

TEST_CASE("nonprincipal cut inventories") {
  CHECK(nonprincipal_cuts(pg3(2)).empty());
  CHECK(nonprincipal_cuts(boolean_matroid(4)).empty());
  CHECK(nonprincipal_cuts(pg32_minus_point()).size() == 1);

  Matroid d3 = delete_elements(pg3(3), subset_of({0, 1}));
  REQUIRE(is_hypermodular(d3));
  auto cuts = nonprincipal_cuts(d3);
  CHECK(cuts.size() == 2);
  for (const auto& cut : cuts) {
    CHECK(cut.classification == CutClass::ProperNonPrincipal);
    CHECK(check_proper_cut_equivalences(d3, cut).all_equal());
    // hypermodular input: scanning its cuts finds no Vamos arrangement
    CHECK(cut_vamos_free(d3, cut));
  }
}

TEST_CASE("cut outputs satisfy the two conditions (oracle re-check)") {
  Matroid d = pg32_minus_point();
  CHECK(oracle::is_modular_cut(d, the_pencil_cut(d).members));
  Matroid b4 = boolean_matroid(4);
  CHECK(oracle::is_modular_cut(b4, generated_cut(b4, {subset_of({0, 1})}).members));
  Matroid p = pg3(2);
  Subset line = p.flats_of_rank(2)[0];
  CHECK(oracle::is_modular_cut(p, mc_from_linear_subclass(p, linear_subclass(p, {line})).members));
}

TEST_CASE("generated cuts are least: removing a minimal non-generator breaks a condition") {
  Matroid d = pg32_minus_point();
  auto pairs = nonmodular_pairs(d);
  const auto& g = pairs.front().pair;
  ModularCut cut = generated_cut(d, {g.x, g.y});
  for (Subset m0 : cut.members) {
    if (m0 == g.x || m0 == g.y) continue;
    // minimal member: no other member strictly below it
    bool minimal = true;
    for (Subset other : cut.members)
      if (other != m0 && is_proper_subset(other, m0)) minimal = false;
    if (!minimal) continue;
    std::vector<Subset> without;
    for (Subset other : cut.members)
      if (other != m0) without.push_back(other);
    CHECK(!is_modular_cut(d, without));
  }
}

TEST_CASE("line-line and plane-line pairs generate the same cuts") {
  Matroid d = pg32_minus_point();
  auto pairs = nonmodular_pairs(d);
  for (const auto& cp : pairs) {
    ModularCut cut = generated_cut(d, {cp.pair.x, cp.pair.y});
    bool found_other_kind = false;
    for (const auto& other : pairs) {
      if (other.kind == cp.kind) continue;
      if (!cut.contains(other.pair.x) || !cut.contains(other.pair.y)) continue;
      if (generated_cut(d, {other.pair.x, other.pair.y}).members == cut.members) {
        found_other_kind = true;
        break;
      }
    }
    CHECK(found_other_kind);
  }
}

TEST_CASE("the pencil subclass construction meets the generated cut") {
  Matroid d = pg32_minus_point();
  // a plane-line non-modular pair (F, L), and T0 = {L} u {F n A_i} over the
  // planes A_i through L
  auto pairs = nonmodular_pairs(d);
  const auto& fl = pairs.front().pair;
  REQUIRE(fl.rank_x == 3);
  std::vector<Subset> t0 = {fl.y};
  int planes_through = 0;
  for (Subset a : d.flats_of_rank(3)) {
    if (!is_subset(fl.y, a)) continue;
    ++planes_through;
    Subset t = fl.x & a;
    CHECK(d.rank_of(t) == 2);  // hypermodularity makes these corank-2 flats
    t0.push_back(t);
  }
  CHECK(planes_through >= 3);
  ModularCut via_subclass = mc_from_linear_subclass(d, linear_subclass(d, t0));
  CHECK(via_subclass.members == generated_cut(d, {fl.x, fl.y}).members);
  CHECK(via_subclass.classification == CutClass::ProperNonPrincipal);
}

TEST_CASE("all_modular_cuts matches the brute-force count on tiny instances") {
  CHECK(all_modular_cuts(uniform(1, 1)).size() == 3);
  for (const auto& m : {uniform(1, 1), uniform(2, 3), uniform(2, 4), boolean_matroid(3),
                        uniform(3, 4)}) {
    auto cuts = all_modular_cuts(m);
    CHECK(static_cast<long long>(cuts.size()) == oracle::count_modular_cuts_brute(m));
    for (const auto& cut : cuts) CHECK(oracle::is_modular_cut(m, cut.members));
  }
  // in a modular matroid every nonempty cut is principal: flats + 1 in total
  CHECK(all_modular_cuts(pg3(2)).size() == 68);
}
