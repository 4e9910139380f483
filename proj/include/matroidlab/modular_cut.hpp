#pragma once

#include <optional>
#include <vector>

#include "matroidlab/matroid.hpp"
#include "matroidlab/modularity.hpp"

namespace matroidlab {

enum class CutClass { Empty, Improper, Principal, ProperNonPrincipal };

const char* cut_class_name(CutClass c);

/// A modular cut: an upward-closed family of flats that contains the
/// intersection of each of its modular pairs. Members are kept sorted by
/// mask; equality of cuts is member-set equality.
struct ModularCut {
  std::vector<Subset> members;
  CutClass classification = CutClass::Empty;
  Subset principal_generator = 0;  // minimal member when Principal/Improper

  bool contains(Subset f) const;
  bool empty() const { return members.empty(); }
  int size() const { return static_cast<int>(members.size()); }
  std::vector<Subset> members_of_rank(const Matroid& m, int k) const;

  bool operator==(const ModularCut& o) const { return members == o.members; }
};

struct CutViolation {
  enum class Kind { NotUpwardClosed, MissingModularMeet } kind;
  Subset a = 0;
  Subset b = 0;  // for NotUpwardClosed: a in cut, b a missing superset;
                 // for MissingModularMeet: a, b the modular pair
};

/// Checks the two modular-cut conditions exhaustively; nullopt when valid.
/// Throws NotAFlat when a member is not a flat.
std::optional<CutViolation> modular_cut_violation(const Matroid& m,
                                                  const std::vector<Subset>& members);

bool is_modular_cut(const Matroid& m, const std::vector<Subset>& members);

/// Validates and classifies; throws NotAModularCut.
ModularCut make_modular_cut(const Matroid& m, std::vector<Subset> members);

CutClass classify_cut(const Matroid& m, const std::vector<Subset>& members);

/// The set of corank-1 flats of a nonempty modular cut; in bijection with
/// nonempty modular cuts.
struct LinearSubclass {
  std::vector<Subset> hyperplanes;  // sorted by mask

  bool operator==(const LinearSubclass& o) const { return hyperplanes == o.hyperplanes; }
};

/// Least fixed point of the generation rule: start with every corank-1
/// flat over a member of `corank2`, then repeatedly add every corank-1
/// flat over a corank-2 intersection of current members. Throws WrongCorank.
LinearSubclass linear_subclass(const Matroid& m, const std::vector<Subset>& corank2);

/// All flats whose covering corank-1 flats all lie in `ls`, plus the
/// ground set. The corank-1 members of the result are exactly `ls`.
ModularCut mc_from_linear_subclass(const Matroid& m, const LinearSubclass& ls);

/// Smallest modular cut containing `generators`, by forward saturation of
/// the two closure rules. Throws NotAFlat.
ModularCut generated_cut(const Matroid& m, const std::vector<Subset>& generators);

/// The four equivalent conditions on a modular cut with a non-modular pair
/// in a loopless rank-4 hypermodular non-modular matroid, evaluated by
/// four independent code paths.
struct ProperCutReport {
  bool proper = false;                  // no rank-0 flat in the cut
  bool nonprincipal_generated = false;  // non-principal and generated by each
                                        // of its non-modular pairs
  bool no_rank_le_1 = false;            // no member of rank <= 1
  bool rank2_partition = false;         // rank-2 members partition E(M)
  std::vector<Subset> rank2_members;

  bool all_equal() const {
    return proper == nonprincipal_generated && proper == no_rank_le_1 &&
           proper == rank2_partition;
  }
};

ProperCutReport check_proper_cut_equivalences(const Matroid& m, const ModularCut& cut);

/// True when no four rank-2 members of the cut form a Vamos line
/// arrangement. Precondition: the cut is generated by one of its
/// non-modular pairs (PreconditionViolated otherwise).
bool cut_vamos_free(const Matroid& m, const ModularCut& cut);

/// All non-principal modular cuts of a loopless rank-4 hypermodular
/// matroid: the deduplicated generated cuts of its non-modular pairs.
std::vector<ModularCut> nonprincipal_cuts(const Matroid& m);

namespace detail {
/// Sorts, dedupes and classifies without the exhaustive validity scan;
/// for enumeration paths where validity holds by construction.
ModularCut classify_unchecked(const Matroid& m, std::vector<Subset> members);
}  // namespace detail

}  // namespace matroidlab
