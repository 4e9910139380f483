#pragma once

#include <utility>
#include <vector>

#include "matroidlab/matroid.hpp"
#include "matroidlab/modular_cut.hpp"

namespace matroidlab {

/// One single-element extension by a modular cut. The new element always
/// takes index base.size(). The flat map phi sends F to F u {e} for
/// members of the cut and fixes every other flat; it is injective and
/// rank preserving.
struct ExtensionStep {
  Matroid base;
  ModularCut cut;
  int new_element = 0;
  Matroid result;
  long long defect_before = 0;
  long long defect_after = 0;
};

/// The extension's rank function: with e the new element,
/// r(X) = r_base(X - e) + 1 when e is in X and the base closure of X - e
/// is outside the cut, r_base(X - e) otherwise.
int extension_rank(const Matroid& base, const ModularCut& cut, Subset x);

/// Builds the extension's matroid; the flats table is materialized from
/// the rank formula's structure (no subset enumeration). Throws
/// NotAModularCut when the cut is invalid for `base`.
Matroid extend_matroid(const Matroid& base, const ModularCut& cut);

/// extend_matroid plus defect bookkeeping and the restriction check.
ExtensionStep extend(const Matroid& base, const ModularCut& cut);

Subset phi(const ExtensionStep& step, Subset base_flat);

/// The full flat map of the step, in canonical base-flat order.
std::vector<std::pair<Subset, Subset>> phi_map(const ExtensionStep& step);

/// Re-derives the extension laws on a step and reports each check.
struct ExtensionLawReport {
  bool phi_injective_rank_preserving = false;
  bool restriction_ok = false;
  // Outside the image of phi iff the rank formula added one, iff the flat
  // is L u {e} for a flat L outside the cut that no member covers.
  bool image_characterization_ok = false;
  // Empty cut iff the rank grew; cut contains the rank-0 flat iff e is a
  // loop of the result.
  bool empty_cut_iff_rank_up = false;
  bool improper_cut_iff_loop = false;

  struct PairDrop {
    Subset x = 0;
    Subset y = 0;
    int defect_base = 0;
    int defect_result = 0;
  };
  // For a proper non-principal cut: every non-modular pair generating the
  // cut must lose exactly one unit of defect under phi.
  std::vector<PairDrop> generating_pair_drops;
  bool drops_by_one = true;

  bool all_ok() const {
    return phi_injective_rank_preserving && restriction_ok && image_characterization_ok &&
           empty_cut_iff_rank_up && improper_cut_iff_loop && drops_by_one;
  }
};

ExtensionLawReport verify_extension_laws(const ExtensionStep& step);

}  // namespace matroidlab
