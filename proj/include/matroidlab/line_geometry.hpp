#pragma once

#include <array>
#include <optional>
#include <vector>

#include "matroidlab/matroid.hpp"

namespace matroidlab {

// Subspace view of a rank-4 matroid: a line is the contraction by a rank-2
// flat, a plane the contraction by a rank-1 flat. Two lines M/T1, M/T2 are
// coplanar exactly when r(T1 n T2) >= 1, and meet at a point exactly when
// r(T1 u T2) = 3.

/// True when the subspaces M/F, F in `flats`, meet at a point:
/// r(union) = r(M) - 1.
bool meet_at_point(const Matroid& m, const std::vector<Subset>& flats);

/// Specialization to two distinct rank-2 flats of a rank-4 matroid.
/// Throws WrongRank / PreconditionViolated.
bool lines_meet(const Matroid& m, Subset t1, Subset t2);

enum class LineArrangementVerdict { Vamos, AntiVamos, NotApplicable };

const char* verdict_name(LineArrangementVerdict v);

/// Four lines, pairwise non-coplanar with no three concurrent. Vamos when
/// exactly five of the six pairs meet at a point; AntiVamos when all six do.
struct LineQuadruple {
  std::array<Subset, 4> lines;
  LineArrangementVerdict verdict = LineArrangementVerdict::NotApplicable;
  std::array<std::array<bool, 4>, 4> meets{};
};

/// Classifies one quadruple of distinct rank-2 flats.
LineQuadruple classify_quadruple(const Matroid& m, std::array<Subset, 4> lines);

/// Exhaustive scan over 4-subsets of the given lines (canonical order);
/// reports only Vamos and AntiVamos verdicts.
std::vector<LineQuadruple> find_line_arrangements_in(const Matroid& m,
                                                     const std::vector<Subset>& lines);

/// Scan over all rank-2 flats of a rank-4 matroid. Throws WrongRank.
std::vector<LineQuadruple> find_line_arrangements(const Matroid& m);

/// First Vamos quadruple among the given lines, if any.
std::optional<LineQuadruple> find_vamos_among(const Matroid& m,
                                              const std::vector<Subset>& lines);

/// Checks the two plane-containment properties of a triple of lines with
/// empty common intersection that pairwise meet at points:
/// r(Ti u Tj) = 3 for i != j and r(T1 u T2 u T3) = 4 (HypothesisViolated
/// otherwise). Violations carry the rank-1 flat of the offending plane.
struct TripleLineReport {
  bool plane_through_two_contains_third = true;
  bool plane_through_line_and_crossing_contains_all = true;
  std::vector<Subset> violations_two_lines;
  std::vector<Subset> violations_crossing;

  bool ok() const {
    return plane_through_two_contains_third && plane_through_line_and_crossing_contains_all;
  }
};

TripleLineReport triple_line_check(const Matroid& m, Subset t1, Subset t2, Subset t3);

}  // namespace matroidlab
