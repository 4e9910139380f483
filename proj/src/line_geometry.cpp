#include "matroidlab/line_geometry.hpp"

#include <algorithm>

namespace matroidlab {

const char* verdict_name(LineArrangementVerdict v) {
  switch (v) {
    case LineArrangementVerdict::Vamos: return "vamos";
    case LineArrangementVerdict::AntiVamos: return "anti-vamos";
    case LineArrangementVerdict::NotApplicable: return "not-applicable";
  }
  return "unknown";
}

bool meet_at_point(const Matroid& m, const std::vector<Subset>& flats) {
  Subset u = 0;
  for (Subset f : flats) {
    m.require_flat(f);
    u |= f;
  }
  return m.rank_of(u) == m.rank() - 1;
}

namespace {

void require_line(const Matroid& m, Subset t) {
  if (!m.is_flat(t) || m.flat_rank(t) != 2)
    fail(Errc::WrongRank, subset_to_string(t) + " is not a rank-2 flat");
}

}  // namespace

bool lines_meet(const Matroid& m, Subset t1, Subset t2) {
  if (m.rank() != 4) fail(Errc::WrongRank, "lines_meet needs a rank-4 matroid");
  require_line(m, t1);
  require_line(m, t2);
  if (t1 == t2) fail(Errc::PreconditionViolated, "lines_meet needs two distinct lines");
  return m.rank_of(t1 | t2) == 3;
}

LineQuadruple classify_quadruple(const Matroid& m, std::array<Subset, 4> lines) {
  LineQuadruple q;
  q.lines = lines;
  for (Subset t : lines) require_line(m, t);
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (lines[i] == lines[j])
        fail(Errc::PreconditionViolated, "quadruple lines must be distinct");

  int misses = 0;
  for (int i = 0; i < 4; ++i) {
    q.meets[i][i] = true;
    for (int j = i + 1; j < 4; ++j) {
      // Coplanar lines are outside both definitions.
      if (m.rank_of(lines[i] & lines[j]) >= 1) return q;
      bool meet = m.rank_of(lines[i] | lines[j]) == 3;
      q.meets[i][j] = q.meets[j][i] = meet;
      if (!meet) ++misses;
    }
  }
  // No three concurrent (possible only when the three pairs all meet).
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      for (int k = j + 1; k < 4; ++k) {
        if (q.meets[i][j] && q.meets[i][k] && q.meets[j][k] &&
            m.rank_of(lines[i] | lines[j] | lines[k]) == 3) {
          return q;
        }
      }
    }
  }
  if (misses == 0) q.verdict = LineArrangementVerdict::AntiVamos;
  if (misses == 1) q.verdict = LineArrangementVerdict::Vamos;
  return q;
}

std::vector<LineQuadruple> find_line_arrangements_in(const Matroid& m,
                                                     const std::vector<Subset>& lines) {
  const int L = static_cast<int>(lines.size());
  for (Subset t : lines) require_line(m, t);

  // Pair tables: disjointness (non-coplanar) and meeting at a point.
  std::vector<std::vector<char>> ok(L, std::vector<char>(L, 0));
  std::vector<std::vector<char>> meet(L, std::vector<char>(L, 0));
  for (int i = 0; i < L; ++i) {
    for (int j = i + 1; j < L; ++j) {
      if (m.rank_of(lines[i] & lines[j]) >= 1) continue;
      ok[i][j] = ok[j][i] = 1;
      char mt = m.rank_of(lines[i] | lines[j]) == 3 ? 1 : 0;
      meet[i][j] = meet[j][i] = mt;
    }
  }

  // A reported quadruple has at most one non-meeting pair, so prune on the
  // second miss; triples whose lines are concurrent are pruned as well.
  std::vector<LineQuadruple> out;
  auto concurrent = [&](int i, int j, int k) {
    return meet[i][j] && meet[i][k] && meet[j][k] &&
           m.rank_of(lines[i] | lines[j] | lines[k]) == 3;
  };
  for (int i = 0; i < L; ++i) {
    for (int j = i + 1; j < L; ++j) {
      if (!ok[i][j]) continue;
      int miss_ij = meet[i][j] ? 0 : 1;
      for (int k = j + 1; k < L; ++k) {
        if (!ok[i][k] || !ok[j][k]) continue;
        int miss_ijk = miss_ij + (meet[i][k] ? 0 : 1) + (meet[j][k] ? 0 : 1);
        if (miss_ijk > 1) continue;
        if (concurrent(i, j, k)) continue;
        for (int l = k + 1; l < L; ++l) {
          if (!ok[i][l] || !ok[j][l] || !ok[k][l]) continue;
          int misses = miss_ijk + (meet[i][l] ? 0 : 1) + (meet[j][l] ? 0 : 1) +
                       (meet[k][l] ? 0 : 1);
          if (misses > 1) continue;
          if (concurrent(i, j, l) || concurrent(i, k, l) || concurrent(j, k, l)) continue;
          LineQuadruple q;
          q.lines = {lines[i], lines[j], lines[k], lines[l]};
          int idx[4] = {i, j, k, l};
          for (int a = 0; a < 4; ++a) {
            q.meets[a][a] = true;
            for (int b = a + 1; b < 4; ++b)
              q.meets[a][b] = q.meets[b][a] = meet[idx[a]][idx[b]] != 0;
          }
          q.verdict = misses == 0 ? LineArrangementVerdict::AntiVamos
                                  : LineArrangementVerdict::Vamos;
          out.push_back(q);
        }
      }
    }
  }
  return out;
}

std::vector<LineQuadruple> find_line_arrangements(const Matroid& m) {
  if (m.rank() != 4) fail(Errc::WrongRank, "find_line_arrangements needs a rank-4 matroid");
  return find_line_arrangements_in(m, m.flats_of_rank(2));
}

std::optional<LineQuadruple> find_vamos_among(const Matroid& m,
                                              const std::vector<Subset>& lines) {
  for (const LineQuadruple& q : find_line_arrangements_in(m, lines)) {
    if (q.verdict == LineArrangementVerdict::Vamos) return q;
  }
  return std::nullopt;
}

TripleLineReport triple_line_check(const Matroid& m, Subset t1, Subset t2, Subset t3) {
  if (m.rank() != 4) fail(Errc::WrongRank, "triple_line_check needs a rank-4 matroid");
  const std::array<Subset, 3> t = {t1, t2, t3};
  for (Subset x : t) require_line(m, x);
  if (t1 == t2 || t1 == t3 || t2 == t3)
    fail(Errc::PreconditionViolated, "triple_line_check needs three distinct lines");
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      if (m.rank_of(t[i] | t[j]) != 3)
        fail(Errc::HypothesisViolated, "lines " + subset_to_string(t[i]) + " and " +
                                           subset_to_string(t[j]) + " do not meet at a point");
    }
  }
  if (m.rank_of(t1 | t2 | t3) != 4)
    fail(Errc::HypothesisViolated, "the three lines have a common point");

  TripleLineReport rep;
  for (Subset p : m.flats_of_rank(1)) {
    // (1) a plane through two of the lines contains the third.
    int on = 0;
    for (Subset x : t) on += is_subset(p, x) ? 1 : 0;
    if (on == 2) {
      rep.plane_through_two_contains_third = false;
      rep.violations_two_lines.push_back(p);
    }
    // (2) a plane through one line and the meeting point of the other two
    // contains all three.
    for (int i = 0; i < 3; ++i) {
      int j = (i + 1) % 3, k = (i + 2) % 3;
      if (is_subset(p, t[i]) && is_subset(p, m.closure(t[j] | t[k]))) {
        if (!is_subset(p, t[j]) || !is_subset(p, t[k])) {
          rep.plane_through_line_and_crossing_contains_all = false;
          rep.violations_crossing.push_back(p);
        }
      }
    }
  }
  return rep;
}

}  // namespace matroidlab
