#pragma once

// Shared test fixtures.

#include <string>
#include <vector>

#include "matroidlab/catalog.hpp"
#include "matroidlab/matroid.hpp"

namespace matroidlab::testing {

/// Two disjoint 3-point lines in the plane; the smallest rank-3
/// non-modular fixture used by the amalgam tests.
inline Matroid two_lines() {
  std::vector<std::vector<Subset>> table(4);
  table[0] = {kEmptySet};
  for (int i = 0; i < 6; ++i) table[1].push_back(single(i));
  table[2] = {subset_of({0, 1, 2}), subset_of({3, 4, 5})};
  for (int i = 0; i < 3; ++i)
    for (int j = 3; j < 6; ++j) table[2].push_back(single(i) | single(j));
  table[3] = {full_set(6)};
  return Matroid::from_flats(6, table);
}

struct NamedMatroid {
  std::string name;
  Matroid m;
};

/// The small catalog instances exercised across the suites.
inline std::vector<NamedMatroid> small_corpus() {
  return {
      {"uniform(1,1)", uniform(1, 1)},   {"uniform(2,3)", uniform(2, 3)},
      {"uniform(2,4)", uniform(2, 4)},   {"boolean(3)", boolean_matroid(3)},
      {"uniform(3,4)", uniform(3, 4)},   {"boolean(4)", boolean_matroid(4)},
      {"uniform(3,5)", uniform(3, 5)},   {"uniform(4,6)", uniform(4, 6)},
      {"two_lines", two_lines()},        {"vamos", vamos()},
  };
}

}  // namespace matroidlab::testing
