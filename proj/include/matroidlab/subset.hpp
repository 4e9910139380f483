#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace matroidlab {

// Subsets of a ground set {0, ..., n-1}, n <= 64, as bit masks.
using Subset = std::uint64_t;

constexpr int kMaxGroundSize = 64;

constexpr Subset kEmptySet = 0;

constexpr Subset full_set(int n) {
  return n >= kMaxGroundSize ? ~Subset{0} : ((Subset{1} << n) - 1);
}

constexpr Subset single(int i) { return Subset{1} << i; }

constexpr bool test_bit(Subset s, int i) { return (s >> i) & 1; }

constexpr int popcount(Subset s) { return std::popcount(s); }

// a is a subset of b
constexpr bool is_subset(Subset a, Subset b) { return (a & ~b) == 0; }

constexpr bool is_proper_subset(Subset a, Subset b) {
  return a != b && is_subset(a, b);
}

inline int lowest_element(Subset s) { return std::countr_zero(s); }

template <typename F>
void for_each_element(Subset s, F&& f) {
  while (s) {
    f(std::countr_zero(s));
    s &= s - 1;
  }
}

std::vector<int> elements_of(Subset s);
Subset subset_of(const std::vector<int>& indices);

// "{0,3,5}"; "{}" for the empty set.
std::string subset_to_string(Subset s);

}  // namespace matroidlab
