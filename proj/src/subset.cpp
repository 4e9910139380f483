#include "matroidlab/subset.hpp"

#include <sstream>

namespace matroidlab {

std::vector<int> elements_of(Subset s) {
  std::vector<int> out;
  out.reserve(popcount(s));
  for_each_element(s, [&](int e) { out.push_back(e); });
  return out;
}

Subset subset_of(const std::vector<int>& indices) {
  Subset s = 0;
  for (int i : indices) s |= single(i);
  return s;
}

std::string subset_to_string(Subset s) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for_each_element(s, [&](int e) {
    if (!first) os << ',';
    os << e;
    first = false;
  });
  os << '}';
  return os.str();
}

}  // namespace matroidlab
