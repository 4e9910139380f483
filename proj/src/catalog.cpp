#include "matroidlab/catalog.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <sstream>

namespace matroidlab {

Matroid vamos() {
  const int n = 8;
  auto quad = [](int a, int b, int c, int d) {
    return single(a) | single(b) | single(c) | single(d);
  };
  // 0-based translation of the five 4-circuits.
  const std::set<Subset> circuits = {
      quad(0, 1, 2, 3), quad(0, 1, 4, 5), quad(0, 1, 6, 7),
      quad(2, 3, 4, 5), quad(2, 3, 6, 7),
  };
  std::vector<Subset> bases;
  for (Subset s = 0; s <= full_set(n); ++s) {
    if (popcount(s) == 4 && !circuits.count(s)) bases.push_back(s);
  }
  std::vector<std::string> labels;
  for (int i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
  return Matroid::from_bases(n, bases, std::move(labels));
}

Matroid uniform(int r, int n) {
  if (r < 0 || r > n) fail(Errc::UnsupportedParam, "uniform needs 0 <= r <= n");
  GroundSet ground(n);
  return Matroid::from_rank_fn(n, [r](Subset x) { return std::min(popcount(x), r); });
}

Matroid boolean_matroid(int n) { return uniform(n, n); }

namespace {

using Vec4 = std::array<int, 4>;

// Row-echelon basis over GF(q); rows keep leading coefficient 1.
class Gf4Space {
 public:
  explicit Gf4Space(int q) : q_(q) {}

  void insert(Vec4 v) {
    for (const Vec4& row : rows_) reduce(v, row);
    if (v == Vec4{0, 0, 0, 0}) return;
    normalize(v);
    rows_.push_back(v);
    std::sort(rows_.begin(), rows_.end(),
              [](const Vec4& a, const Vec4& b) { return lead(a) < lead(b); });
  }

  int dim() const { return static_cast<int>(rows_.size()); }

  // All nonzero vectors in the span, normalized to leading coefficient 1.
  std::vector<Vec4> points() const {
    std::vector<Vec4> out;
    int combos = 1;
    for (int i = 0; i < dim(); ++i) combos *= q_;
    for (int code = 1; code < combos; ++code) {
      Vec4 v{0, 0, 0, 0};
      int c = code;
      for (const Vec4& row : rows_) {
        int coeff = c % q_;
        c /= q_;
        for (int i = 0; i < 4; ++i) v[i] = (v[i] + coeff * row[i]) % q_;
      }
      if (v == Vec4{0, 0, 0, 0}) continue;
      normalize(v);
      out.push_back(v);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

 private:
  static int lead(const Vec4& v) {
    for (int i = 0; i < 4; ++i)
      if (v[i]) return i;
    return 4;
  }

  int inverse(int a) const {  // q prime, a != 0
    for (int x = 1; x < q_; ++x)
      if (a * x % q_ == 1) return x;
    return 0;
  }

  void normalize(Vec4& v) const {
    int l = lead(v);
    int inv = inverse(v[l]);
    for (int i = 0; i < 4; ++i) v[i] = v[i] * inv % q_;
  }

  void reduce(Vec4& v, const Vec4& row) const {
    int l = lead(row);
    if (v[l] == 0) return;
    int factor = v[l];  // row has leading 1
    for (int i = 0; i < 4; ++i) v[i] = ((v[i] - factor * row[i]) % q_ + q_) % q_;
  }

  int q_;
  std::vector<Vec4> rows_;
};

}  // namespace

Matroid pg3(int q) {
  if (q != 2 && q != 3) fail(Errc::UnsupportedParam, "pg3 supports q in {2,3}");

  // Points: 1-dim subspaces, represented by vectors with leading 1, in
  // lexicographic order.
  std::vector<Vec4> points;
  std::map<Vec4, int> index;
  Vec4 v{0, 0, 0, 0};
  auto next = [&](Vec4& w) {
    for (int i = 3; i >= 0; --i) {
      if (++w[i] < q) return true;
      w[i] = 0;
    }
    return false;
  };
  while (next(v)) {
    int lead = 0;
    while (lead < 4 && v[lead] == 0) ++lead;
    if (lead < 4 && v[lead] == 1) {
      index[v] = static_cast<int>(points.size());
      points.push_back(v);
    }
  }
  const int n = static_cast<int>(points.size());

  auto span_of = [&](Subset s) {
    Gf4Space space(q);
    for_each_element(s, [&](int e) { space.insert(points[e]); });
    Subset out = 0;
    for (const Vec4& p : space.points()) out |= single(index.at(p));
    return std::pair<int, Subset>(space.dim(), out);
  };

  std::vector<std::vector<Subset>> table(5);
  table[0].push_back(kEmptySet);
  for (int i = 0; i < n; ++i) table[1].push_back(single(i));
  std::set<Subset> lines, planes;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      auto [dim, line] = span_of(single(i) | single(j));
      if (dim == 2) lines.insert(line);
    }
  }
  for (Subset line : lines) {
    for (int k = 0; k < n; ++k) {
      if (test_bit(line, k)) continue;
      auto [dim, plane] = span_of(line | single(k));
      if (dim == 3) planes.insert(plane);
    }
  }
  table[2].assign(lines.begin(), lines.end());
  table[3].assign(planes.begin(), planes.end());
  table[4].push_back(full_set(n));

  std::vector<std::string> labels;
  for (const Vec4& p : points) {
    std::string s;
    for (int c : p) s += static_cast<char>('0' + c);
    labels.push_back(s);
  }
  return Matroid::from_flats(n, std::move(table), std::move(labels));
}

Matroid catalog(const std::string& spec) {
  std::string name = spec;
  std::vector<int> params;
  auto open = spec.find('(');
  if (open != std::string::npos) {
    if (spec.back() != ')') fail(Errc::UnknownCatalogEntry, "malformed catalog spec: " + spec);
    name = spec.substr(0, open);
    std::string inside = spec.substr(open + 1, spec.size() - open - 2);
    std::istringstream is(inside);
    std::string tok;
    while (std::getline(is, tok, ',')) {
      try {
        size_t used = 0;
        int value = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        params.push_back(value);
      } catch (const std::exception&) {
        fail(Errc::UnsupportedParam, "bad catalog parameter: " + tok);
      }
    }
  }

  auto arity = [&](size_t k) {
    if (params.size() != k)
      fail(Errc::UnsupportedParam, name + " takes " + std::to_string(k) + " parameter(s)");
  };
  if (name == "vamos") {
    arity(0);
    return vamos();
  }
  if (name == "uniform") {
    arity(2);
    return uniform(params[0], params[1]);
  }
  if (name == "boolean") {
    arity(1);
    return boolean_matroid(params[0]);
  }
  if (name == "pg3") {
    arity(1);
    return pg3(params[0]);
  }
  fail(Errc::UnknownCatalogEntry, "unknown catalog entry: " + name);
}

}  // namespace matroidlab
