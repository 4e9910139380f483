#pragma once

#include <string>
#include <utility>
#include <vector>

#include "matroidlab/matroid.hpp"

namespace matroidlab {

/// Line-oriented matroid file. Grammar (after stripping blank lines and
/// '#' comments, directives in this order):
///
///   matroid NAME
///   elements N
///   labels L0 L1 ... L{N-1}        (optional)
///   type bases|circuits|flats
///   <one set per line>
///
/// bases/circuits lines are whitespace-separated element indices; "-"
/// denotes the empty set. flats lines are "RANK: i j k" with the indices
/// optionally empty. Canonical serialization always uses a flats body.
struct MatroidFile {
  enum class BodyKind { Bases, Circuits, Flats };

  std::string name;
  int elements = 0;
  BodyKind kind = BodyKind::Flats;
  std::vector<std::string> labels;
  std::vector<Subset> sets;                   // bases or circuits body
  std::vector<std::pair<int, Subset>> flats;  // (rank, flat) rows
};

const char* body_kind_name(MatroidFile::BodyKind k);

/// Throws SyntaxError with a line number.
MatroidFile parse_matroid_file(const std::string& text);

/// Validates and builds; construction errors propagate (F1Violated etc.).
Matroid to_matroid(const MatroidFile& file);

/// Canonical file: flats body in canonical order.
MatroidFile to_file(const Matroid& m, const std::string& name);

std::string serialize(const MatroidFile& file);
std::string serialize(const Matroid& m, const std::string& name);

}  // namespace matroidlab
