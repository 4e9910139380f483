#include "matroidlab/io.hpp"

#include <algorithm>
#include <sstream>

namespace matroidlab {

const char* body_kind_name(MatroidFile::BodyKind k) {
  switch (k) {
    case MatroidFile::BodyKind::Bases: return "bases";
    case MatroidFile::BodyKind::Circuits: return "circuits";
    case MatroidFile::BodyKind::Flats: return "flats";
  }
  return "unknown";
}

namespace {

[[noreturn]] void syntax_error(int line, const std::string& message) {
  fail(Errc::SyntaxError, "line " + std::to_string(line) + ": " + message);
}

std::vector<std::string> tokens_of(const std::string& line) {
  std::istringstream is(line);
  std::vector<std::string> out;
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

int parse_int(const std::string& tok, int line, const char* what) {
  try {
    size_t used = 0;
    int value = std::stoi(tok, &used);
    if (used != tok.size()) throw std::invalid_argument(tok);
    return value;
  } catch (const std::exception&) {
    syntax_error(line, std::string("expected ") + what + ", got '" + tok + "'");
  }
}

Subset parse_index_set(const std::vector<std::string>& toks, size_t from, int n, int line) {
  Subset s = 0;
  for (size_t i = from; i < toks.size(); ++i) {
    int e = parse_int(toks[i], line, "an element index");
    if (e < 0 || e >= n) syntax_error(line, "element index " + toks[i] + " out of range");
    if (test_bit(s, e)) syntax_error(line, "duplicate element index " + toks[i]);
    s |= single(e);
  }
  return s;
}

}  // namespace

MatroidFile parse_matroid_file(const std::string& text) {
  MatroidFile file;
  std::istringstream is(text);
  std::string raw;
  int line_no = 0;

  enum class Stage { Name, Elements, TypeOrLabels, Body } stage = Stage::Name;
  bool any_body = false;

  while (std::getline(is, raw)) {
    ++line_no;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    auto toks = tokens_of(raw);
    if (toks.empty() || toks[0][0] == '#') continue;

    switch (stage) {
      case Stage::Name:
        if (toks[0] != "matroid" || toks.size() != 2)
          syntax_error(line_no, "expected 'matroid NAME'");
        file.name = toks[1];
        stage = Stage::Elements;
        break;
      case Stage::Elements:
        if (toks[0] != "elements" || toks.size() != 2)
          syntax_error(line_no, "expected 'elements N'");
        file.elements = parse_int(toks[1], line_no, "an element count");
        if (file.elements < 0) syntax_error(line_no, "negative element count");
        stage = Stage::TypeOrLabels;
        break;
      case Stage::TypeOrLabels:
        if (toks[0] == "labels") {
          if (!file.labels.empty()) syntax_error(line_no, "duplicate labels directive");
          file.labels.assign(toks.begin() + 1, toks.end());
          if (static_cast<int>(file.labels.size()) != file.elements)
            syntax_error(line_no, "expected " + std::to_string(file.elements) + " labels");
          break;
        }
        if (toks[0] != "type" || toks.size() != 2)
          syntax_error(line_no, "expected 'type bases|circuits|flats'");
        if (toks[1] == "bases")
          file.kind = MatroidFile::BodyKind::Bases;
        else if (toks[1] == "circuits")
          file.kind = MatroidFile::BodyKind::Circuits;
        else if (toks[1] == "flats")
          file.kind = MatroidFile::BodyKind::Flats;
        else
          syntax_error(line_no, "unknown body type '" + toks[1] + "'");
        stage = Stage::Body;
        break;
      case Stage::Body:
        any_body = true;
        if (file.kind == MatroidFile::BodyKind::Flats) {
          // "RANK: i j k"
          auto colon = raw.find(':');
          if (colon == std::string::npos) syntax_error(line_no, "expected 'RANK: elements'");
          auto head = tokens_of(raw.substr(0, colon));
          if (head.size() != 1) syntax_error(line_no, "expected a single rank before ':'");
          int rank = parse_int(head[0], line_no, "a rank");
          if (rank < 0) syntax_error(line_no, "negative rank");
          auto rest = tokens_of(raw.substr(colon + 1));
          file.flats.emplace_back(rank, parse_index_set(rest, 0, file.elements, line_no));
        } else {
          if (toks.size() == 1 && toks[0] == "-") {
            file.sets.push_back(kEmptySet);
          } else {
            file.sets.push_back(parse_index_set(toks, 0, file.elements, line_no));
          }
        }
        break;
    }
  }
  if (stage != Stage::Body) syntax_error(line_no, "incomplete file header");
  if (!any_body) syntax_error(line_no, "missing body");
  return file;
}

Matroid to_matroid(const MatroidFile& file) {
  switch (file.kind) {
    case MatroidFile::BodyKind::Bases:
      return Matroid::from_bases(file.elements, file.sets, file.labels);
    case MatroidFile::BodyKind::Circuits:
      return Matroid::from_circuits(file.elements, file.sets, file.labels);
    case MatroidFile::BodyKind::Flats: {
      int max_rank = 0;
      for (const auto& [rank, flat] : file.flats) max_rank = std::max(max_rank, rank);
      std::vector<std::vector<Subset>> table(max_rank + 1);
      for (const auto& [rank, flat] : file.flats) table[rank].push_back(flat);
      for (const auto& level : table) {
        if (level.empty())
          fail(Errc::ValidationError, "flats body misses a rank level below the top");
      }
      return Matroid::from_flats(file.elements, std::move(table), file.labels);
    }
  }
  fail(Errc::InternalInvariant, "unhandled body kind");
}

MatroidFile to_file(const Matroid& m, const std::string& name) {
  MatroidFile file;
  file.name = name;
  file.elements = m.size();
  file.kind = MatroidFile::BodyKind::Flats;
  file.labels = m.labels();
  for (int k = 0; k <= m.rank(); ++k)
    for (Subset f : m.flats_of_rank(k)) file.flats.emplace_back(k, f);
  return file;
}

std::string serialize(const MatroidFile& file) {
  std::ostringstream os;
  os << "matroid " << file.name << "\n";
  os << "elements " << file.elements << "\n";
  if (!file.labels.empty()) {
    os << "labels";
    for (const auto& l : file.labels) os << ' ' << l;
    os << "\n";
  }
  os << "type " << body_kind_name(file.kind) << "\n";
  if (file.kind == MatroidFile::BodyKind::Flats) {
    for (const auto& [rank, flat] : file.flats) {
      os << rank << ':';
      for_each_element(flat, [&](int e) { os << ' ' << e; });
      os << "\n";
    }
  } else {
    for (Subset s : file.sets) {
      if (s == kEmptySet) {
        os << "-\n";
        continue;
      }
      bool first = true;
      for_each_element(s, [&](int e) {
        os << (first ? "" : " ") << e;
        first = false;
      });
      os << "\n";
    }
  }
  return os.str();
}

std::string serialize(const Matroid& m, const std::string& name) {
  return serialize(to_file(m, name));
}

}  // namespace matroidlab
