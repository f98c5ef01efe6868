#include "latcal/document.hpp"

#include <algorithm>
#include <sstream>

namespace latcal {

namespace {

std::vector<std::string> tokens_of(const std::string& line) {
  std::istringstream is(line);
  std::vector<std::string> toks;
  std::string t;
  while (is >> t) toks.push_back(t);
  return toks;
}

void validate_identifier(const std::string& id, int line) {
  if (id.empty()) throw ParseError(line, "empty identifier");
  if (id.find('<') != std::string::npos)
    throw ParseError(line, "identifier '" + id + "' may not contain '<'");
}

}  // namespace

PosetDocument parse_poset_document(std::istream& in) {
  PosetDocument doc;
  bool saw_header = false;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    auto toks = tokens_of(line);
    if (toks.empty()) continue;
    if (toks[0] == "elements:") {
      if (saw_header) throw ParseError(lineno, "duplicate 'elements:' header");
      saw_header = true;
      for (size_t i = 1; i < toks.size(); ++i) {
        validate_identifier(toks[i], lineno);
        doc.elements.push_back(toks[i]);
      }
      if (doc.elements.empty()) throw ParseError(lineno, "'elements:' line names no elements");
      continue;
    }
    if (!saw_header) throw ParseError(lineno, "expected 'elements:' header before cover lines");
    if (toks.size() != 3 || toks[1] != "<")
      throw ParseError(lineno, "expected cover line '<lower> < <upper>'");
    validate_identifier(toks[0], lineno);
    validate_identifier(toks[2], lineno);
    doc.covers.emplace_back(toks[0], toks[2]);
  }
  if (!saw_header) throw ParseError(lineno, "missing 'elements:' header");
  return doc;
}

PosetDocument parse_poset_document(const std::string& text) {
  std::istringstream is(text);
  return parse_poset_document(is);
}

Poset poset_from_document(const PosetDocument& doc) {
  return Poset::from_covers(doc.elements, doc.covers);
}

std::string serialize_poset_document(const Poset& p) {
  std::ostringstream os;
  os << "elements:";
  for (const auto& e : p.elements()) os << ' ' << e;
  os << '\n';
  for (const auto& [lo, hi] : p.cover_labels()) os << lo << " < " << hi << '\n';
  return os.str();
}

std::string to_dot(const Poset& p) {
  std::ostringstream os;
  os << "digraph hasse {\n  rankdir=BT;\n  node [shape=plaintext];\n  edge [dir=none];\n";
  for (const auto& e : p.elements()) os << "  \"" << e << "\";\n";
  for (const auto& [lo, hi] : p.cover_labels())
    os << "  \"" << lo << "\" -> \"" << hi << "\";\n";
  os << "}\n";
  return os.str();
}

}  // namespace latcal
