#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "latcal/poset.hpp"

namespace latcal {

// Textual interchange format for posets:
//   elements: <id> <id> ...
//   <lower> < <upper>
// '#' starts a comment; identifiers are nonempty, whitespace- and '<'-free.
struct PosetDocument {
  std::vector<std::string> elements;
  std::vector<std::pair<std::string, std::string>> covers;
};

// Throws ParseError naming the offending line.
PosetDocument parse_poset_document(std::istream& in);
PosetDocument parse_poset_document(const std::string& text);

// Canonical form: sorted elements, sorted cover pairs.
std::string serialize_poset_document(const Poset& p);

Poset poset_from_document(const PosetDocument& doc);

// Hasse diagram, ranked bottom-up.
std::string to_dot(const Poset& p);

}  // namespace latcal
