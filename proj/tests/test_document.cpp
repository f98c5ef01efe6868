#include <doctest.h>

#include "latcal/document.hpp"
#include "support.hpp"

using namespace latcal;
namespace ts = latcal::testsupport;

TEST_CASE("parse a poset document") {
  auto doc = parse_poset_document(
      "# the bridge\n"
      "elements: L R S\n"
      "L < S  # span needs the left side\n"
      "R < S\n");
  CHECK(doc.elements == std::vector<std::string>{"L", "R", "S"});
  CHECK(doc.covers.size() == 2);
  Poset p = poset_from_document(doc);
  CHECK(p.leq("L", "S"));
}

TEST_CASE("parse errors name the line") {
  auto expect_line = [](const std::string& text, int line) {
    try {
      parse_poset_document(text);
      FAIL("expected ParseError for: ", text);
    } catch (const ParseError& e) {
      CHECK(e.line == line);
    }
  };
  expect_line("", 0);                                 // empty file
  expect_line("a < b\n", 1);                          // cover before header
  expect_line("elements: a b\na <\n", 2);             // malformed cover
  expect_line("elements: a b\na less b\n", 2);        // missing '<'
  expect_line("elements: a\nelements: b\n", 2);       // duplicate header
  expect_line("elements:\n", 1);                      // no elements named
  expect_line("elements: a a<b\n", 1);                // '<' inside identifier
}

TEST_CASE("serialization is canonical and round-trips") {
  // Out-of-order input with a redundant cover.
  Poset p = poset_from_document(parse_poset_document(
      "elements: c a b\nb < c\na < b\na < c\n"));
  CHECK(p.had_redundant_covers());
  std::string canon = serialize_poset_document(p);
  CHECK(canon == "elements: a b c\na < b\nb < c\n");
  // Parse-serialize is the identity on canonical documents.
  Poset q = poset_from_document(parse_poset_document(canon));
  CHECK(serialize_poset_document(q) == canon);
}

TEST_CASE("round-trip preserves order on random posets") {
  std::mt19937 rng(59);
  for (int trial = 0; trial < 40; ++trial) {
    Poset p = ts::random_poset(rng);
    Poset q = poset_from_document(parse_poset_document(serialize_poset_document(p)));
    CHECK(q.elements() == p.elements());
    CHECK(q.covers() == p.covers());
  }
}

TEST_CASE("DOT emission lists every element and cover edge") {
  Poset p = Poset::from_covers(ts::bridge_elements(), ts::bridge_covers());
  std::string dot = to_dot(p);
  CHECK(dot.find("rankdir=BT") != std::string::npos);
  CHECK(dot.find("\"L\" -> \"S\"") != std::string::npos);
  CHECK(dot.find("\"R\" -> \"S\"") != std::string::npos);
}
