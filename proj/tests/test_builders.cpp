#include <doctest.h>

#include <random>
#include <set>

#include "latcal/builders.hpp"
#include "support.hpp"

using namespace latcal;
namespace ts = latcal::testsupport;

namespace {
Poset bridge() { return Poset::from_covers(ts::bridge_elements(), ts::bridge_covers()); }
}  // namespace

TEST_CASE("downsets of the bridge poset") {
  SUBCASE("four nonempty states") {
    Poset states = downset_poset(bridge(), /*include_empty=*/false);
    CHECK(states.elements() ==
          std::vector<std::string>{"{L,R,S}", "{L,R}", "{L}", "{R}"});
  }
  SUBCASE("{L,S} is not a state") {
    Poset states = downset_poset(bridge(), true);
    CHECK(states.size() == 5);
    CHECK_FALSE(states.contains("{L,S}"));
  }
  SUBCASE("with the empty downset the family is a distributive lattice") {
    Lattice l = downset_lattice(bridge(), true);
    CHECK(l.size() == 5);
    CHECK(l.label(l.bottom()) == "{}");
    CHECK(l.is_distributive());
  }
  SUBCASE("without the bottom the bridge family is not a lattice") {
    CHECK_THROWS_AS(downset_lattice(bridge(), false), NotLatticeError);
  }
}

TEST_CASE("downset counts for chains and antichains") {
  std::vector<std::string> ids{"a", "b", "c", "d"};
  SUBCASE("antichain of n elements has 2^n downsets") {
    Poset anti = Poset::from_covers(ids, {});
    CHECK(downset_poset(anti, true).size() == 16);
  }
  SUBCASE("chain of n elements has n+1 downsets") {
    Poset chain = Poset::from_covers(ids, {{"a", "b"}, {"b", "c"}, {"c", "d"}});
    CHECK(downset_poset(chain, true).size() == 5);
  }
}

TEST_CASE("downset count equals antichain count") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 60; ++trial) {
    Poset p = ts::random_poset(rng);
    CHECK(downset_poset(p, true).size() == static_cast<int>(ts::count_antichains(p)));
  }
}

TEST_CASE("builder outputs certify as distributive lattices") {
  std::mt19937 rng(29);
  for (int trial = 0; trial < 25; ++trial) {
    Poset p = ts::random_poset(rng, 5, 0.4);
    Lattice l = downset_lattice(p, true);
    CHECK(l.is_distributive());
  }
  CHECK(powerset_lattice({"a", "b", "c"}).is_distributive());
}

TEST_CASE("powerset lattice") {
  SUBCASE("four states give sixteen statements") {
    Poset states = downset_poset(bridge(), false);
    Lattice statements = powerset_lattice(states.elements());
    CHECK(statements.size() == 16);
    CHECK(statements.label(statements.bottom()) == "{}");
    // The worked intermediate statement is an element.
    CHECK(statements.poset().contains("{{L,R,S},{L}}"));
  }
  SUBCASE("one state gives bottom and top only") {
    Lattice l = powerset_lattice({"s"});
    CHECK(l.size() == 2);
  }
  SUBCASE("join is union") {
    Lattice l = powerset_lattice({"a", "b"});
    CHECK(l.join("{a}", "{b}") == "{a,b}");
    CHECK(l.meet("{a}", "{a,b}") == "{a}");
  }
  SUBCASE("singletons are the join-irreducibles") {
    Lattice l = powerset_lattice({"a", "b", "c", "d"});
    std::set<std::string> irr;
    for (int j : l.join_irreducibles()) irr.insert(l.label(j));
    CHECK(irr == std::set<std::string>{"{a}", "{b}", "{c}", "{d}"});
  }
  SUBCASE("statement order encodes implication (subset oracle)") {
    Poset states = downset_poset(bridge(), false);
    Lattice statements = powerset_lattice(states.elements());
    // x <= y iff every state in x is a state in y: spot-check via join.
    CHECK(statements.leq(statements.index_of("{{L}}"),
                         statements.index_of("{{L,R,S},{L}}")));
    CHECK_FALSE(statements.leq(statements.index_of("{{R}}"),
                               statements.index_of("{{L,R,S},{L}}")));
  }
}

TEST_CASE("question lattice counts") {
  SUBCASE("bridge: 167 questions") {
    Poset states = downset_poset(bridge(), false);
    Lattice statements = powerset_lattice(states.elements());
    Lattice questions = question_lattice(statements);
    CHECK(questions.size() == 167);
    CHECK(questions.is_distributive());
  }
  SUBCASE("two states: 5 questions") {
    Lattice statements = powerset_lattice({"s1", "s2"});
    CHECK(question_lattice(statements).size() == 5);
  }
  SUBCASE("one state: 2 questions") {
    Lattice statements = powerset_lattice({"s1"});
    CHECK(question_lattice(statements).size() == 2);
  }
}

TEST_CASE("partition poset") {
  SUBCASE("n=3: the five partitions in canonical order") {
    Poset p = partition_poset(3);
    CHECK(p.elements() ==
          std::vector<std::string>{"abc", "ab|c", "ac|b", "a|bc", "a|b|c"});
    // abc is the top.
    for (const auto& e : p.elements()) CHECK(p.leq(e, "abc"));
    // The three two-block partitions are pairwise incomparable.
    CHECK_FALSE(p.leq("a|bc", "ac|b"));
    CHECK_FALSE(p.leq("ac|b", "ab|c"));
    CHECK_FALSE(p.leq("ab|c", "a|bc"));
    CHECK(p.classify() == Shape::Mixed);
  }
  SUBCASE("n=3 certifies as a non-distributive lattice") {
    Lattice l = certify_or_throw(partition_poset(3));
    CHECK_FALSE(l.is_distributive());
  }
  SUBCASE("n=1 is a single partition") {
    CHECK(partition_poset(1).size() == 1);
  }
  SUBCASE("n=4 has Bell(4)=15 partitions") {
    CHECK(partition_poset(4).size() == 15);
  }
  SUBCASE("size guard") {
    CHECK_THROWS_AS(partition_poset(9), SizeLimitError);
  }
}

TEST_CASE("lattice product") {
  Lattice b1 = powerset_lattice({"a"});
  SUBCASE("B1 x B1 is the four-element diamond") {
    auto prod = lattice_product(b1, b1);
    CHECK(prod.lattice->size() == 4);
    Poset diamond = Poset::from_covers({"0", "x", "y", "1"},
                                       {{"0", "x"}, {"0", "y"}, {"x", "1"}, {"y", "1"}});
    CHECK(ts::order_isomorphic(prod.lattice->poset(), diamond));
  }
  SUBCASE("identity factor") {
    Lattice one = certify_or_throw(Poset::from_covers({"u"}, {}));
    Lattice b2 = powerset_lattice({"a", "b"});
    auto prod = lattice_product(b2, one);
    CHECK(ts::order_isomorphic(prod.lattice->poset(), b2.poset()));
  }
  SUBCASE("associativity up to isomorphism, with flat tuple labels") {
    Lattice c2 = certify_or_throw(Poset::from_covers({"0", "1"}, {{"0", "1"}}));
    Lattice c3 = certify_or_throw(
        Poset::from_covers({"p", "q", "r"}, {{"p", "q"}, {"q", "r"}}));
    auto left = lattice_product(*lattice_product(b1, c2).lattice, c3);
    auto right = lattice_product(b1, *lattice_product(c2, c3).lattice);
    CHECK(ts::order_isomorphic(left.lattice->poset(), right.lattice->poset()));
    // Flattening makes associativity an identity of printed forms.
    CHECK(left.lattice->poset().elements() == right.lattice->poset().elements());
    CHECK(left.lattice->poset().contains("({a},1,r)"));
  }
  SUBCASE("order is the conjunction of factor orders") {
    std::mt19937 rng(31);
    int trials = 0;
    while (trials < 200) {
      Poset pa = ts::random_poset(rng, 4, 0.5);
      Poset pb = ts::random_poset(rng, 4, 0.5);
      auto ra = certify_lattice(pa);
      auto rb = certify_lattice(pb);
      if (!std::holds_alternative<Lattice>(ra) || !std::holds_alternative<Lattice>(rb)) continue;
      ++trials;
      const auto& la = std::get<Lattice>(ra);
      const auto& lb = std::get<Lattice>(rb);
      auto prod = lattice_product(la, lb);
      for (int e = 0; e < prod.lattice->size(); ++e) {
        for (int f = 0; f < prod.lattice->size(); ++f) {
          auto [x1, y1] = prod.factors[e];
          auto [x2, y2] = prod.factors[f];
          CHECK(prod.lattice->leq(e, f) == (la.leq(x1, x2) && lb.leq(y1, y2)));
          CHECK(prod.factors[prod.lattice->join(e, f)] ==
                std::pair{la.join(x1, x2), lb.join(y1, y2)});
          CHECK(prod.factors[prod.lattice->meet(e, f)] ==
                std::pair{la.meet(x1, x2), lb.meet(y1, y2)});
        }
      }
    }
  }
}

TEST_CASE("builder size guards") {
  std::vector<std::string> many;
  for (int i = 0; i < 21; ++i) many.push_back("x" + std::to_string(i));
  CHECK_THROWS_AS(powerset_lattice(many), SizeLimitError);
  CHECK_THROWS_AS(downset_poset(Poset::from_covers(many, {}), true), SizeLimitError);
  std::vector<std::string> thirteen(many.begin(), many.begin() + 13);
  CHECK_THROWS_AS(powerset_lattice(thirteen), SizeLimitError);  // 8192 > 4096 cap
}
