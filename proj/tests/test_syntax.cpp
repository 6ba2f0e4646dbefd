#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "bunched/syntax.hpp"

using namespace bunched;

TEST_CASE("atoms are 1-based") {
  CHECK(render(mk_atom(1)) == "p1");
  CHECK(render(mk_atom(12)) == "p12");
  CHECK_THROWS_AS(mk_atom(0), std::invalid_argument);
  CHECK_THROWS_AS(mk_atom(-3), std::invalid_argument);
}

TEST_CASE("identifier interning") {
  CHECK(render(parse_formula("p7")) == "p7");
  CHECK(render(parse_formula("a")) == "p1");
  CHECK(render(parse_formula("q")) == "p17");
  CHECK(render(parse_formula("z")) == "p26");
  CHECK(render(parse_formula("A")) == "p27");
  CHECK_THROWS_AS(parse_formula("p0"), ParseError);
  CHECK(render(parse_formula("p01")) == "p1");  // leading zeros normalize away
}

TEST_CASE("formula parsing and canonical rendering") {
  CHECK(render(parse_formula("p1 -> p2")) == "p1 -> p2");
  CHECK(render(parse_formula("p1->p2")) == "p1 -> p2");
  CHECK(render(parse_formula("~p1")) == "~p1");
  CHECK(render(parse_formula("~~(p1 & p2)")) == "~~(p1 & p2)");
  CHECK(render(parse_formula("(p1 | p2) * p3")) == "(p1 | p2) * p3");
  CHECK(render(parse_formula("~(p1 -> ~p2)")) == "~(p1 -> ~p2)");
}

TEST_CASE("binary operators need explicit parentheses") {
  CHECK_THROWS_AS(parse_formula("p1 -> p2 -> p3"), ParseError);
  CHECK_THROWS_AS(parse_formula("p1 & p2 | p3"), ParseError);
  CHECK(render(parse_formula("p1 -> (p2 -> p3)")) == "p1 -> (p2 -> p3)");
}

TEST_CASE("bunch operators cannot appear inside formulas") {
  CHECK_THROWS_AS(parse_formula("p1 , p2"), ParseError);
  CHECK_THROWS_AS(parse_formula("p1 -> (p2 ; p3)"), ParseError);
  CHECK_THROWS_AS(parse_consecution("(p1 , p2) -> p3 |- p1"), ParseError);
}

TEST_CASE("bunch parsing") {
  CHECK(render(parse_bunch("p1 , p2")) == "p1 , p2");
  CHECK(render(parse_bunch("(p1 , p2) ; p3")) == "(p1 , p2) ; p3");
  CHECK(render(parse_bunch("p1 -> p2")) == "p1 -> p2");  // one-leaf bunch
  BunchPtr b = parse_bunch("(p1 -> p2) ; p1");
  REQUIRE(b->kind == BunchKind::Semi);
  CHECK(b->left->kind == BunchKind::Leaf);
  CHECK(b->left->formula->kind == FormulaKind::Imp);
}

TEST_CASE("consecution parsing") {
  Consecution c = parse_consecution("p1 , p2 |- p1 & p2");
  CHECK(render(c) == "p1 , p2 |- p1 & p2");
  CHECK(render(parse_consecution("p1,p2|-p1&p2")) == "p1 , p2 |- p1 & p2");
  CHECK_THROWS_AS(parse_consecution("p1 |- p2 |- p3"), ParseError);
  CHECK_THROWS_AS(parse_consecution("p1 |-"), ParseError);
  CHECK_THROWS_AS(parse_consecution("|- p1"), ParseError);
  CHECK_THROWS_AS(parse_consecution("p1 |- p2 , p3"), ParseError);
}

TEST_CASE("structural equality") {
  FormulaPtr a = parse_formula("(p1 & p2) -> ~p3");
  FormulaPtr b = parse_formula("(p1&p2)->~p3");
  CHECK(equal(a, b));
  CHECK_FALSE(equal(a, parse_formula("(p1 & p2) -> ~p4")));
  CHECK(equal(parse_bunch("p1 ; (p2 , p3)"), parse_bunch("p1;(p2,p3)")));
  CHECK_FALSE(equal(parse_bunch("p1 ; p2"), parse_bunch("p1 , p2")));
}

TEST_CASE("path rendering and parsing") {
  CHECK(render_path({}) == "e");
  CHECK(render_path({0, 1, 0}) == "0.1.0");
  CHECK(parse_path("e") == Path{});
  CHECK(parse_path("0.1.0") == (Path{0, 1, 0}));
  CHECK_THROWS_AS(parse_path("0.2"), ParseError);
  CHECK_THROWS_AS(parse_path("0..1"), ParseError);
}

TEST_CASE("subterm and replacement") {
  BunchPtr b = parse_bunch("p1 , ((p2 ; p3) , p4)");
  CHECK(render(subterm_at(b, {})) == "p1 , ((p2 ; p3) , p4)");
  CHECK(render(subterm_at(b, {1, 0})) == "p2 ; p3");
  CHECK(render(subterm_at(b, {1, 0, 1})) == "p3");
  CHECK_THROWS_AS(subterm_at(b, {2}), InvalidPath);
  CHECK_THROWS_AS(subterm_at(mk_leaf(mk_atom(1)), {0}), InvalidPath);

  BunchPtr swapped = replace_at(b, {1, 0}, parse_bunch("p9"));
  CHECK(render(swapped) == "p1 , (p9 , p4)");
  CHECK(equal(replace_at(b, {1, 0}, subterm_at(b, {1, 0})), b));
}

TEST_CASE("subbunch paths are preorder") {
  BunchPtr b = parse_bunch("p1 , (p2 ; p3)");
  std::vector<Path> want = {{}, {0}, {1}, {1, 0}, {1, 1}};
  CHECK(subbunch_paths(b) == want);
  CHECK(leaf_count(b) == 3);
}

TEST_CASE("variable collection") {
  std::set<Atom> v = vars(parse_formula("(p1 & p2) -> p1"));
  CHECK(v == std::set<Atom>{Atom{1}, Atom{2}});
  CHECK(vars(parse_bunch("p3 ; (p1 , p3)")) == std::set<Atom>{Atom{1}, Atom{3}});
}
