#include <catch2/catch_amalgamated.hpp>

#include "bunched/harness.hpp"
#include "bunched/translate.hpp"

using namespace bunched;

TEST_CASE("flattening bunches") {
  CHECK(render(cf(parse_bunch("p1"))) == "p1");
  CHECK(render(cf(parse_bunch("p1 , p2"))) == "p1 & p2");
  CHECK(render(cf(parse_bunch("p1 ; p2"))) == "p1 * p2");
  CHECK(render(cf(parse_bunch("(p1 , p2) ; p3"))) == "(p1 & p2) * p3");
}

TEST_CASE("fusion translates to its curried refutation") {
  CHECK(render(tau(parse_formula("p1 * p2"))) == "~(p1 -> ~p2)");
  CHECK(render(tau(parse_formula("(p1 * p2) | p3"))) == "~(p1 -> ~p2) | p3");
  CHECK(render(tau(parse_formula("p1 * (p2 * p3)"))) == "~(p1 -> ~~(p2 -> ~p3))");
}

TEST_CASE("translation is the identity without fusion") {
  FormulaPtr f = parse_formula("~(p1 & (p2 -> p3))");
  CHECK(equal(tau(f), f));
}

TEST_CASE("translation preserves variables and removes fusion") {
  Rng rng(31);
  auto fusion_free = [](FormulaPtr f) {
    std::vector<FormulaPtr> stack{std::move(f)};
    while (!stack.empty()) {
      FormulaPtr cur = stack.back();
      stack.pop_back();
      if (cur->kind == FormulaKind::Fusion) return false;
      if (cur->lhs) stack.push_back(cur->lhs);
      if (cur->rhs) stack.push_back(cur->rhs);
    }
    return true;
  };
  for (int i = 0; i < 2000; ++i) {
    FormulaPtr f = gen_formula(rng, 4, 4);
    FormulaPtr t = tau(f);
    CHECK(fusion_free(t));
    CHECK(vars(t) == vars(f));
  }
}

TEST_CASE("bunch translation goes through flattening") {
  Rng rng(32);
  for (int i = 0; i < 500; ++i) {
    BunchPtr b = gen_bunch(rng, 3, 4);
    CHECK(equal(tau(b), tau(cf(b))));
    CHECK(vars(cf(b)) == vars(b));
  }
}
