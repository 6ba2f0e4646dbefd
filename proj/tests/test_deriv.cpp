#include <catch2/catch_amalgamated.hpp>

#include <map>

#include "bunched/deriv.hpp"
#include "bunched/fixtures.hpp"
#include "bunched/harness.hpp"

using namespace bunched;

namespace {

ProofTreePtr weakened_id(const FormulaPtr& c, const BunchPtr& filler) {
  Consecution mc{mk_comma(mk_leaf(c), filler), c};
  return mk_rule(RuleName::eK, {mk_id(c)}, mc, Path{});
}

}  // namespace

TEST_CASE("rule spellings round trip") {
  for (RuleName r : kAllRules) {
    auto back = rule_from_spelling(rule_spelling(r));
    REQUIRE(back.has_value());
    CHECK(*back == r);
  }
  CHECK_FALSE(rule_from_spelling("bogus").has_value());
}

TEST_CASE("rule arities") {
  CHECK(premise_count(RuleName::Id) == 0);
  CHECK(premise_count(RuleName::ImpI) == 1);
  CHECK(premise_count(RuleName::ImpE) == 2);
  CHECK(premise_count(RuleName::Cut) == 2);
  CHECK(premise_count(RuleName::OrE) == 3);
  CHECK(premise_count(RuleName::eK) == 1);
  CHECK(rule_arity(RuleName::OrE) == 4);
}

TEST_CASE("system membership") {
  CheckOptions dflt;
  CHECK(rule_in_system(RuleName::NegI, System::B, dflt));
  CHECK(rule_in_system(RuleName::NegI, System::R, dflt));
  CHECK_FALSE(rule_in_system(RuleName::NegI2, System::B, dflt));
  CHECK(rule_in_system(RuleName::NegI2, System::R, dflt));
  CHECK_FALSE(rule_in_system(RuleName::sW, System::B, dflt));
  CheckOptions strict;
  strict.retain_neg_i = false;
  CHECK(rule_in_system(RuleName::NegI, System::B, strict));
  CHECK_FALSE(rule_in_system(RuleName::NegI, System::R, strict));
}

TEST_CASE("id and open leaves") {
  CHECK(check(mk_id(parse_formula("p1 & p2")), System::B).valid);
  CheckReport open = check(mk_open(parse_consecution("p1 |- p2")), System::B);
  CHECK_FALSE(open.valid);  // no rule node at all
  REQUIRE(open.failures.size() == 1);
  CHECK(open.failures[0].reason == "no rule node");

  ProofTreePtr bad_id = mk_rule(RuleName::Id, {}, parse_consecution("p1 |- p2"));
  CHECK_FALSE(check(bad_id, System::B).valid);
}

TEST_CASE("embedded fixtures check as expected") {
  for (const fixtures::Fixture& fx : fixtures::all()) {
    ProofTreePtr t = parse_derivation(fx.content);
    CHECK(check(t, fx.system).valid == fx.valid);
  }
}

TEST_CASE("arity violations are reported") {
  ProofTreePtr t = parse_derivation(fixtures::kOrEMislabeled);
  CheckReport rep = check(t, System::B);
  REQUIRE_FALSE(rep.valid);
  REQUIRE_FALSE(rep.failures.empty());
  CHECK(rep.failures[0].reason.find("arity violation") != std::string::npos);
}

TEST_CASE("structural rules rewrite right to left") {
  ProofTreePtr base = mk_id(parse_formula("p1"));
  Consecution weak{parse_bunch("p1 , p2"), parse_formula("p1")};
  ProofTreePtr k = mk_rule(RuleName::eK, {base}, weak, Path{});
  CHECK(check(k, System::B).valid);

  // the reverse direction only passes with the bidirectional option
  ProofTreePtr reverse = mk_rule(RuleName::eK, {k}, base->conclusion, Path{});
  CHECK_FALSE(check(reverse, System::B).valid);
  CheckOptions bidi;
  bidi.structural_bidirectional = true;
  CHECK(check(reverse, System::B, bidi).valid);

  ProofTreePtr c = mk_rule(RuleName::eC, {k}, Consecution{parse_bunch("p2 , p1"), parse_formula("p1")});
  CHECK(check(c, System::B).valid);

  ProofTreePtr dup = mk_rule(RuleName::eK, {base},
                             Consecution{parse_bunch("p1 , p1"), parse_formula("p1")}, Path{});
  ProofTreePtr w = mk_rule(RuleName::eW, {dup}, base->conclusion, Path{});
  CHECK(check(w, System::B).valid);
}

TEST_CASE("associativity rewrites only commas") {
  ProofTreePtr base = mk_id(parse_formula("p1"));
  Consecution nested{parse_bunch("p1 , (p2 , p3)"), parse_formula("p1")};
  ProofTreePtr k = mk_rule(RuleName::eK, {base},
                           Consecution{parse_bunch("p1 , p2"), parse_formula("p1")}, Path{});
  ProofTreePtr k2 = mk_rule(RuleName::eK, {k}, nested, Path{});
  // regroup to the left
  ProofTreePtr b = mk_rule(RuleName::eB, {k2},
                           Consecution{parse_bunch("(p1 , p2) , p3"), parse_formula("p1")});
  CHECK(check(b, System::B).valid);
  ProofTreePtr sb = mk_rule(RuleName::sB, {k2},
                            Consecution{parse_bunch("(p1 ; p2) ; p3"), parse_formula("p1")});
  CHECK_FALSE(check(sb, System::R).valid);
}

TEST_CASE("context rules resolve their hole") {
  // cut p2 into a weakened context, hole annotated
  ProofTreePtr minor = weakened_id(parse_formula("p1"), parse_bunch("p2"));
  ProofTreePtr cut = mk_rule(RuleName::Cut, {mk_id(parse_formula("p2")), minor},
                             Consecution{parse_bunch("p1 , p2"), parse_formula("p1")}, Path{1});
  CHECK(check(cut, System::B).valid);

  // a wrong annotation falls back to scanning
  ProofTreePtr off = mk_rule(RuleName::Cut, {mk_id(parse_formula("p2")), minor},
                             Consecution{parse_bunch("p1 , p2"), parse_formula("p1")}, Path{0});
  CHECK(check(off, System::B).valid);

  // no position works: the filler formula appears nowhere
  ProofTreePtr broken = mk_rule(RuleName::Cut, {mk_id(parse_formula("p9")), minor},
                                Consecution{parse_bunch("p1 , p2"), parse_formula("p1")});
  CHECK_FALSE(check(broken, System::B).valid);
  DepthSubstitution d;
  CHECK_THROWS_AS(apply_depth_to_tree(d, 0, broken), HoleResolutionError);
}

TEST_CASE("tree actions agree with direct application at the root") {
  GenConfig cfg;
  cfg.max_rule_nodes = 8;
  Rng rng(41);
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    cfg.seed = seed;
    ProofTreePtr t = gen_derivation(cfg);
    DepthSubstitution d = gen_depth_substitution(rng, t->conclusion, cfg);
    int n = rng.range(-2, 2);
    ProofTreePtr image = apply_depth_to_tree(d, n, t);
    CHECK(equal(image->conclusion, apply_depth(d, n, t->conclusion)));
    CHECK(check(image, System::B).valid);

    RseqSubstitution s = gen_rseq_substitution(rng, t->conclusion, cfg);
    ProofTreePtr rimage = apply_rseq_to_tree(s, "", t);
    CHECK(equal(rimage->conclusion, apply_rseq(s, "", t->conclusion)));
    CHECK(check(rimage, System::B).valid);
  }
}

TEST_CASE("rseq action away from the root can break a tree") {
  ProofTreePtr t = fixtures::modus_ponens_tree();
  std::map<RseqSubstitution::Key, FormulaPtr> table;
  table[{"lP", 1}] = parse_formula("p2");
  RseqSubstitution s = RseqSubstitution::from_table(table);
  CHECK(check(apply_rseq_to_tree(s, "", t), System::B).valid);
  ProofTreePtr broken = apply_rseq_to_tree(s, "l", t);
  CHECK_FALSE(check(broken, System::B).valid);
}

TEST_CASE("derived rules collect distinct open leaves") {
  ProofTreePtr t = parse_derivation(fixtures::kFusIExample);
  DerivedRule dr = extract_derived_rule(t, System::B);
  REQUIRE(dr.premises.size() == 2);
  CHECK(render(dr.premises[0]) == "p1 |- p2");
  CHECK(render(dr.premises[1]) == "p3 |- p4");
  CHECK(render(dr.conclusion) == "p1 ; p3 |- p2 * p4");

  ProofTreePtr open = mk_open(parse_consecution("p1 |- p1"));
  ProofTreePtr andi = mk_rule(RuleName::AndI, {open, open},
                              parse_consecution("p1 , p1 |- p1 & p1"));
  DerivedRule dup = extract_derived_rule(andi, System::B);
  CHECK(dup.premises.size() == 1);

  ProofTreePtr bad = parse_derivation(fixtures::kOrEMislabeled);
  CHECK_THROWS_AS(extract_derived_rule(bad, System::B), std::invalid_argument);
}

TEST_CASE("derivation text format") {
  ProofTreePtr t = parse_derivation(fixtures::kFusIExample);
  std::string canonical =
      "(rule fusI\n"
      "  (open \"p1 |- p2\")\n"
      "  (open \"p3 |- p4\")\n"
      "  (concl \"p1 ; p3 |- p2 * p4\"))\n";
  CHECK(serialize_derivation(t) == canonical);
  CHECK(serialize_derivation(parse_derivation(canonical)) == canonical);

  CHECK(serialize_derivation(mk_id(parse_formula("p1"))) == "(id \"p1\")\n");

  ProofTreePtr holed = mk_rule(RuleName::eK, {mk_id(parse_formula("p1"))},
                               parse_consecution("p1 , p2 |- p1"), Path{});
  std::string out = serialize_derivation(holed);
  CHECK(out.find("(hole \"e\")") != std::string::npos);
  CHECK(serialize_derivation(parse_derivation(out)) == out);
}

TEST_CASE("derivation parse errors") {
  CHECK_THROWS_AS(parse_derivation("(rule impI (id \"p1\"))"), ParseError);       // no concl
  CHECK_THROWS_AS(parse_derivation("(id \"p1\""), ParseError);                    // unbalanced
  CHECK_THROWS_AS(parse_derivation("(id \"p1)"), ParseError);                     // unterminated
  CHECK_THROWS_AS(parse_derivation("(rule nope (concl \"p1 |- p1\"))"), ParseError);
  CHECK_THROWS_AS(parse_derivation("(id \"p1\") trailing"), ParseError);
  CHECK_THROWS_AS(parse_derivation("; single semicolon\n(id \"p1\")"), ParseError);
  ProofTreePtr ok = parse_derivation(";; comment\n(id \"p1\") ;; more\n");
  CHECK(check(ok, System::B).valid);
}
