#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "bunched/harness.hpp"

using namespace bunched;

namespace {

void collect_rules(const ProofTreePtr& t, std::set<RuleName>& out) {
  if (t->rule) out.insert(*t->rule);
  for (const ProofTreePtr& p : t->premises) collect_rules(p, out);
}

bool uses_r_only_rule(const ProofTreePtr& t) {
  std::set<RuleName> rs;
  collect_rules(t, rs);
  return rs.count(RuleName::NegI2) || rs.count(RuleName::sB) || rs.count(RuleName::sC) ||
         rs.count(RuleName::sW);
}

std::int64_t max_atom(const Consecution& c) {
  std::int64_t m = 0;
  for (Atom a : vars(c.antecedent)) m = std::max(m, a.index);
  for (Atom a : vars(c.succedent)) m = std::max(m, a.index);
  return m;
}

}  // namespace

TEST_CASE("splitmix stream is pinned") {
  Rng rng(0);
  CHECK(rng.next() == 0xE220A8397B1DCDAFull);
  CHECK(rng.next() == 0x6E789E6AA1B965F4ull);
  CHECK(rng.next() == 0x06C45D188009454Full);

  Rng a(42), b(42);
  for (int i = 0; i < 100; ++i) CHECK(a.next() == b.next());

  CHECK(Rng(7).below(0) == 0);
  Rng r(3);
  std::set<int> seen;
  for (int i = 0; i < 1000; ++i) {
    int v = r.range(-3, 3);
    REQUIRE(v >= -3);
    REQUIRE(v <= 3);
    seen.insert(v);
  }
  CHECK(seen.size() == 7);
}

TEST_CASE("generated sequences come out reduced") {
  Rng rng(11);
  for (int i = 0; i < 500; ++i) {
    RSeq s = gen_rseq(rng, 6);
    CHECK(red(s) == s);
  }
}

TEST_CASE("generation is deterministic") {
  for (std::uint64_t seed : {1ull, 57ull, 90210ull}) {
    GenConfig cfg;
    cfg.seed = seed;
    cfg.system = System::R;
    CHECK(serialize_derivation(gen_derivation(cfg)) == serialize_derivation(gen_derivation(cfg)));
  }
}

TEST_CASE("single step budget yields a bare axiom") {
  GenConfig cfg;
  cfg.seed = 5;
  cfg.max_rule_nodes = 1;
  ProofTreePtr t = gen_derivation(cfg);
  CHECK(count_rule_nodes(t) == 1);
  CHECK(t->rule == RuleName::Id);
}

TEST_CASE("generated trees check out in their system") {
  for (System sys : {System::B, System::R}) {
    GenConfig cfg;
    cfg.system = sys;
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
      cfg.seed = seed;
      ProofTreePtr t = gen_derivation(cfg);
      CAPTURE(seed, sys == System::B ? "B" : "R");
      CHECK(check(t, sys).valid);
      CHECK(count_rule_nodes(t) <= static_cast<std::size_t>(cfg.max_rule_nodes));
      CHECK(leaf_count(t->conclusion.antecedent) <= kMaxBunchLeaves);
      CHECK(max_atom(t->conclusion) <= cfg.atom_pool);
      if (sys == System::B) CHECK_FALSE(uses_r_only_rule(t));
    }
  }
}

TEST_CASE("the sampler reaches every rule") {
  std::set<RuleName> hit_b, hit_r;
  GenConfig cfg;
  for (std::uint64_t seed = 1; seed <= 1000; ++seed) {
    cfg.seed = seed;
    cfg.system = System::B;
    collect_rules(gen_derivation(cfg), hit_b);
    cfg.system = System::R;
    collect_rules(gen_derivation(cfg), hit_r);
  }
  CheckOptions dflt;
  for (RuleName r : kAllRules) {
    CAPTURE(rule_spelling(r));
    if (rule_in_system(r, System::B, dflt)) CHECK(hit_b.count(r) == 1);
    CHECK(hit_r.count(r) == 1);
  }
}

TEST_CASE("generated substitutions act deterministically") {
  GenConfig cfg;
  cfg.seed = 77;
  ProofTreePtr t = gen_derivation(cfg);
  Rng r1(9), r2(9);
  DepthSubstitution d1 = gen_depth_substitution(r1, t->conclusion, cfg);
  DepthSubstitution d2 = gen_depth_substitution(r2, t->conclusion, cfg);
  CHECK(render(apply_depth(d1, 0, t->conclusion)) == render(apply_depth(d2, 0, t->conclusion)));
  RseqSubstitution s1 = gen_rseq_substitution(r1, t->conclusion, cfg);
  RseqSubstitution s2 = gen_rseq_substitution(r2, t->conclusion, cfg);
  CHECK(render(apply_rseq(s1, "", t->conclusion)) == render(apply_rseq(s2, "", t->conclusion)));
}

TEST_CASE("counterexample search honors its budget") {
  CHECK_FALSE(find_strong_rseq_counterexample(0).has_value());
  auto hit = find_strong_rseq_counterexample(5);
  REQUIRE(hit.has_value());
  CHECK_FALSE(hit->x.empty());
  CHECK(check(hit->tree, System::B).valid);
  CHECK_FALSE(check(hit->image, System::B).valid);
  CHECK(equal(hit->image->conclusion, apply_rseq(hit->subst, hit->x, hit->tree->conclusion)));
}
