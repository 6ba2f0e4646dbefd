// Seeded deterministic generators for formulas, bunches, substitutions, and
// valid derivations, plus the counterexample search for the strong rseq
// invariance claim. Generation is forward: start from an (id) leaf and keep
// applying a randomly chosen rule via a recipe that manufactures whatever
// auxiliary premises the rule needs, so every intermediate tree stays valid.
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "bunched/deriv.hpp"
#include "bunched/subst.hpp"
#include "bunched/syntax.hpp"

namespace bunched {

// splitmix64; chosen over std::mt19937_64 + distributions because the output
// stream (and thus every generated artifact) must be bit-identical across
// platforms and standard library implementations.
struct Rng {
  std::uint64_t state;

  explicit Rng(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  std::uint64_t below(std::uint64_t n) { return n ? next() % n : 0; }

  int range(int lo, int hi) {  // inclusive
    return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }
};

struct GenConfig {
  std::uint64_t seed = 1;
  int max_formula_depth = 3;
  int max_rule_nodes = 8;
  int atom_pool = 4;
  System system = System::B;
};

inline constexpr std::size_t kMaxBunchLeaves = 24;

inline FormulaPtr gen_formula(Rng& rng, int max_depth, int atom_pool) {
  if (max_depth <= 0 || rng.below(5) < 2)
    return mk_atom(static_cast<std::int64_t>(1 + rng.below(static_cast<std::uint64_t>(atom_pool))));
  switch (rng.below(5)) {
    case 0: return mk_neg(gen_formula(rng, max_depth - 1, atom_pool));
    case 1: return mk_and(gen_formula(rng, max_depth - 1, atom_pool),
                          gen_formula(rng, max_depth - 1, atom_pool));
    case 2: return mk_or(gen_formula(rng, max_depth - 1, atom_pool),
                         gen_formula(rng, max_depth - 1, atom_pool));
    case 3: return mk_imp(gen_formula(rng, max_depth - 1, atom_pool),
                          gen_formula(rng, max_depth - 1, atom_pool));
    default: return mk_fusion(gen_formula(rng, max_depth - 1, atom_pool),
                              gen_formula(rng, max_depth - 1, atom_pool));
  }
}

inline BunchPtr gen_bunch(Rng& rng, int max_depth, int atom_pool) {
  if (max_depth <= 0 || rng.below(5) < 2)
    return mk_leaf(gen_formula(rng, max_depth > 0 ? max_depth : 1, atom_pool));
  BunchPtr l = gen_bunch(rng, max_depth - 1, atom_pool);
  BunchPtr r = gen_bunch(rng, max_depth - 1, atom_pool);
  return rng.below(2) ? mk_semi(std::move(l), std::move(r)) : mk_comma(std::move(l), std::move(r));
}

inline Seq gen_seq(Rng& rng, int max_len) {
  Seq s;
  int len = rng.range(0, max_len);
  for (int i = 0; i < len; ++i) s += kSeqLetters[rng.below(5)];
  return s;
}

inline RSeq gen_rseq(Rng& rng, int max_len) { return red(gen_seq(rng, max_len)); }

// ---------------------------------------------------------------------------
// Derivation generation

namespace detail {

// One forward application of rule r on top of trunk t within the node budget.
// Auxiliary premises are manufactured from (id) leaves (plus eK gadgets for
// the context rules), so the result is valid whenever t is. Returns nothing
// when the rule cannot be applied within budget and the leaf cap.
inline std::optional<ProofTreePtr> try_step(RuleName r, const ProofTreePtr& t, Rng& rng,
                                            const GenConfig& cfg, std::size_t budget) {
  const Consecution& c = t->conclusion;
  const BunchPtr& X = c.antecedent;
  const FormulaPtr& A = c.succedent;
  auto fits = [&](std::size_t cost, const BunchPtr& new_ant) {
    return cost <= budget && leaf_count(new_ant) <= kMaxBunchLeaves;
  };
  auto small_formula = [&] { return gen_formula(rng, 1, cfg.atom_pool); };

  // Weakening gadget: from (id) C |- C derive (C , filler) |- C by eK, giving
  // a context premise whose hole holds `filler`.
  auto weakened_id = [&](const FormulaPtr& C, const BunchPtr& filler) {
    Consecution mc{mk_comma(mk_leaf(C), filler), C};
    return mk_rule(RuleName::eK, {mk_id(C)}, std::move(mc), Path{});
  };

  switch (r) {
    case RuleName::Id:
      return std::nullopt;  // only ever a seed, never a step

    case RuleName::ImpI: {
      if (X->kind != BunchKind::Semi || X->right->kind != BunchKind::Leaf) return std::nullopt;
      Consecution nc{X->left, mk_imp(X->right->formula, A)};
      if (!fits(1, nc.antecedent)) return std::nullopt;
      return mk_rule(r, {t}, std::move(nc));
    }

    case RuleName::ImpE: {
      if (A->kind == FormulaKind::Imp && rng.below(2) == 0) {
        // trunk as major premise, fresh id proves the antecedent
        Consecution nc{mk_semi(X, mk_leaf(A->lhs)), A->rhs};
        if (!fits(2, nc.antecedent)) return std::nullopt;
        return mk_rule(r, {t, mk_id(A->lhs)}, std::move(nc));
      }
      FormulaPtr B = small_formula();
      FormulaPtr impf = mk_imp(A, B);
      Consecution nc{mk_semi(mk_leaf(impf), X), B};
      if (!fits(2, nc.antecedent)) return std::nullopt;
      return mk_rule(r, {mk_id(impf), t}, std::move(nc));
    }

    case RuleName::OrI1: {
      Consecution nc{X, mk_or(A, small_formula())};
      if (!fits(1, nc.antecedent)) return std::nullopt;
      return mk_rule(r, {t}, std::move(nc));
    }
    case RuleName::OrI2: {
      Consecution nc{X, mk_or(small_formula(), A)};
      if (!fits(1, nc.antecedent)) return std::nullopt;
      return mk_rule(r, {t}, std::move(nc));
    }

    case RuleName::OrE: {
      ProofTreePtr major = t;
      std::size_t pre = 0;
      if (major->conclusion.succedent->kind != FormulaKind::Or) {
        Consecution oc{X, mk_or(A, small_formula())};
        major = mk_rule(RuleName::OrI1, {t}, std::move(oc));
        pre = 1;
      }
      const FormulaPtr& disj = major->conclusion.succedent;
      FormulaPtr C = small_formula();
      Consecution nc{mk_comma(mk_leaf(C), major->conclusion.antecedent), C};
      if (!fits(pre + 5, nc.antecedent)) return std::nullopt;
      return mk_rule(r,
                     {major, weakened_id(C, mk_leaf(disj->lhs)), weakened_id(C, mk_leaf(disj->rhs))},
                     std::move(nc), Path{1});
    }

    case RuleName::AndI: {
      FormulaPtr B = small_formula();
      Consecution nc{mk_comma(X, mk_leaf(B)), mk_and(A, B)};
      if (!fits(2, nc.antecedent)) return std::nullopt;
      return mk_rule(r, {t, mk_id(B)}, std::move(nc));
    }
    case RuleName::FusI: {
      FormulaPtr B = small_formula();
      Consecution nc{mk_semi(X, mk_leaf(B)), mk_fusion(A, B)};
      if (!fits(2, nc.antecedent)) return std::nullopt;
      return mk_rule(r, {t, mk_id(B)}, std::move(nc));
    }

    case RuleName::AndE:
    case RuleName::FusE: {
      bool fus = r == RuleName::FusE;
      ProofTreePtr major = t;
      std::size_t pre = 0;
      FormulaKind want = fus ? FormulaKind::Fusion : FormulaKind::And;
      if (major->conclusion.succedent->kind != want) {
        FormulaPtr B = small_formula();
        Consecution jc{fus ? mk_semi(X, mk_leaf(B)) : mk_comma(X, mk_leaf(B)),
                       fus ? mk_fusion(A, B) : mk_and(A, B)};
        if (leaf_count(jc.antecedent) > kMaxBunchLeaves) return std::nullopt;
        major = mk_rule(fus ? RuleName::FusI : RuleName::AndI, {t, mk_id(B)}, std::move(jc));
        pre = 2;
      }
      const FormulaPtr& conj = major->conclusion.succedent;
      BunchPtr pat = fus ? mk_semi(mk_leaf(conj->lhs), mk_leaf(conj->rhs))
                         : mk_comma(mk_leaf(conj->lhs), mk_leaf(conj->rhs));
      FormulaPtr C = small_formula();
      Consecution nc{mk_comma(mk_leaf(C), major->conclusion.antecedent), C};
      if (!fits(pre + 3, nc.antecedent)) return std::nullopt;
      return mk_rule(r, {major, weakened_id(C, pat)}, std::move(nc), Path{1});
    }

    case RuleName::NegI: {
      Consecution nc{X, mk_neg(mk_neg(A))};
      if (!fits(2, nc.antecedent)) return std::nullopt;
      return mk_rule(r, {t, mk_id(mk_neg(A))}, std::move(nc));
    }

    case RuleName::NegE: {
      if (A->kind == FormulaKind::Neg && A->lhs->kind == FormulaKind::Neg) {
        if (!fits(1, X)) return std::nullopt;
        return mk_rule(r, {t}, Consecution{X, A->lhs->lhs});
      }
      // introduce ~~A first, then eliminate it
      if (!fits(3, X)) return std::nullopt;
      ProofTreePtr dn = mk_rule(RuleName::NegI, {t, mk_id(mk_neg(A))},
                                Consecution{X, mk_neg(mk_neg(A))});
      return mk_rule(r, {dn}, Consecution{X, A});
    }

    case RuleName::Cut: {
      FormulaPtr C = small_formula();
      Consecution nc{mk_comma(mk_leaf(C), X), C};
      if (!fits(3, nc.antecedent)) return std::nullopt;
      return mk_rule(r, {t, weakened_id(C, mk_leaf(A))}, std::move(nc), Path{1});
    }

    case RuleName::eB: {
      std::vector<Path> cands;
      for (const Path& pi : subbunch_paths(X)) {
        BunchPtr sub = subterm_at(X, pi);
        if (sub->kind == BunchKind::Comma && sub->right->kind == BunchKind::Comma)
          cands.push_back(pi);
      }
      if (!cands.empty()) {
        const Path& pi = cands[rng.below(cands.size())];
        BunchPtr sub = subterm_at(X, pi);
        BunchPtr reassoc = mk_comma(mk_comma(sub->left, sub->right->left), sub->right->right);
        Consecution nc{replace_at(X, pi, reassoc), A};
        if (!fits(1, nc.antecedent)) return std::nullopt;
        return mk_rule(r, {t}, std::move(nc), pi);
      }
      // weaken the root by a two-leaf comma to create the pattern
      BunchPtr w = mk_comma(mk_leaf(small_formula()), mk_leaf(small_formula()));
      Consecution kc{mk_comma(X, w), A};
      if (!fits(2, kc.antecedent)) return std::nullopt;
      ProofTreePtr k = mk_rule(RuleName::eK, {t}, kc, Path{});
      Consecution nc{mk_comma(mk_comma(X, w->left), w->right), A};
      return mk_rule(r, {k}, std::move(nc), Path{});
    }

    case RuleName::eC: {
      std::vector<Path> cands;
      for (const Path& pi : subbunch_paths(X))
        if (subterm_at(X, pi)->kind == BunchKind::Comma) cands.push_back(pi);
      if (!cands.empty()) {
        const Path& pi = cands[rng.below(cands.size())];
        BunchPtr sub = subterm_at(X, pi);
        Consecution nc{replace_at(X, pi, mk_comma(sub->right, sub->left)), A};
        if (!fits(1, nc.antecedent)) return std::nullopt;
        return mk_rule(r, {t}, std::move(nc), pi);
      }
      BunchPtr w = mk_leaf(small_formula());
      Consecution kc{mk_comma(X, w), A};
      if (!fits(2, kc.antecedent)) return std::nullopt;
      ProofTreePtr k = mk_rule(RuleName::eK, {t}, kc, Path{});
      Consecution nc{mk_comma(w, X), A};
      return mk_rule(r, {k}, std::move(nc), Path{});
    }

    case RuleName::eW: {
      // duplicate the whole antecedent by weakening, then contract it back
      Consecution kc{mk_comma(X, X), A};
      if (!fits(2, kc.antecedent)) return std::nullopt;
      ProofTreePtr k = mk_rule(RuleName::eK, {t}, kc, Path{});
      return mk_rule(r, {k}, Consecution{X, A}, Path{});
    }

    case RuleName::eK: {
      std::vector<Path> all = subbunch_paths(X);
      const Path& pi = all[rng.below(all.size())];
      BunchPtr sub = subterm_at(X, pi);
      BunchPtr w = gen_bunch(rng, 1, cfg.atom_pool);
      Consecution nc{replace_at(X, pi, mk_comma(sub, w)), A};
      if (!fits(1, nc.antecedent)) return std::nullopt;
      return mk_rule(r, {t}, std::move(nc), pi);
    }

    case RuleName::NegI2: {
      FormulaPtr at = mk_atom(static_cast<std::int64_t>(
          1 + rng.below(static_cast<std::uint64_t>(cfg.atom_pool))));
      FormulaPtr impf = mk_imp(at, mk_neg(A));
      Consecution gc{mk_semi(mk_leaf(impf), mk_leaf(at)), mk_neg(A)};
      ProofTreePtr g = mk_rule(RuleName::ImpE, {mk_id(impf), mk_id(at)}, std::move(gc));
      Consecution nc{mk_semi(mk_leaf(impf), X), mk_neg(at)};
      if (!fits(4, nc.antecedent)) return std::nullopt;
      return mk_rule(r, {g, t}, std::move(nc));
    }

    case RuleName::sB: {
      std::vector<Path> cands;
      for (const Path& pi : subbunch_paths(X)) {
        BunchPtr sub = subterm_at(X, pi);
        if (sub->kind == BunchKind::Semi && sub->right->kind == BunchKind::Semi)
          cands.push_back(pi);
      }
      if (!cands.empty()) {
        const Path& pi = cands[rng.below(cands.size())];
        BunchPtr sub = subterm_at(X, pi);
        BunchPtr reassoc = mk_semi(mk_semi(sub->left, sub->right->left), sub->right->right);
        Consecution nc{replace_at(X, pi, reassoc), A};
        if (!fits(1, nc.antecedent)) return std::nullopt;
        return mk_rule(r, {t}, std::move(nc), pi);
      }
      // build B2 ; (B1 ; X) by fusing two fresh ids on the left, then reassociate
      FormulaPtr b1 = small_formula(), b2 = small_formula();
      Consecution f1c{mk_semi(mk_leaf(b1), X), mk_fusion(b1, A)};
      ProofTreePtr f1 = mk_rule(RuleName::FusI, {mk_id(b1), t}, f1c);
      Consecution f2c{mk_semi(mk_leaf(b2), f1c.antecedent), mk_fusion(b2, f1c.succedent)};
      if (!fits(5, f2c.antecedent)) return std::nullopt;
      ProofTreePtr f2 = mk_rule(RuleName::FusI, {mk_id(b2), f1}, f2c);
      Consecution nc{mk_semi(mk_semi(mk_leaf(b2), mk_leaf(b1)), X), f2c.succedent};
      return mk_rule(r, {f2}, std::move(nc), Path{});
    }

    case RuleName::sC: {
      std::vector<Path> cands;
      for (const Path& pi : subbunch_paths(X))
        if (subterm_at(X, pi)->kind == BunchKind::Semi) cands.push_back(pi);
      if (!cands.empty()) {
        const Path& pi = cands[rng.below(cands.size())];
        BunchPtr sub = subterm_at(X, pi);
        Consecution nc{replace_at(X, pi, mk_semi(sub->right, sub->left)), A};
        if (!fits(1, nc.antecedent)) return std::nullopt;
        return mk_rule(r, {t}, std::move(nc), pi);
      }
      FormulaPtr b = small_formula();
      Consecution fc{mk_semi(X, mk_leaf(b)), mk_fusion(A, b)};
      if (!fits(3, fc.antecedent)) return std::nullopt;
      ProofTreePtr f = mk_rule(RuleName::FusI, {t, mk_id(b)}, fc);
      Consecution nc{mk_semi(mk_leaf(b), X), fc.succedent};
      return mk_rule(r, {f}, std::move(nc), Path{});
    }

    case RuleName::sW: {
      for (const Path& pi : subbunch_paths(X)) {
        BunchPtr sub = subterm_at(X, pi);
        if (sub->kind == BunchKind::Semi && equal(sub->left, sub->right)) {
          Consecution nc{replace_at(X, pi, sub->left), A};
          if (!fits(1, nc.antecedent)) return std::nullopt;
          return mk_rule(r, {t}, std::move(nc), pi);
        }
      }
      // fuse the trunk with itself (X ; X |- A * A), then contract
      std::size_t cost = count_rule_nodes(t) + 2;
      Consecution fc{mk_semi(X, X), mk_fusion(A, A)};
      if (!fits(cost, fc.antecedent)) return std::nullopt;
      ProofTreePtr f = mk_rule(RuleName::FusI, {t, t}, fc);
      return mk_rule(r, {f}, Consecution{X, fc.succedent}, Path{});
    }
  }
  return std::nullopt;
}

inline std::vector<RuleName> step_rules(System sys) {
  std::vector<RuleName> out = {RuleName::ImpI, RuleName::ImpE, RuleName::OrI1, RuleName::OrI2,
                               RuleName::OrE,  RuleName::AndI, RuleName::AndE, RuleName::FusI,
                               RuleName::FusE, RuleName::NegI, RuleName::NegE, RuleName::Cut,
                               RuleName::eB,   RuleName::eC,   RuleName::eW,   RuleName::eK};
  if (sys == System::R) {
    out.push_back(RuleName::NegI2);
    out.push_back(RuleName::sB);
    out.push_back(RuleName::sC);
    out.push_back(RuleName::sW);
  }
  return out;
}

}  // namespace detail

inline ProofTreePtr gen_derivation(const GenConfig& cfg) {
  Rng rng(cfg.seed);
  ProofTreePtr t = mk_id(gen_formula(rng, cfg.max_formula_depth, cfg.atom_pool));
  std::vector<RuleName> pool = detail::step_rules(cfg.system);
  auto total = static_cast<std::size_t>(cfg.max_rule_nodes);
  while (count_rule_nodes(t) < total) {
    std::size_t budget = total - count_rule_nodes(t);
    ProofTreePtr next;
    for (int attempt = 0; attempt < 24 && !next; ++attempt) {
      RuleName r = pool[rng.below(pool.size())];
      if (auto stepped = detail::try_step(r, t, rng, cfg, budget)) next = *stepped;
    }
    if (!next) {
      // OrI1 always applies and costs exactly one node
      Consecution nc{t->conclusion.antecedent,
                     mk_or(t->conclusion.succedent, gen_formula(rng, 1, cfg.atom_pool))};
      next = mk_rule(RuleName::OrI1, {t}, std::move(nc));
    }
    t = next;
  }
  return t;
}

// ---------------------------------------------------------------------------
// Substitution generation
//
// Tables are seeded from the annotations actually occurring in a companion
// consecution (so transforms visibly rewrite it), plus a couple of off-tree
// keys to exercise identity-default lookups.

inline DepthSubstitution gen_depth_substitution(Rng& rng, const Consecution& companion,
                                                const GenConfig& cfg) {
  DepthSubstitution d;
  auto harvest = [&](const DepthAnnotation& ann) {
    for (const DepthEntry& e : ann.entries) {
      if (!std::holds_alternative<FormulaPtr>(e.node)) continue;
      const FormulaPtr& f = std::get<FormulaPtr>(e.node);
      if (f->kind != FormulaKind::Atom || rng.below(2)) continue;
      d.set(e.depth, f->atom, gen_formula(rng, 2, cfg.atom_pool));
    }
  };
  harvest(depth_annotations(companion.antecedent));
  harvest(depth_annotations(companion.succedent));
  for (int i = 0; i < 2; ++i)
    d.set(rng.range(-3, 3),
          Atom{static_cast<std::int64_t>(1 + rng.below(static_cast<std::uint64_t>(cfg.atom_pool)))},
          gen_formula(rng, 2, cfg.atom_pool));
  return d;
}

inline RseqSubstitution gen_rseq_substitution(Rng& rng, const Consecution& companion,
                                              const GenConfig& cfg) {
  std::map<RseqSubstitution::Key, FormulaPtr> table;
  auto harvest = [&](const RseqAnnotation& ann) {
    for (const RseqEntry& e : ann.entries) {
      if (!std::holds_alternative<FormulaPtr>(e.node)) continue;
      const FormulaPtr& f = std::get<FormulaPtr>(e.node);
      if (f->kind != FormulaKind::Atom || rng.below(2)) continue;
      table[{e.seq, f->atom.index}] = gen_formula(rng, 2, cfg.atom_pool);
    }
  };
  harvest(rseq_annotations(companion.antecedent));
  harvest(rseq_annotations(companion.succedent));
  for (int i = 0; i < 2; ++i) {
    RSeq key = gen_rseq(rng, 3);
    std::int64_t atom =
        static_cast<std::int64_t>(1 + rng.below(static_cast<std::uint64_t>(cfg.atom_pool)));
    table[{key, atom}] = gen_formula(rng, 2, cfg.atom_pool);
  }
  return RseqSubstitution::from_table(std::move(table));
}

// ---------------------------------------------------------------------------
// Counterexample search

struct StrongCounterexample {
  ProofTreePtr tree;          // valid in B
  RseqSubstitution subst;
  RSeq x;                     // nonempty
  ProofTreePtr image;         // fails check in B
};

// The known witness: the modus-ponens tree for (p1 -> p1) ; p1 |- p1 with a
// substitution that differs between the sequences lP and Pl, transformed at
// x = "l". The conclusion's subformula occurrences then sit at Pl while the
// premise action (shift by L on the right) sends the id leaf's occurrences to
// lP, so the transformed ImpE node no longer matches.
inline std::optional<StrongCounterexample> find_strong_rseq_counterexample(int budget) {
  auto verified = [](ProofTreePtr t, RseqSubstitution s, RSeq x) -> std::optional<StrongCounterexample> {
    if (x.empty() || !check(t, System::B).valid) return std::nullopt;
    ProofTreePtr image = apply_rseq_to_tree(s, x, t);
    if (check(image, System::B).valid) return std::nullopt;
    return StrongCounterexample{std::move(t), std::move(s), std::move(x), std::move(image)};
  };

  int probes = 0;
  if (probes++ < budget) {
    FormulaPtr p1 = mk_atom(1);
    FormulaPtr impf = mk_imp(p1, p1);
    ProofTreePtr t = mk_rule(RuleName::ImpE, {mk_id(impf), mk_id(p1)},
                             Consecution{mk_semi(mk_leaf(impf), mk_leaf(p1)), p1});
    std::map<RseqSubstitution::Key, FormulaPtr> table;
    table[{"lP", 1}] = mk_atom(2);
    if (auto hit = verified(t, RseqSubstitution::from_table(std::move(table)), "l")) return hit;
  }
  // Fallback probing, deterministic; the witness above is expected to hit.
  Rng rng(0xB0E57EADull);
  GenConfig cfg;
  while (probes++ < budget) {
    cfg.seed = rng.next();
    cfg.max_rule_nodes = 4;
    ProofTreePtr t = gen_derivation(cfg);
    Rng srng(rng.next());
    RseqSubstitution s = gen_rseq_substitution(srng, t->conclusion, cfg);
    RSeq x = gen_rseq(srng, 2);
    if (x.empty()) x = "l";
    if (auto hit = verified(t, s, x)) return hit;
  }
  return std::nullopt;
}

}  // namespace bunched
