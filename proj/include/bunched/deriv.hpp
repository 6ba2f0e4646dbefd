// Proof trees over consecutions, the rule checkers for systems B and R,
// derived-rule extraction, the depth and rseq substitution actions on trees,
// and the S-expression file format for derivations.
//
// System B: id, ImpI, ImpE, OrI1, OrI2, OrE, AndI, AndE, FusI, FusE, NegI,
// NegE, Cut, and the extensional structural rules eB (associativity), eC
// (commutativity), eW (contraction), eK (weakening). System R adds NegI2 and
// the intensional structural rules sB, sC, sW; by default it keeps NegI as
// well (CheckOptions::retain_neg_i turns it off for the strict variant).
#pragma once

#include <algorithm>
#include <functional>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "bunched/annotate.hpp"
#include "bunched/subst.hpp"
#include "bunched/syntax.hpp"

namespace bunched {

// ---------------------------------------------------------------------------
// Rules

enum class RuleName {
  Id, ImpI, ImpE, OrI1, OrI2, OrE, AndI, AndE, FusI, FusE, NegI, NegE, Cut,
  eB, eC, eW, eK,          // extensional structural rules
  NegI2, sB, sC, sW        // R additions
};

inline constexpr RuleName kAllRules[] = {
    RuleName::Id,   RuleName::ImpI, RuleName::ImpE, RuleName::OrI1, RuleName::OrI2,
    RuleName::OrE,  RuleName::AndI, RuleName::AndE, RuleName::FusI, RuleName::FusE,
    RuleName::NegI, RuleName::NegE, RuleName::Cut,  RuleName::eB,   RuleName::eC,
    RuleName::eW,   RuleName::eK,   RuleName::NegI2, RuleName::sB,  RuleName::sC,
    RuleName::sW};

inline const char* rule_spelling(RuleName r) {
  switch (r) {
    case RuleName::Id: return "id";
    case RuleName::ImpI: return "impI";
    case RuleName::ImpE: return "impE";
    case RuleName::OrI1: return "orI1";
    case RuleName::OrI2: return "orI2";
    case RuleName::OrE: return "orE";
    case RuleName::AndI: return "andI";
    case RuleName::AndE: return "andE";
    case RuleName::FusI: return "fusI";
    case RuleName::FusE: return "fusE";
    case RuleName::NegI: return "negI";
    case RuleName::NegE: return "negE";
    case RuleName::Cut: return "cut";
    case RuleName::eB: return "eB";
    case RuleName::eC: return "eC";
    case RuleName::eW: return "eW";
    case RuleName::eK: return "eK";
    case RuleName::NegI2: return "negI2";
    case RuleName::sB: return "sB";
    case RuleName::sC: return "sC";
    case RuleName::sW: return "sW";
  }
  return "?";
}

inline std::optional<RuleName> rule_from_spelling(std::string_view s) {
  for (RuleName r : kAllRules)
    if (s == rule_spelling(r)) return r;
  return std::nullopt;
}

// Total number of consecutions in the rule schema (premises + conclusion).
inline int rule_arity(RuleName r) {
  switch (r) {
    case RuleName::Id:
      return 1;
    case RuleName::ImpI:
    case RuleName::OrI1:
    case RuleName::OrI2:
    case RuleName::NegE:
    case RuleName::eB:
    case RuleName::eC:
    case RuleName::eW:
    case RuleName::eK:
    case RuleName::sB:
    case RuleName::sC:
    case RuleName::sW:
      return 2;
    case RuleName::OrE:
      return 4;
    default:
      return 3;  // ImpE, AndI, FusI, NegI, AndE, FusE, Cut, NegI2
  }
}

inline std::size_t premise_count(RuleName r) {
  return static_cast<std::size_t>(rule_arity(r) - 1);
}

inline bool is_structural(RuleName r) {
  switch (r) {
    case RuleName::eB:
    case RuleName::eC:
    case RuleName::eW:
    case RuleName::eK:
    case RuleName::sB:
    case RuleName::sC:
    case RuleName::sW:
      return true;
    default:
      return false;
  }
}

inline bool is_context_rule(RuleName r) {
  return r == RuleName::OrE || r == RuleName::AndE || r == RuleName::FusE || r == RuleName::Cut;
}

enum class System { B, R };

struct CheckOptions {
  // Accept structural rules read in the reverse direction as well (premise
  // holds the right pattern, conclusion the left one).
  bool structural_bidirectional = false;
  // Keep NegI available in system R alongside NegI2. The strict variant
  // (false) replaces NegI outright.
  bool retain_neg_i = true;
};

inline bool rule_in_system(RuleName r, System sys, const CheckOptions& opts) {
  switch (r) {
    case RuleName::NegI2:
    case RuleName::sB:
    case RuleName::sC:
    case RuleName::sW:
      return sys == System::R;
    case RuleName::NegI:
      return sys == System::B || opts.retain_neg_i;
    default:
      return true;
  }
}

// ---------------------------------------------------------------------------
// Trees

struct ProofTree;
using ProofTreePtr = std::shared_ptr<const ProofTree>;

// One consecution node together with the rule node (if any) justifying it.
// A node without a rule is an open leaf. An id node has a rule and no
// premises; its conclusion must read A |- A.
struct ProofTree {
  std::optional<RuleName> rule;
  std::vector<ProofTreePtr> premises;
  Consecution conclusion;
  std::optional<Path> hole;  // context/structural rules: position in the conclusion antecedent
};

inline ProofTreePtr mk_open(Consecution c) {
  return std::make_shared<const ProofTree>(ProofTree{std::nullopt, {}, std::move(c), std::nullopt});
}

inline ProofTreePtr mk_id(const FormulaPtr& a) {
  return std::make_shared<const ProofTree>(
      ProofTree{RuleName::Id, {}, Consecution{mk_leaf(a), a}, std::nullopt});
}

inline ProofTreePtr mk_rule(RuleName r, std::vector<ProofTreePtr> premises, Consecution conclusion,
                            std::optional<Path> hole = std::nullopt) {
  return std::make_shared<const ProofTree>(
      ProofTree{r, std::move(premises), std::move(conclusion), std::move(hole)});
}

// Number of rule nodes, counting shared subtrees once per premise edge (i.e.
// the size of the tree as written to a file).
inline std::size_t count_rule_nodes(const ProofTreePtr& t) {
  std::size_t n = t->rule ? 1 : 0;
  for (const ProofTreePtr& p : t->premises) n += count_rule_nodes(p);
  return n;
}

inline void collect_open_leaves(const ProofTreePtr& t, std::vector<Consecution>& out) {
  if (!t->rule) {
    out.push_back(t->conclusion);
    return;
  }
  for (const ProofTreePtr& p : t->premises) collect_open_leaves(p, out);
}

inline std::vector<Consecution> open_leaves(const ProofTreePtr& t) {
  std::vector<Consecution> out;
  collect_open_leaves(t, out);
  return out;
}

// ---------------------------------------------------------------------------
// Rule-instance matching

namespace detail {

inline bool succedents_equal(const Consecution& a, const Consecution& b) {
  return equal(a.succedent, b.succedent);
}

// Does the context rule r match with the hole at position pi? The context
// premise (index 0) supplies the filler X; the remaining premises must show
// the rule's pattern at the same position.
inline bool context_matches_at(RuleName r, const Consecution& concl,
                               const std::vector<Consecution>& prem, const Path& pi) {
  BunchPtr filler;
  try {
    filler = subterm_at(concl.antecedent, pi);
  } catch (const InvalidPath&) {
    return false;
  }
  if (!equal(filler, prem[0].antecedent)) return false;
  switch (r) {
    case RuleName::OrE: {
      const FormulaPtr& s = prem[0].succedent;
      if (s->kind != FormulaKind::Or) return false;
      if (!equal(prem[1].succedent, concl.succedent)) return false;
      if (!equal(prem[2].succedent, concl.succedent)) return false;
      return equal(replace_at(concl.antecedent, pi, mk_leaf(s->lhs)), prem[1].antecedent) &&
             equal(replace_at(concl.antecedent, pi, mk_leaf(s->rhs)), prem[2].antecedent);
    }
    case RuleName::AndE: {
      const FormulaPtr& s = prem[0].succedent;
      if (s->kind != FormulaKind::And) return false;
      if (!equal(prem[1].succedent, concl.succedent)) return false;
      BunchPtr pat = mk_comma(mk_leaf(s->lhs), mk_leaf(s->rhs));
      return equal(replace_at(concl.antecedent, pi, pat), prem[1].antecedent);
    }
    case RuleName::FusE: {
      const FormulaPtr& s = prem[0].succedent;
      if (s->kind != FormulaKind::Fusion) return false;
      if (!equal(prem[1].succedent, concl.succedent)) return false;
      BunchPtr pat = mk_semi(mk_leaf(s->lhs), mk_leaf(s->rhs));
      return equal(replace_at(concl.antecedent, pi, pat), prem[1].antecedent);
    }
    case RuleName::Cut: {
      if (!equal(prem[1].succedent, concl.succedent)) return false;
      return equal(replace_at(concl.antecedent, pi, mk_leaf(prem[0].succedent)),
                   prem[1].antecedent);
    }
    default:
      return false;
  }
}

// First position that makes the context rule match: the annotated hole when
// it works, otherwise the leftmost-outermost matching subbunch position.
inline std::optional<Path> resolve_context_hole(RuleName r, const Consecution& concl,
                                                const std::vector<Consecution>& prem,
                                                const std::optional<Path>& annotated) {
  if (annotated && context_matches_at(r, concl, prem, *annotated)) return annotated;
  for (const Path& pi : subbunch_paths(concl.antecedent))
    if (context_matches_at(r, concl, prem, pi)) return pi;
  return std::nullopt;
}

// Structural rewrite of `from` into `to`: at some position, `from` holds the
// rule's right pattern and rewriting it to the left pattern yields `to`.
// (Premise = to, conclusion = from, under the premise-left / conclusion-right
// reading.)
inline bool structural_matches_at(RuleName r, const BunchPtr& from, const BunchPtr& to,
                                  const Path& pi) {
  BunchPtr at;
  try {
    at = subterm_at(from, pi);
  } catch (const InvalidPath&) {
    return false;
  }
  BunchKind k = (r == RuleName::sB || r == RuleName::sC || r == RuleName::sW)
                    ? BunchKind::Semi
                    : BunchKind::Comma;
  auto join = [&](BunchPtr l, BunchPtr rr) {
    return k == BunchKind::Semi ? mk_semi(std::move(l), std::move(rr))
                                : mk_comma(std::move(l), std::move(rr));
  };
  BunchPtr rewritten;
  switch (r) {
    case RuleName::eB:
    case RuleName::sB:
      // left pattern X,(Y,Z) -- right pattern (X,Y),Z
      if (at->kind != k || at->left->kind != k) return false;
      rewritten = join(at->left->left, join(at->left->right, at->right));
      break;
    case RuleName::eC:
    case RuleName::sC:
      // left pattern X,Y -- right pattern Y,X
      if (at->kind != k) return false;
      rewritten = join(at->right, at->left);
      break;
    case RuleName::eW:
    case RuleName::sW:
      // left pattern X,X -- right pattern X
      rewritten = join(at, at);
      break;
    case RuleName::eK:
      // left pattern X -- right pattern X,Y (weakening; R has no sK)
      if (at->kind != BunchKind::Comma) return false;
      rewritten = at->left;
      break;
    default:
      return false;
  }
  return equal(replace_at(from, pi, rewritten), to);
}

inline bool structural_matches(RuleName r, const Consecution& concl, const Consecution& prem,
                               const std::optional<Path>& annotated, const CheckOptions& opts) {
  if (!equal(prem.succedent, concl.succedent)) return false;
  auto scan = [&](const BunchPtr& from, const BunchPtr& to) {
    if (annotated && structural_matches_at(r, from, to, *annotated)) return true;
    for (const Path& pi : subbunch_paths(from))
      if (structural_matches_at(r, from, to, pi)) return true;
    return false;
  };
  if (scan(concl.antecedent, prem.antecedent)) return true;
  if (opts.structural_bidirectional && scan(prem.antecedent, concl.antecedent)) return true;
  return false;
}

// Non-context, non-structural rule schemas. Returns true iff premises +
// conclusion instantiate r.
inline bool plain_rule_matches(RuleName r, const Consecution& concl,
                               const std::vector<Consecution>& prem) {
  switch (r) {
    case RuleName::Id:
      return concl.antecedent->kind == BunchKind::Leaf &&
             equal(concl.antecedent->formula, concl.succedent);
    case RuleName::ImpI: {
      if (concl.succedent->kind != FormulaKind::Imp) return false;
      const BunchPtr& pa = prem[0].antecedent;
      if (pa->kind != BunchKind::Semi || pa->right->kind != BunchKind::Leaf) return false;
      return equal(pa->left, concl.antecedent) &&
             equal(pa->right->formula, concl.succedent->lhs) &&
             equal(prem[0].succedent, concl.succedent->rhs);
    }
    case RuleName::ImpE: {
      const FormulaPtr& imp = prem[0].succedent;
      if (imp->kind != FormulaKind::Imp) return false;
      if (concl.antecedent->kind != BunchKind::Semi) return false;
      return equal(concl.antecedent->left, prem[0].antecedent) &&
             equal(concl.antecedent->right, prem[1].antecedent) &&
             equal(prem[1].succedent, imp->lhs) && equal(concl.succedent, imp->rhs);
    }
    case RuleName::OrI1:
      return concl.succedent->kind == FormulaKind::Or &&
             equal(concl.antecedent, prem[0].antecedent) &&
             equal(prem[0].succedent, concl.succedent->lhs);
    case RuleName::OrI2:
      return concl.succedent->kind == FormulaKind::Or &&
             equal(concl.antecedent, prem[0].antecedent) &&
             equal(prem[0].succedent, concl.succedent->rhs);
    case RuleName::AndI:
      return concl.succedent->kind == FormulaKind::And &&
             concl.antecedent->kind == BunchKind::Comma &&
             equal(concl.antecedent->left, prem[0].antecedent) &&
             equal(concl.antecedent->right, prem[1].antecedent) &&
             equal(prem[0].succedent, concl.succedent->lhs) &&
             equal(prem[1].succedent, concl.succedent->rhs);
    case RuleName::FusI:
      return concl.succedent->kind == FormulaKind::Fusion &&
             concl.antecedent->kind == BunchKind::Semi &&
             equal(concl.antecedent->left, prem[0].antecedent) &&
             equal(concl.antecedent->right, prem[1].antecedent) &&
             equal(prem[0].succedent, concl.succedent->lhs) &&
             equal(prem[1].succedent, concl.succedent->rhs);
    case RuleName::NegI: {
      // premises: X |- B and A |- ~B; conclusion X |- ~A
      if (concl.succedent->kind != FormulaKind::Neg) return false;
      if (!equal(concl.antecedent, prem[0].antecedent)) return false;
      if (prem[1].antecedent->kind != BunchKind::Leaf) return false;
      if (!equal(prem[1].antecedent->formula, concl.succedent->lhs)) return false;
      return prem[1].succedent->kind == FormulaKind::Neg &&
             equal(prem[1].succedent->lhs, prem[0].succedent);
    }
    case RuleName::NegI2: {
      // premises: X;A |- ~B and Y |- B; conclusion X;Y |- ~A
      if (concl.succedent->kind != FormulaKind::Neg) return false;
      if (concl.antecedent->kind != BunchKind::Semi) return false;
      const BunchPtr& pa = prem[0].antecedent;
      if (pa->kind != BunchKind::Semi || pa->right->kind != BunchKind::Leaf) return false;
      if (!equal(pa->left, concl.antecedent->left)) return false;
      if (!equal(pa->right->formula, concl.succedent->lhs)) return false;
      if (prem[0].succedent->kind != FormulaKind::Neg) return false;
      return equal(prem[0].succedent->lhs, prem[1].succedent) &&
             equal(concl.antecedent->right, prem[1].antecedent);
    }
    case RuleName::NegE: {
      const FormulaPtr& s = prem[0].succedent;
      return s->kind == FormulaKind::Neg && s->lhs->kind == FormulaKind::Neg &&
             equal(s->lhs->lhs, concl.succedent) &&
             equal(prem[0].antecedent, concl.antecedent);
    }
    default:
      return false;
  }
}

}  // namespace detail

// ---------------------------------------------------------------------------
// check

struct CheckFailure {
  Path tree_path;  // premise indices from the root
  std::string reason;
};

struct CheckReport {
  bool valid = false;
  std::vector<CheckFailure> failures;
  std::vector<Consecution> open_leaves;
};

inline CheckReport check(const ProofTreePtr& t, System sys, const CheckOptions& opts = {}) {
  CheckReport rep;
  bool any_rule = false;

  std::function<void(const ProofTreePtr&, Path&)> visit = [&](const ProofTreePtr& node,
                                                              Path& path) {
    for (std::size_t i = 0; i < node->premises.size(); ++i) {
      path.push_back(static_cast<int>(i));
      visit(node->premises[i], path);
      path.pop_back();
    }
    if (!node->rule) {
      rep.open_leaves.push_back(node->conclusion);
      if (!node->premises.empty())
        rep.failures.push_back({path, "malformed: open leaf has premises"});
      return;
    }
    any_rule = true;
    RuleName r = *node->rule;
    std::string spell = rule_spelling(r);
    if (!rule_in_system(r, sys, opts)) {
      rep.failures.push_back(
          {path, spell + ": not a rule of system " + (sys == System::B ? "B" : "R")});
      return;
    }
    if (node->premises.size() != premise_count(r)) {
      rep.failures.push_back({path, "malformed: " + spell + " expects " +
                                        std::to_string(premise_count(r)) + " premises, found " +
                                        std::to_string(node->premises.size()) +
                                        " (arity violation)"});
      return;
    }
    std::vector<Consecution> prem;
    prem.reserve(node->premises.size());
    for (const ProofTreePtr& p : node->premises) prem.push_back(p->conclusion);

    bool ok;
    if (is_context_rule(r)) {
      ok = detail::resolve_context_hole(r, node->conclusion, prem, node->hole).has_value();
    } else if (is_structural(r)) {
      ok = detail::structural_matches(r, node->conclusion, prem[0], node->hole, opts);
    } else {
      ok = detail::plain_rule_matches(r, node->conclusion, prem);
    }
    if (!ok)
      rep.failures.push_back({path, spell + ": premises and conclusion do not instantiate the rule"});
  };

  Path path;
  visit(t, path);
  if (!any_rule) rep.failures.push_back({{}, "no rule node"});
  rep.valid = rep.failures.empty() && any_rule;
  return rep;
}

// ---------------------------------------------------------------------------
// Derived rules

struct DerivedRule {
  std::vector<Consecution> premises;  // distinct open leaves, first-occurrence order
  Consecution conclusion;
};

inline DerivedRule extract_derived_rule(const ProofTreePtr& t, System sys,
                                        const CheckOptions& opts = {}) {
  if (!check(t, sys, opts).valid) throw std::invalid_argument("extract_derived_rule: invalid tree");
  DerivedRule out{{}, t->conclusion};
  for (const Consecution& c : open_leaves(t)) {
    bool dup = false;
    for (const Consecution& seen : out.premises)
      if (equal(seen, c)) {
        dup = true;
        break;
      }
    if (!dup) out.premises.push_back(c);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Substitution actions

struct HoleResolutionError : std::runtime_error {
  explicit HoleResolutionError(const std::string& msg) : std::runtime_error(msg) {}
};

namespace detail {

inline Path
required_context_hole(RuleName r, const ProofTree& node) {
  std::vector<Consecution> prem;
  prem.reserve(node.premises.size());
  for (const ProofTreePtr& p : node.premises) prem.push_back(p->conclusion);
  auto pi = resolve_context_hole(r, node.conclusion, prem, node.hole);
  if (!pi)
    throw HoleResolutionError(std::string("unresolvable hole for ") + rule_spelling(r) +
                              " at conclusion " + render(node.conclusion));
  return *pi;
}

}  // namespace detail

// Depth action: relabels every consecution with the depth the chart assigns
// its subtree, descending with shifted lookups. Context-supplying premises of
// OrE/AndE/FusE/Cut transform at n + c where c is the hole's depth.
inline ProofTreePtr apply_depth_to_tree(const DepthSubstitution& d, int n, const ProofTreePtr& t) {
  Consecution newc = apply_depth(d, n, t->conclusion);
  if (!t->rule) return mk_open(std::move(newc));
  RuleName r = *t->rule;
  if (t->premises.size() != premise_count(r))
    throw std::invalid_argument("apply_depth_to_tree: malformed tree (arity violation)");

  std::vector<int> at(t->premises.size(), n);
  switch (r) {
    case RuleName::ImpI:
      at[0] = n + 1;
      break;
    case RuleName::ImpE:
    case RuleName::FusI:
      at[0] = n - 1;
      break;
    case RuleName::OrE:
    case RuleName::AndE:
    case RuleName::FusE:
    case RuleName::Cut: {
      Path pi = detail::required_context_hole(r, *t);
      at[0] = n + hole_info(t->conclusion.antecedent, pi).depth;
      break;
    }
    default:
      break;  // id, OrI1/2, AndI, NegI, NegE, NegI2, structural: all premises at n
  }
  std::vector<ProofTreePtr> prem;
  prem.reserve(t->premises.size());
  for (std::size_t i = 0; i < t->premises.size(); ++i)
    prem.push_back(apply_depth_to_tree(d, at[i], t->premises[i]));
  return mk_rule(r, std::move(prem), std::move(newc), t->hole);
}

// rseq action: every conclusion transforms under the node's substitution at
// the fixed superscript x; each premise subtree recurses with a wrapped
// substitution chosen by its rule position:
//   ImpI premise:               s_{L -> e}
//   ImpE/FusI left premise:     s_{e -> L};   right premise: s_{e -> P}
//   OrE/AndE/FusE/Cut context premise: s_{e -> seq(hole)}
//   NegI premise A |- ~B:       s_{n -> e}
//   all other premises:         s unchanged
inline ProofTreePtr apply_rseq_to_tree(const RseqSubstitution& s, const RSeq& x,
                                       const ProofTreePtr& t) {
  Consecution newc = apply_rseq(s, x, t->conclusion);
  if (!t->rule) return mk_open(std::move(newc));
  RuleName r = *t->rule;
  if (t->premises.size() != premise_count(r))
    throw std::invalid_argument("apply_rseq_to_tree: malformed tree (arity violation)");

  std::vector<RseqSubstitution> subs(t->premises.size(), s);
  switch (r) {
    case RuleName::ImpI:
      subs[0] = s.shifted("L", "");
      break;
    case RuleName::ImpE:
    case RuleName::FusI:
      subs[0] = s.shifted("", "L");
      subs[1] = s.shifted("", "P");
      break;
    case RuleName::NegI:
      subs[1] = s.shifted("n", "");
      break;
    case RuleName::OrE:
    case RuleName::AndE:
    case RuleName::FusE:
    case RuleName::Cut: {
      Path pi = detail::required_context_hole(r, *t);
      subs[0] = s.shifted("", hole_info(t->conclusion.antecedent, pi).seq);
      break;
    }
    default:
      break;
  }
  std::vector<ProofTreePtr> prem;
  prem.reserve(t->premises.size());
  for (std::size_t i = 0; i < t->premises.size(); ++i)
    prem.push_back(apply_rseq_to_tree(subs[i], x, t->premises[i]));
  return mk_rule(r, std::move(prem), std::move(newc), t->hole);
}

// ---------------------------------------------------------------------------
// Derivation files
//
// S-expressions, UTF-8, ;; comments to end of line:
//   tree := (id "<formula>")
//         | (open "<consecution>")
//         | (rule <RULE> <tree>+ (concl "<consecution>") [(hole "<path>")])

namespace detail {

enum class STok { LParen, RParen, Symbol, String, End };

struct SToken {
  STok kind;
  std::size_t pos;
  std::string text;
};

inline std::vector<SToken> slex(std::string_view text) {
  std::vector<SToken> out;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') { ++i; continue; }
    if (c == ';') {
      if (i + 1 < text.size() && text[i + 1] == ';') {
        while (i < text.size() && text[i] != '\n') ++i;
        continue;
      }
      throw ParseError(i, "stray ';' (comments start with ';;')");
    }
    if (c == '(') { out.push_back({STok::LParen, i, "("}); ++i; continue; }
    if (c == ')') { out.push_back({STok::RParen, i, ")"}); ++i; continue; }
    if (c == '"') {
      std::size_t j = i + 1;
      while (j < text.size() && text[j] != '"') ++j;
      if (j == text.size()) throw ParseError(i, "unterminated string");
      out.push_back({STok::String, i, std::string(text.substr(i + 1, j - i - 1))});
      i = j + 1;
      continue;
    }
    std::size_t j = i;
    while (j < text.size() && text[j] != ' ' && text[j] != '\t' && text[j] != '\n' &&
           text[j] != '\r' && text[j] != '(' && text[j] != ')' && text[j] != '"')
      ++j;
    out.push_back({STok::Symbol, i, std::string(text.substr(i, j - i))});
    i = j;
  }
  out.push_back({STok::End, text.size(), ""});
  return out;
}

struct SParser {
  std::vector<SToken> toks;
  std::size_t i = 0;

  const SToken& peek(std::size_t ahead = 0) const {
    return toks[std::min(i + ahead, toks.size() - 1)];
  }
  SToken take() { return toks[i++]; }

  void expect(STok k, const char* what) {
    if (peek().kind != k) throw ParseError(peek().pos, std::string("expected ") + what);
    take();
  }

  std::string take_string(const char* what) {
    if (peek().kind != STok::String)
      throw ParseError(peek().pos, std::string("expected quoted ") + what);
    return take().text;
  }

  ProofTreePtr parse_tree() {
    expect(STok::LParen, "'('");
    if (peek().kind != STok::Symbol)
      throw ParseError(peek().pos, "expected 'id', 'open' or 'rule'");
    SToken head = take();
    if (head.text == "id") {
      FormulaPtr f = parse_formula(take_string("formula"));
      expect(STok::RParen, "')'");
      return mk_id(f);
    }
    if (head.text == "open") {
      Consecution c = parse_consecution(take_string("consecution"));
      expect(STok::RParen, "')'");
      return mk_open(std::move(c));
    }
    if (head.text != "rule")
      throw ParseError(head.pos, "expected 'id', 'open' or 'rule', got '" + head.text + "'");
    if (peek().kind != STok::Symbol) throw ParseError(peek().pos, "expected rule name");
    SToken name = take();
    auto r = rule_from_spelling(name.text);
    if (!r) throw ParseError(name.pos, "unknown rule '" + name.text + "'");

    std::vector<ProofTreePtr> premises;
    std::optional<Consecution> concl;
    std::optional<Path> hole;
    while (peek().kind == STok::LParen) {
      if (peek(1).kind == STok::Symbol && peek(1).text == "concl") {
        take();
        take();
        concl = parse_consecution(take_string("consecution"));
        expect(STok::RParen, "')'");
        continue;
      }
      if (peek(1).kind == STok::Symbol && peek(1).text == "hole") {
        take();
        take();
        hole = parse_path(take_string("path"));
        expect(STok::RParen, "')'");
        continue;
      }
      if (concl)
        throw ParseError(peek().pos, "premise trees must precede (concl ...)");
      premises.push_back(parse_tree());
    }
    expect(STok::RParen, "')'");
    if (!concl) throw ParseError(name.pos, "rule node missing (concl ...)");
    return mk_rule(*r, std::move(premises), std::move(*concl), std::move(hole));
  }
};

inline void serialize_to(const ProofTreePtr& t, std::string& out, int indent) {
  std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  if (!t->rule) {
    out += pad + "(open \"" + render(t->conclusion) + "\")";
    return;
  }
  if (*t->rule == RuleName::Id) {
    out += pad + "(id \"" + render(t->conclusion.succedent) + "\")";
    return;
  }
  out += pad + "(rule " + rule_spelling(*t->rule) + "\n";
  for (const ProofTreePtr& p : t->premises) {
    serialize_to(p, out, indent + 1);
    out += "\n";
  }
  out += pad + "  (concl \"" + render(t->conclusion) + "\")";
  if (t->hole) out += "\n" + pad + "  (hole \"" + render_path(*t->hole) + "\")";
  out += ")";
}

}  // namespace detail

inline ProofTreePtr parse_derivation(std::string_view text) {
  detail::SParser p{detail::slex(text)};
  ProofTreePtr t = p.parse_tree();
  if (p.peek().kind != detail::STok::End)
    throw ParseError(p.peek().pos, "unexpected trailing input");
  return t;
}

inline std::string serialize_derivation(const ProofTreePtr& t) {
  std::string out;
  detail::serialize_to(t, out, 0);
  out += "\n";
  return out;
}

}  // namespace bunched
