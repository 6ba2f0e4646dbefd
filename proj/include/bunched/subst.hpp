// Two substitution algebras over annotated occurrences:
//   - depth substitutions: finite maps (depth, atom) -> formula, identity
//     outside the table, with integer shifts d_x(n, p) = d(n + x, p);
//   - rseq substitutions: maps (reduced sequence, atom) -> formula with lazy
//     shift wrappers s_{w->y} that rewrite terminal w into y in the lookup
//     sequence when the division red(z + w) = x has a (necessarily unique)
//     solution z, and fall through to the base otherwise.
// Both extend to formulas and bunches by the annotation rules (see
// annotate.hpp); extension never changes tree structure, only atoms.
#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "bunched/annotate.hpp"
#include "bunched/seqred.hpp"
#include "bunched/syntax.hpp"

namespace bunched {

// ---------------------------------------------------------------------------
// Depth substitutions

struct DepthSubstitution {
  using Key = std::pair<int, std::int64_t>;  // (depth, atom index)
  std::map<Key, FormulaPtr> table;
  int shift = 0;

  void set(int depth, Atom a, FormulaPtr f) { table[{depth, a.index}] = std::move(f); }

  FormulaPtr lookup(int n, Atom a) const {
    auto it = table.find({n + shift, a.index});
    if (it != table.end()) return it->second;
    return mk_atom(a);
  }
};

inline DepthSubstitution shift_depth(const DepthSubstitution& d, int x) {
  DepthSubstitution out = d;
  out.shift += x;
  return out;
}

inline FormulaPtr apply_depth(const DepthSubstitution& d, int n, const FormulaPtr& f) {
  switch (f->kind) {
    case FormulaKind::Atom:
      return d.lookup(n, f->atom);
    case FormulaKind::Neg:
      return mk_neg(apply_depth(d, n, f->lhs));
    case FormulaKind::And:
      return mk_and(apply_depth(d, n, f->lhs), apply_depth(d, n, f->rhs));
    case FormulaKind::Or:
      return mk_or(apply_depth(d, n, f->lhs), apply_depth(d, n, f->rhs));
    case FormulaKind::Imp:
      return mk_imp(apply_depth(d, n + 1, f->lhs), apply_depth(d, n + 1, f->rhs));
    case FormulaKind::Fusion:
      return mk_fusion(apply_depth(d, n - 1, f->lhs), apply_depth(d, n, f->rhs));
  }
  return nullptr;  // unreachable
}

inline BunchPtr apply_depth(const DepthSubstitution& d, int n, const BunchPtr& b) {
  switch (b->kind) {
    case BunchKind::Leaf:
      return mk_leaf(apply_depth(d, n, b->formula));
    case BunchKind::Comma:
      return mk_comma(apply_depth(d, n, b->left), apply_depth(d, n, b->right));
    case BunchKind::Semi:
      return mk_semi(apply_depth(d, n - 1, b->left), apply_depth(d, n, b->right));
  }
  return nullptr;  // unreachable
}

inline Consecution apply_depth(const DepthSubstitution& d, int n, const Consecution& c) {
  return Consecution{apply_depth(d, n, c.antecedent), apply_depth(d, n, c.succedent)};
}

// ---------------------------------------------------------------------------
// rseq substitutions

class RseqSubstitution {
 public:
  using Key = std::pair<RSeq, std::int64_t>;  // (reduced sequence, atom index)

  RseqSubstitution() : impl_(std::make_shared<Impl>()) {}

  static RseqSubstitution from_table(std::map<Key, FormulaPtr> table) {
    RseqSubstitution s;
    auto impl = std::make_shared<Impl>();
    impl->table = std::move(table);
    s.impl_ = std::move(impl);
    return s;
  }

  // The shifted substitution s_{w->y}. Lookup at x becomes a lookup of the
  // base at red(z + y) when red(z + w) = x is solvable for reduced z, and a
  // plain base lookup at x otherwise.
  RseqSubstitution shifted(const RSeq& source, const RSeq& target) const {
    if (!is_reduced(source) || !is_reduced(target))
      throw std::invalid_argument("shift_rseq: source and target must be reduced");
    auto impl = std::make_shared<Impl>();
    impl->base = impl_;
    impl->source = source;
    impl->target = target;
    return RseqSubstitution(std::move(impl));
  }

  FormulaPtr lookup(const RSeq& x, Atom p) const {
    const Impl* cur = impl_.get();
    RSeq at = x;
    while (cur->base) {
      if (auto z = cancel_suffix(at, cur->source)) at = red_concat(*z, cur->target);
      cur = cur->base.get();
    }
    auto it = cur->table.find({at, p.index});
    if (it != cur->table.end()) return it->second;
    return mk_atom(p);
  }

 private:
  struct Impl {
    std::map<Key, FormulaPtr> table;   // used when base is null
    std::shared_ptr<const Impl> base;  // wrapper layer otherwise
    RSeq source, target;
  };

  explicit RseqSubstitution(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

  std::shared_ptr<const Impl> impl_;
};

inline RseqSubstitution shift_rseq(const RseqSubstitution& s, const RSeq& source,
                                   const RSeq& target) {
  return s.shifted(source, target);
}

// A composite shift is a finite list of single-letter-or-empty pairs, folded
// into nested single shifts from left to right.
struct ShiftPair {
  RSeq source;  // empty or one letter
  RSeq target;  // empty or one letter
};
using ShiftSpec = std::vector<ShiftPair>;

inline RseqSubstitution shift_rseq_composite(const RseqSubstitution& s, const ShiftSpec& spec) {
  RseqSubstitution out = s;
  for (const ShiftPair& p : spec) {
    if (p.source.size() > 1 || p.target.size() > 1)
      throw std::invalid_argument("shift spec pairs must be single letters or empty");
    out = out.shifted(p.source, p.target);
  }
  return out;
}

inline FormulaPtr apply_rseq(const RseqSubstitution& s, const RSeq& x, const FormulaPtr& f) {
  switch (f->kind) {
    case FormulaKind::Atom:
      return s.lookup(x, f->atom);
    case FormulaKind::Neg:
      return mk_neg(apply_rseq(s, red_concat("n", x), f->lhs));
    case FormulaKind::And:
      return mk_and(apply_rseq(s, x, f->lhs), apply_rseq(s, x, f->rhs));
    case FormulaKind::Or:
      return mk_or(apply_rseq(s, x, f->lhs), apply_rseq(s, x, f->rhs));
    case FormulaKind::Imp:
      return mk_imp(apply_rseq(s, red_concat("l", x), f->lhs),
                    apply_rseq(s, red_concat("r", x), f->rhs));
    case FormulaKind::Fusion:
      return mk_fusion(apply_rseq(s, red_concat("L", x), f->lhs),
                       apply_rseq(s, red_concat("P", x), f->rhs));
  }
  return nullptr;  // unreachable
}

inline BunchPtr apply_rseq(const RseqSubstitution& s, const RSeq& x, const BunchPtr& b) {
  switch (b->kind) {
    case BunchKind::Leaf:
      return mk_leaf(apply_rseq(s, x, b->formula));
    case BunchKind::Comma:
      return mk_comma(apply_rseq(s, x, b->left), apply_rseq(s, x, b->right));
    case BunchKind::Semi:
      return mk_semi(apply_rseq(s, red_concat("L", x), b->left),
                     apply_rseq(s, red_concat("P", x), b->right));
  }
  return nullptr;  // unreachable
}

inline Consecution apply_rseq(const RseqSubstitution& s, const RSeq& x, const Consecution& c) {
  return Consecution{apply_rseq(s, x, c.antecedent), apply_rseq(s, x, c.succedent)};
}

// ---------------------------------------------------------------------------
// Fresh injective substitutions
//
// Maps every (annotation, atom) pair occurring in the inputs to a distinct
// fresh atom, allocated by continuing the p-index sequence past the largest
// index present. Applying the result separates occurrences with distinct
// annotations and never captures an existing variable.

inline std::int64_t max_atom_index(const std::vector<NodeRef>& inputs) {
  std::int64_t mx = 0;
  for (const NodeRef& n : inputs) {
    std::set<Atom> vs = std::holds_alternative<BunchPtr>(n) ? vars(std::get<BunchPtr>(n))
                                                            : vars(std::get<FormulaPtr>(n));
    if (!vs.empty()) mx = std::max(mx, vs.rbegin()->index);
  }
  return mx;
}

inline DepthSubstitution fresh_injective_depth(const std::vector<NodeRef>& inputs) {
  std::set<std::pair<std::int64_t, int>> keys;  // (atom index, depth)
  for (const NodeRef& n : inputs) {
    DepthAnnotation ann = std::holds_alternative<BunchPtr>(n)
                              ? depth_annotations(std::get<BunchPtr>(n))
                              : depth_annotations(std::get<FormulaPtr>(n));
    for (const DepthEntry& e : ann.entries)
      if (std::holds_alternative<FormulaPtr>(e.node)) {
        const FormulaPtr& f = std::get<FormulaPtr>(e.node);
        if (f->kind == FormulaKind::Atom) keys.insert({f->atom.index, e.depth});
      }
  }
  DepthSubstitution d;
  std::int64_t next = max_atom_index(inputs) + 1;
  for (const auto& [idx, depth] : keys) d.set(depth, Atom{idx}, mk_atom(next++));
  return d;
}

inline RseqSubstitution fresh_injective_rseq(const std::vector<NodeRef>& inputs) {
  std::set<std::pair<std::int64_t, RSeq>> keys;  // (atom index, seq)
  for (const NodeRef& n : inputs) {
    RseqAnnotation ann = std::holds_alternative<BunchPtr>(n)
                             ? rseq_annotations(std::get<BunchPtr>(n))
                             : rseq_annotations(std::get<FormulaPtr>(n));
    for (const RseqEntry& e : ann.entries)
      if (std::holds_alternative<FormulaPtr>(e.node)) {
        const FormulaPtr& f = std::get<FormulaPtr>(e.node);
        if (f->kind == FormulaKind::Atom) keys.insert({f->atom.index, e.seq});
      }
  }
  std::map<RseqSubstitution::Key, FormulaPtr> table;
  std::int64_t next = max_atom_index(inputs) + 1;
  for (const auto& [idx, seq] : keys) table[{seq, idx}] = mk_atom(next++);
  return RseqSubstitution::from_table(std::move(table));
}

// ---------------------------------------------------------------------------
// Substitution files
//
// One binding per line; blank lines ignored.
//   depth mode:  <integer> <atom> := <formula>
//   rseq mode:   <seq-literal> <atom> := <formula>     ("e" = empty sequence)
// Unlisted pairs default to identity.

namespace detail {

struct BindingLine {
  std::string key;      // first field, mode-specific
  Atom atom;
  FormulaPtr formula;
};

inline std::vector<BindingLine> parse_binding_lines(const std::string& text) {
  std::vector<BindingLine> out;
  std::size_t line_start = 0, line_no = 0;
  while (line_start <= text.size()) {
    std::size_t line_end = text.find('\n', line_start);
    if (line_end == std::string::npos) line_end = text.size();
    std::string line = text.substr(line_start, line_end - line_start);
    ++line_no;
    std::size_t a = line.find_first_not_of(" \t\r");
    if (a != std::string::npos && line[a] != '#') {
      auto fail = [&](const std::string& msg) {
        throw ParseError(line_start, "line " + std::to_string(line_no) + ": " + msg);
      };
      std::size_t b = line.find_first_of(" \t", a);
      if (b == std::string::npos) fail("expected '<key> <atom> := <formula>'");
      std::string key = line.substr(a, b - a);
      std::size_t c = line.find_first_not_of(" \t", b);
      if (c == std::string::npos) fail("missing atom");
      std::size_t d = line.find_first_of(" \t", c);
      if (d == std::string::npos) fail("missing ':='");
      FormulaPtr atom_f = parse_formula(line.substr(c, d - c));
      if (atom_f->kind != FormulaKind::Atom) fail("binding key must be an atom");
      std::size_t e = line.find(":=", d);
      if (e == std::string::npos) fail("missing ':='");
      FormulaPtr f = parse_formula(line.substr(e + 2));
      out.push_back({std::move(key), atom_f->atom, std::move(f)});
    }
    if (line_end == text.size()) break;
    line_start = line_end + 1;
  }
  return out;
}

}  // namespace detail

inline DepthSubstitution parse_depth_substitution(const std::string& text) {
  DepthSubstitution d;
  for (const auto& bl : detail::parse_binding_lines(text)) {
    std::size_t used = 0;
    int depth = 0;
    try {
      depth = std::stoi(bl.key, &used);
    } catch (const std::exception&) {
      throw ParseError(0, "depth binding key must be an integer, got '" + bl.key + "'");
    }
    if (used != bl.key.size())
      throw ParseError(0, "depth binding key must be an integer, got '" + bl.key + "'");
    d.set(depth, bl.atom, bl.formula);
  }
  return d;
}

inline RseqSubstitution parse_rseq_substitution(const std::string& text) {
  std::map<RseqSubstitution::Key, FormulaPtr> table;
  for (const auto& bl : detail::parse_binding_lines(text)) {
    Seq s = parse_seq(bl.key);
    if (!is_reduced(s))
      throw ParseError(0, "rseq binding key '" + bl.key + "' is not reduced");
    table[{s, bl.atom.index}] = bl.formula;
  }
  return RseqSubstitution::from_table(std::move(table));
}

}  // namespace bunched
