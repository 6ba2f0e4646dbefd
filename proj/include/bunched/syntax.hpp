// Object language: indexed atoms, formulas over ~ & | -> *, bunches built with
// the structural operators , and ;, consecutions X |- A, and paths into trees.
// All values are immutable shared trees; every operation here is pure.
#pragma once

#include <cstdint>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace bunched {

// ---------------------------------------------------------------------------
// Errors

// Syntax error in user-supplied text; carries the byte offset it was found at.
struct ParseError : std::runtime_error {
  std::size_t position;
  ParseError(std::size_t pos, const std::string& msg)
      : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"),
        position(pos) {}
};

// A path that does not address a node of the tree it was applied to.
struct InvalidPath : std::logic_error {
  explicit InvalidPath(const std::string& msg) : std::logic_error(msg) {}
};

// ---------------------------------------------------------------------------
// Atoms

struct Atom {
  std::int64_t index = 0;  // always >= 1 for a constructed atom

  friend bool operator==(const Atom& a, const Atom& b) { return a.index == b.index; }
  friend bool operator!=(const Atom& a, const Atom& b) { return a.index != b.index; }
  friend bool operator<(const Atom& a, const Atom& b) { return a.index < b.index; }
};

// ---------------------------------------------------------------------------
// Formulas

enum class FormulaKind { Atom, Neg, And, Or, Imp, Fusion };

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

struct Formula {
  FormulaKind kind;
  Atom atom;        // FormulaKind::Atom only
  FormulaPtr lhs;   // Neg operand, or left operand of a binary connective
  FormulaPtr rhs;   // right operand of a binary connective
};

inline FormulaPtr mk_atom(Atom a) {
  if (a.index < 1) throw std::invalid_argument("atom index must be >= 1");
  return std::make_shared<const Formula>(Formula{FormulaKind::Atom, a, nullptr, nullptr});
}
inline FormulaPtr mk_atom(std::int64_t index) { return mk_atom(Atom{index}); }
inline FormulaPtr mk_neg(FormulaPtr a) {
  return std::make_shared<const Formula>(Formula{FormulaKind::Neg, Atom{}, std::move(a), nullptr});
}
inline FormulaPtr mk_and(FormulaPtr a, FormulaPtr b) {
  return std::make_shared<const Formula>(Formula{FormulaKind::And, Atom{}, std::move(a), std::move(b)});
}
inline FormulaPtr mk_or(FormulaPtr a, FormulaPtr b) {
  return std::make_shared<const Formula>(Formula{FormulaKind::Or, Atom{}, std::move(a), std::move(b)});
}
inline FormulaPtr mk_imp(FormulaPtr a, FormulaPtr b) {
  return std::make_shared<const Formula>(Formula{FormulaKind::Imp, Atom{}, std::move(a), std::move(b)});
}
inline FormulaPtr mk_fusion(FormulaPtr a, FormulaPtr b) {
  return std::make_shared<const Formula>(Formula{FormulaKind::Fusion, Atom{}, std::move(a), std::move(b)});
}

inline bool equal(const FormulaPtr& a, const FormulaPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case FormulaKind::Atom: return a->atom == b->atom;
    case FormulaKind::Neg: return equal(a->lhs, b->lhs);
    default: return equal(a->lhs, b->lhs) && equal(a->rhs, b->rhs);
  }
}

// ---------------------------------------------------------------------------
// Bunches

enum class BunchKind { Leaf, Comma, Semi };

struct Bunch;
using BunchPtr = std::shared_ptr<const Bunch>;

struct Bunch {
  BunchKind kind;
  FormulaPtr formula;  // BunchKind::Leaf only
  BunchPtr left;
  BunchPtr right;
};

inline BunchPtr mk_leaf(FormulaPtr f) {
  return std::make_shared<const Bunch>(Bunch{BunchKind::Leaf, std::move(f), nullptr, nullptr});
}
inline BunchPtr mk_comma(BunchPtr l, BunchPtr r) {
  return std::make_shared<const Bunch>(Bunch{BunchKind::Comma, nullptr, std::move(l), std::move(r)});
}
inline BunchPtr mk_semi(BunchPtr l, BunchPtr r) {
  return std::make_shared<const Bunch>(Bunch{BunchKind::Semi, nullptr, std::move(l), std::move(r)});
}

inline bool equal(const BunchPtr& a, const BunchPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->kind != b->kind) return false;
  if (a->kind == BunchKind::Leaf) return equal(a->formula, b->formula);
  return equal(a->left, b->left) && equal(a->right, b->right);
}

// ---------------------------------------------------------------------------
// Consecutions

struct Consecution {
  BunchPtr antecedent;
  FormulaPtr succedent;
};

inline bool equal(const Consecution& a, const Consecution& b) {
  return equal(a.antecedent, b.antecedent) && equal(a.succedent, b.succedent);
}

// ---------------------------------------------------------------------------
// Paths
//
// A path is a sequence of child indices (0 or 1; unary nodes use 0). Paths in
// this module address subbunches only: Comma/Semi have children 0 and 1, and a
// Leaf is terminal (descending into one is an invalid path). Rendered form is
// dot-separated indices, with "e" for the empty (root) path.

using Path = std::vector<int>;

inline std::string render_path(const Path& p) {
  if (p.empty()) return "e";
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += '.';
    out += std::to_string(p[i]);
  }
  return out;
}

inline Path parse_path(std::string_view text) {
  if (text.empty() || text == "e") return {};
  Path out;
  std::size_t i = 0;
  while (true) {
    if (i >= text.size() || (text[i] != '0' && text[i] != '1'))
      throw ParseError(i, "path step must be 0 or 1");
    out.push_back(text[i] - '0');
    ++i;
    if (i == text.size()) break;
    if (text[i] != '.') throw ParseError(i, "expected '.' between path steps");
    ++i;
  }
  return out;
}

inline BunchPtr subterm_at(const BunchPtr& b, const Path& path) {
  BunchPtr cur = b;
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (cur->kind == BunchKind::Leaf)
      throw InvalidPath("path descends into a leaf at step " + std::to_string(i));
    if (path[i] != 0 && path[i] != 1)
      throw InvalidPath("path step out of range at step " + std::to_string(i));
    cur = path[i] == 0 ? cur->left : cur->right;
  }
  return cur;
}

inline BunchPtr replace_at(const BunchPtr& b, const Path& path, const BunchPtr& sub,
                           std::size_t from = 0) {
  if (from == path.size()) return sub;
  if (b->kind == BunchKind::Leaf)
    throw InvalidPath("path descends into a leaf at step " + std::to_string(from));
  if (path[from] != 0 && path[from] != 1)
    throw InvalidPath("path step out of range at step " + std::to_string(from));
  if (path[from] == 0)
    return std::make_shared<const Bunch>(
        Bunch{b->kind, nullptr, replace_at(b->left, path, sub, from + 1), b->right});
  return std::make_shared<const Bunch>(
      Bunch{b->kind, nullptr, b->left, replace_at(b->right, path, sub, from + 1)});
}

// All subbunch positions of b, in preorder (root first, left before right).
inline void collect_subbunch_paths(const BunchPtr& b, Path& prefix, std::vector<Path>& out) {
  out.push_back(prefix);
  if (b->kind == BunchKind::Leaf) return;
  prefix.push_back(0);
  collect_subbunch_paths(b->left, prefix, out);
  prefix.back() = 1;
  collect_subbunch_paths(b->right, prefix, out);
  prefix.pop_back();
}

inline std::vector<Path> subbunch_paths(const BunchPtr& b) {
  std::vector<Path> out;
  Path prefix;
  collect_subbunch_paths(b, prefix, out);
  return out;
}

inline std::size_t leaf_count(const BunchPtr& b) {
  if (b->kind == BunchKind::Leaf) return 1;
  return leaf_count(b->left) + leaf_count(b->right);
}

// ---------------------------------------------------------------------------
// Variables

inline void collect_vars(const FormulaPtr& f, std::set<Atom>& out) {
  switch (f->kind) {
    case FormulaKind::Atom: out.insert(f->atom); return;
    case FormulaKind::Neg: collect_vars(f->lhs, out); return;
    default:
      collect_vars(f->lhs, out);
      collect_vars(f->rhs, out);
  }
}

inline void collect_vars(const BunchPtr& b, std::set<Atom>& out) {
  if (b->kind == BunchKind::Leaf) {
    collect_vars(b->formula, out);
    return;
  }
  collect_vars(b->left, out);
  collect_vars(b->right, out);
}

inline std::set<Atom> vars(const FormulaPtr& f) {
  std::set<Atom> out;
  collect_vars(f, out);
  return out;
}

inline std::set<Atom> vars(const BunchPtr& b) {
  std::set<Atom> out;
  collect_vars(b, out);
  return out;
}

// ---------------------------------------------------------------------------
// Rendering
//
// Canonical text: every binary connective and bunch operator is parenthesized
// except the outermost one; ~ binds tighter than any binary operator and takes
// no parentheses of its own. Atoms render as p<index>.

inline std::string render_atom(Atom a) { return "p" + std::to_string(a.index); }

inline void render_formula_to(std::string& out, const FormulaPtr& f, bool nested) {
  switch (f->kind) {
    case FormulaKind::Atom:
      out += render_atom(f->atom);
      return;
    case FormulaKind::Neg:
      out += '~';
      render_formula_to(out, f->lhs, true);
      return;
    default: {
      const char* op = f->kind == FormulaKind::And   ? " & "
                       : f->kind == FormulaKind::Or  ? " | "
                       : f->kind == FormulaKind::Imp ? " -> "
                                                     : " * ";
      if (nested) out += '(';
      render_formula_to(out, f->lhs, true);
      out += op;
      render_formula_to(out, f->rhs, true);
      if (nested) out += ')';
    }
  }
}

inline void render_bunch_to(std::string& out, const BunchPtr& b, bool nested) {
  if (b->kind == BunchKind::Leaf) {
    render_formula_to(out, b->formula, nested);
    return;
  }
  if (nested) out += '(';
  render_bunch_to(out, b->left, true);
  out += b->kind == BunchKind::Comma ? " , " : " ; ";
  render_bunch_to(out, b->right, true);
  if (nested) out += ')';
}

inline std::string render(const FormulaPtr& f) {
  std::string out;
  render_formula_to(out, f, false);
  return out;
}

inline std::string render(const BunchPtr& b) {
  std::string out;
  render_bunch_to(out, b, false);
  return out;
}

inline std::string render(const Consecution& c) {
  std::string out;
  render_bunch_to(out, c.antecedent, false);
  out += " |- ";
  render_formula_to(out, c.succedent, false);
  return out;
}

// ---------------------------------------------------------------------------
// Parsing

namespace detail {

enum class Tok { Atom, Neg, And, Or, Imp, Fusion, Comma, Semi, Turnstile, LParen, RParen, End };

struct Token {
  Tok kind;
  std::size_t pos;
  Atom atom;  // Tok::Atom only
};

// Atom spellings: "p" followed by digits names the atom with that index
// directly; any other identifier is interned by bijective base-62 over
// [a-z A-Z 0-9] (a=1 .. z=26, A=27 .. Z=52, 0=53 .. 9=62), so e.g. "q"
// denotes the same atom as "p17". Canonical rendering always uses p<index>.
inline std::int64_t intern_identifier(std::string_view s, std::size_t pos) {
  bool p_digits = s.size() >= 2 && s[0] == 'p';
  for (std::size_t i = 1; p_digits && i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') p_digits = false;
  if (p_digits) {
    if (s[1] == '0' && s.size() == 2)
      throw ParseError(pos, "atom index must be >= 1");
    std::int64_t v = 0;
    for (std::size_t i = 1; i < s.size(); ++i) {
      int d = s[i] - '0';
      if (v > (INT64_MAX - d) / 10) throw ParseError(pos, "atom index too large");
      v = v * 10 + d;
    }
    if (v < 1) throw ParseError(pos, "atom index must be >= 1");
    return v;
  }
  std::int64_t v = 0;
  for (char c : s) {
    int d;
    if (c >= 'a' && c <= 'z') d = c - 'a' + 1;
    else if (c >= 'A' && c <= 'Z') d = c - 'A' + 27;
    else d = c - '0' + 53;
    if (v > (INT64_MAX - d) / 62) throw ParseError(pos, "atom identifier too long to intern");
    v = v * 62 + d;
  }
  return v;
}

inline std::vector<Token> lex(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto is_ident_start = [](char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); };
  auto is_ident_char = [&](char c) { return is_ident_start(c) || (c >= '0' && c <= '9'); };
  while (i < text.size()) {
    char c = text[i];
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') { ++i; continue; }
    std::size_t start = i;
    if (is_ident_start(c)) {
      std::size_t j = i;
      while (j < text.size() && is_ident_char(text[j])) ++j;
      Atom a{intern_identifier(text.substr(i, j - i), start)};
      out.push_back({Tok::Atom, start, a});
      i = j;
      continue;
    }
    switch (c) {
      case '~': out.push_back({Tok::Neg, start, {}}); ++i; break;
      case '&': out.push_back({Tok::And, start, {}}); ++i; break;
      case '*': out.push_back({Tok::Fusion, start, {}}); ++i; break;
      case ',': out.push_back({Tok::Comma, start, {}}); ++i; break;
      case ';': out.push_back({Tok::Semi, start, {}}); ++i; break;
      case '(': out.push_back({Tok::LParen, start, {}}); ++i; break;
      case ')': out.push_back({Tok::RParen, start, {}}); ++i; break;
      case '-':
        if (i + 1 < text.size() && text[i + 1] == '>') {
          out.push_back({Tok::Imp, start, {}});
          i += 2;
        } else {
          throw ParseError(start, "expected '->'");
        }
        break;
      case '|':
        if (i + 1 < text.size() && text[i + 1] == '-') {
          out.push_back({Tok::Turnstile, start, {}});
          i += 2;
        } else {
          out.push_back({Tok::Or, start, {}});
          ++i;
        }
        break;
      default:
        throw ParseError(start, std::string("unexpected character '") + c + "'");
    }
  }
  out.push_back({Tok::End, text.size(), {}});
  return out;
}

// Parses formulas and bunches with one shared routine; which of the two was
// built is decided by the operators encountered.
struct Parser {
  std::vector<Token> toks;
  std::size_t i = 0;

  const Token& peek() const { return toks[i]; }
  Token take() { return toks[i++]; }

  using Entity = std::variant<FormulaPtr, BunchPtr>;

  static FormulaPtr as_formula(const Entity& e, std::size_t pos) {
    if (std::holds_alternative<FormulaPtr>(e)) return std::get<FormulaPtr>(e);
    throw ParseError(pos, "bunch operator inside a formula");
  }
  static BunchPtr as_bunch(const Entity& e) {
    if (std::holds_alternative<BunchPtr>(e)) return std::get<BunchPtr>(e);
    return mk_leaf(std::get<FormulaPtr>(e));
  }

  Entity parse_unit() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Atom:
        take();
        return FormulaPtr(mk_atom(t.atom));
      case Tok::Neg: {
        take();
        std::size_t opos = peek().pos;
        Entity operand = parse_unit();
        return FormulaPtr(mk_neg(as_formula(operand, opos)));
      }
      case Tok::LParen: {
        take();
        Entity e = parse_level();
        if (peek().kind != Tok::RParen) throw ParseError(peek().pos, "expected ')'");
        take();
        return e;
      }
      default:
        throw ParseError(t.pos, "expected a formula or bunch");
    }
  }

  // One binary level: unit, optionally followed by a single operator and a
  // second unit. Deeper nesting needs explicit parentheses.
  Entity parse_level() {
    std::size_t lpos = peek().pos;
    Entity lhs = parse_unit();
    const Token& t = peek();
    switch (t.kind) {
      case Tok::And:
      case Tok::Or:
      case Tok::Imp:
      case Tok::Fusion: {
        take();
        std::size_t rpos = peek().pos;
        Entity rhs = parse_unit();
        FormulaPtr l = as_formula(lhs, lpos), r = as_formula(rhs, rpos);
        switch (t.kind) {
          case Tok::And: return FormulaPtr(mk_and(l, r));
          case Tok::Or: return FormulaPtr(mk_or(l, r));
          case Tok::Imp: return FormulaPtr(mk_imp(l, r));
          default: return FormulaPtr(mk_fusion(l, r));
        }
      }
      case Tok::Comma:
      case Tok::Semi: {
        take();
        Entity rhs = parse_unit();
        BunchPtr l = as_bunch(lhs), r = as_bunch(rhs);
        return BunchPtr(t.kind == Tok::Comma ? mk_comma(l, r) : mk_semi(l, r));
      }
      default:
        return lhs;
    }
  }
};

}  // namespace detail

inline FormulaPtr parse_formula(std::string_view text) {
  detail::Parser p{detail::lex(text)};
  std::size_t pos = p.peek().pos;
  detail::Parser::Entity e = p.parse_level();
  if (p.peek().kind != detail::Tok::End)
    throw ParseError(p.peek().pos, "unexpected trailing input");
  return detail::Parser::as_formula(e, pos);
}

inline BunchPtr parse_bunch(std::string_view text) {
  detail::Parser p{detail::lex(text)};
  detail::Parser::Entity e = p.parse_level();
  if (p.peek().kind != detail::Tok::End)
    throw ParseError(p.peek().pos, "unexpected trailing input");
  return detail::Parser::as_bunch(e);
}

inline Consecution parse_consecution(std::string_view text) {
  detail::Parser p{detail::lex(text)};
  detail::Parser::Entity ant = p.parse_level();
  if (p.peek().kind != detail::Tok::Turnstile)
    throw ParseError(p.peek().pos, "expected '|-'");
  p.take();
  std::size_t spos = p.peek().pos;
  detail::Parser::Entity suc = p.parse_level();
  if (p.peek().kind != detail::Tok::End)
    throw ParseError(p.peek().pos, "unexpected trailing input");
  return Consecution{detail::Parser::as_bunch(ant), detail::Parser::as_formula(suc, spos)};
}

}  // namespace bunched
