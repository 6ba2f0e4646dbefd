// Depth-annotated and sequence-annotated parse trees, hole data for bunch
// contexts, and the three variable-sharing relations (plain, depth, rseq).
//
// Annotation rules, child by child, starting from 0 / the empty sequence at
// the root:
//   depth:  Semi and * send left to n-1 and right to n; -> sends both
//           children to n+1; Comma, &, |, ~ and the leaf embedding keep n.
//   seq:    Semi and * prefix L (left) / P (right); -> prefixes l / r;
//           ~ prefixes n; Comma, &, | and the leaf embedding keep the
//           sequence. Every prefix step reduces the result.
#pragma once

#include <optional>
#include <set>
#include <utility>
#include <variant>
#include <vector>

#include "bunched/seqred.hpp"
#include "bunched/syntax.hpp"

namespace bunched {

using NodeRef = std::variant<BunchPtr, FormulaPtr>;

inline std::string render(const NodeRef& n) {
  if (std::holds_alternative<BunchPtr>(n)) return render(std::get<BunchPtr>(n));
  return render(std::get<FormulaPtr>(n));
}

struct DepthEntry {
  Path path;
  NodeRef node;
  int depth;
};
struct DepthAnnotation {
  std::vector<DepthEntry> entries;  // preorder: root first, left before right
};

struct RseqEntry {
  Path path;
  NodeRef node;
  RSeq seq;
};
struct RseqAnnotation {
  std::vector<RseqEntry> entries;  // preorder
};

// Position data for one highlighted subbunch occurrence: its depth c and its
// sequence under both annotations of the enclosing bunch.
struct HoleInfo {
  Path path;
  int depth;
  RSeq seq;
};

namespace detail {

inline void walk_depth(const FormulaPtr& f, Path& path, int n, std::vector<DepthEntry>& out) {
  out.push_back({path, f, n});
  switch (f->kind) {
    case FormulaKind::Atom:
      return;
    case FormulaKind::Neg:
      path.push_back(0);
      walk_depth(f->lhs, path, n, out);
      path.pop_back();
      return;
    case FormulaKind::And:
    case FormulaKind::Or:
      path.push_back(0);
      walk_depth(f->lhs, path, n, out);
      path.back() = 1;
      walk_depth(f->rhs, path, n, out);
      path.pop_back();
      return;
    case FormulaKind::Imp:
      path.push_back(0);
      walk_depth(f->lhs, path, n + 1, out);
      path.back() = 1;
      walk_depth(f->rhs, path, n + 1, out);
      path.pop_back();
      return;
    case FormulaKind::Fusion:
      path.push_back(0);
      walk_depth(f->lhs, path, n - 1, out);
      path.back() = 1;
      walk_depth(f->rhs, path, n, out);
      path.pop_back();
      return;
  }
}

inline void walk_depth(const BunchPtr& b, Path& path, int n, std::vector<DepthEntry>& out) {
  out.push_back({path, b, n});
  if (b->kind == BunchKind::Leaf) {
    path.push_back(0);
    walk_depth(b->formula, path, n, out);
    path.pop_back();
    return;
  }
  int left_n = b->kind == BunchKind::Semi ? n - 1 : n;
  path.push_back(0);
  walk_depth(b->left, path, left_n, out);
  path.back() = 1;
  walk_depth(b->right, path, n, out);
  path.pop_back();
}

inline RSeq prefixed(char letter, const RSeq& x) {
  return red_concat(std::string_view(&letter, 1), x);
}

inline void walk_rseq(const FormulaPtr& f, Path& path, const RSeq& x, std::vector<RseqEntry>& out) {
  out.push_back({path, f, x});
  switch (f->kind) {
    case FormulaKind::Atom:
      return;
    case FormulaKind::Neg:
      path.push_back(0);
      walk_rseq(f->lhs, path, prefixed('n', x), out);
      path.pop_back();
      return;
    case FormulaKind::And:
    case FormulaKind::Or:
      path.push_back(0);
      walk_rseq(f->lhs, path, x, out);
      path.back() = 1;
      walk_rseq(f->rhs, path, x, out);
      path.pop_back();
      return;
    case FormulaKind::Imp:
      path.push_back(0);
      walk_rseq(f->lhs, path, prefixed('l', x), out);
      path.back() = 1;
      walk_rseq(f->rhs, path, prefixed('r', x), out);
      path.pop_back();
      return;
    case FormulaKind::Fusion:
      path.push_back(0);
      walk_rseq(f->lhs, path, prefixed('L', x), out);
      path.back() = 1;
      walk_rseq(f->rhs, path, prefixed('P', x), out);
      path.pop_back();
      return;
  }
}

inline void walk_rseq(const BunchPtr& b, Path& path, const RSeq& x, std::vector<RseqEntry>& out) {
  out.push_back({path, b, x});
  if (b->kind == BunchKind::Leaf) {
    path.push_back(0);
    walk_rseq(b->formula, path, x, out);
    path.pop_back();
    return;
  }
  path.push_back(0);
  walk_rseq(b->left, path, b->kind == BunchKind::Semi ? prefixed('L', x) : x, out);
  path.back() = 1;
  walk_rseq(b->right, path, b->kind == BunchKind::Semi ? prefixed('P', x) : x, out);
  path.pop_back();
}

}  // namespace detail

inline DepthAnnotation depth_annotations(const FormulaPtr& f) {
  DepthAnnotation out;
  Path path;
  detail::walk_depth(f, path, 0, out.entries);
  return out;
}

inline DepthAnnotation depth_annotations(const BunchPtr& b) {
  DepthAnnotation out;
  Path path;
  detail::walk_depth(b, path, 0, out.entries);
  return out;
}

inline RseqAnnotation rseq_annotations(const FormulaPtr& f) {
  RseqAnnotation out;
  Path path;
  detail::walk_rseq(f, path, RSeq{}, out.entries);
  return out;
}

inline RseqAnnotation rseq_annotations(const BunchPtr& b) {
  RseqAnnotation out;
  Path path;
  detail::walk_rseq(b, path, RSeq{}, out.entries);
  return out;
}

// Depth and sequence of the subbunch occurrence addressed by path, computed
// directly along the spine.
inline HoleInfo hole_info(const BunchPtr& b, const Path& path) {
  BunchPtr cur = b;
  int depth = 0;
  RSeq seq;
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (cur->kind == BunchKind::Leaf)
      throw InvalidPath("hole path descends into a leaf at step " + std::to_string(i));
    if (cur->kind == BunchKind::Semi) {
      if (path[i] == 0) {
        depth -= 1;
        seq = detail::prefixed('L', seq);
      } else {
        seq = detail::prefixed('P', seq);
      }
    }
    cur = path[i] == 0 ? cur->left : cur->right;
  }
  return HoleInfo{path, depth, seq};
}

// ---------------------------------------------------------------------------
// Variable sharing

enum class ShareMode { Plain, Depth, Rseq };

struct ShareWitness {
  Atom atom;
  Path path;                 // left occurrence within the antecedent
  std::optional<int> depth;  // ShareMode::Depth only
  std::optional<RSeq> seq;   // ShareMode::Rseq only
};

// First witness in lexicographic (atom index, path) order that X and A share
// a variable in the requested sense: plain membership of the atom in both,
// occurrence at equal depth, or occurrence under equal sequences.
inline std::optional<ShareWitness> sharing_report(const BunchPtr& X, const FormulaPtr& A,
                                                  ShareMode mode) {
  auto atom_of = [](const NodeRef& n) -> const Formula* {
    if (!std::holds_alternative<FormulaPtr>(n)) return nullptr;
    const FormulaPtr& f = std::get<FormulaPtr>(n);
    return f->kind == FormulaKind::Atom ? f.get() : nullptr;
  };

  std::optional<ShareWitness> best;
  auto consider = [&](ShareWitness w) {
    if (!best || std::tie(w.atom.index, w.path) < std::tie(best->atom.index, best->path))
      best = std::move(w);
  };

  switch (mode) {
    case ShareMode::Plain: {
      std::set<Atom> in_a = vars(A);
      std::set<Atom> in_x = vars(X);
      // Occurrence paths are only needed for ordering; the smallest shared
      // atom index alone determines the plain witness.
      for (const Atom& a : in_x)
        if (in_a.count(a)) return ShareWitness{a, {}, std::nullopt, std::nullopt};
      return std::nullopt;
    }
    case ShareMode::Depth: {
      std::set<std::pair<std::int64_t, int>> keys;
      for (const DepthEntry& e : depth_annotations(A).entries)
        if (const Formula* f = atom_of(e.node)) keys.insert({f->atom.index, e.depth});
      for (const DepthEntry& e : depth_annotations(X).entries)
        if (const Formula* f = atom_of(e.node))
          if (keys.count({f->atom.index, e.depth}))
            consider(ShareWitness{f->atom, e.path, e.depth, std::nullopt});
      return best;
    }
    case ShareMode::Rseq: {
      std::set<std::pair<std::int64_t, RSeq>> keys;
      for (const RseqEntry& e : rseq_annotations(A).entries)
        if (const Formula* f = atom_of(e.node)) keys.insert({f->atom.index, e.seq});
      for (const RseqEntry& e : rseq_annotations(X).entries)
        if (const Formula* f = atom_of(e.node))
          if (keys.count({f->atom.index, e.seq}))
            consider(ShareWitness{f->atom, e.path, std::nullopt, e.seq});
      return best;
    }
  }
  return std::nullopt;
}

inline std::optional<ShareWitness> sharing_report(const Consecution& c, ShareMode mode) {
  return sharing_report(c.antecedent, c.succedent, mode);
}

}  // namespace bunched
