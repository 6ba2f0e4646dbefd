// Characteristic formulas of bunches (comma becomes &, semicolon becomes *)
// and the fusion-eliminating translation tau, which rewrites A * B into
// ~(A -> ~B) and is homomorphic on every other connective.
#pragma once

#include "bunched/syntax.hpp"

namespace bunched {

inline FormulaPtr cf(const BunchPtr& b) {
  switch (b->kind) {
    case BunchKind::Leaf:
      return b->formula;
    case BunchKind::Comma:
      return mk_and(cf(b->left), cf(b->right));
    case BunchKind::Semi:
      return mk_fusion(cf(b->left), cf(b->right));
  }
  return nullptr;  // unreachable
}

inline FormulaPtr tau(const FormulaPtr& f) {
  switch (f->kind) {
    case FormulaKind::Atom:
      return f;
    case FormulaKind::Neg:
      return mk_neg(tau(f->lhs));
    case FormulaKind::And:
      return mk_and(tau(f->lhs), tau(f->rhs));
    case FormulaKind::Or:
      return mk_or(tau(f->lhs), tau(f->rhs));
    case FormulaKind::Imp:
      return mk_imp(tau(f->lhs), tau(f->rhs));
    case FormulaKind::Fusion:
      return mk_neg(mk_imp(tau(f->lhs), mk_neg(tau(f->rhs))));
  }
  return nullptr;  // unreachable
}

inline FormulaPtr tau(const BunchPtr& b) { return tau(cf(b)); }

}  // namespace bunched
