// Embedded copies of the derivation files under fixtures/, so the checker,
// the acceptance suite, and the CLI selftest can exercise them without
// knowing where the source tree lives. A unit test asserts that each embedded
// string is byte-identical to the corresponding file.
#pragma once

#include <string>
#include <vector>

#include "bunched/deriv.hpp"

namespace bunched::fixtures {

inline constexpr const char* kFusIExample = R"FIX(;; Fusion introduction over two open subgoals: valid as a derivation with
;; open leaves, so `check` accepts it and lists the undischarged premises.
(rule fusI
  (open "p1 |- p2")
  (open "p3 |- p4")
  (concl "p1 ; p3 |- p2 * p4"))
)FIX";

inline constexpr const char* kOrEMislabeled = R"FIX(;; The fusion introduction example with its rule label swapped to orE.
;; orE takes three premises (a disjunctive major and two minors), so this
;; tree must be rejected with an arity violation.
(rule orE
  (open "p1 |- p2")
  (open "p3 |- p4")
  (concl "p1 ; p3 |- p2 * p4"))
)FIX";

inline constexpr const char* kFusionFromNegImp = R"FIX(;; System R example: a fusion recovered from the refutation of its curried
;; form, ~(p1 -> ~p2) |- p1 * p2. The negI2 step consumes a doubly negated
;; succedent, so a negI node (with its id partner) introduces ~~(p1 * p2)
;; explicitly before negI2 discharges p2.
(rule negE
  (rule negI
    (id "~(p1 -> ~p2)")
    (rule negI
      (rule impI
        (rule sC
          (rule negI2
            (rule negI
              (rule fusI
                (id "p1")
                (id "p2")
                (concl "p1 ; p2 |- p1 * p2"))
              (id "~(p1 * p2)")
              (concl "p1 ; p2 |- ~~(p1 * p2)"))
            (id "~(p1 * p2)")
            (concl "p1 ; ~(p1 * p2) |- ~p2"))
          (concl "~(p1 * p2) ; p1 |- ~p2")
          (hole "e"))
        (concl "~(p1 * p2) |- p1 -> ~p2"))
      (id "~(p1 -> ~p2)")
      (concl "~(p1 * p2) |- ~~(p1 -> ~p2)"))
    (concl "~(p1 -> ~p2) |- ~~(p1 * p2)"))
  (concl "~(p1 -> ~p2) |- p1 * p2"))
)FIX";

inline constexpr const char* kNegImpFromFusion = R"FIX(;; System R example: the converse direction, p1 * p2 |- ~(p1 -> ~p2).
;; fusE replaces the fused pair p1 ; p2 by the single leaf p1 * p2 at the
;; root hole of the minor premise.
(rule fusE
  (id "p1 * p2")
  (rule negI2
    (rule sC
      (rule impE
        (id "p1 -> ~p2")
        (id "p1")
        (concl "(p1 -> ~p2) ; p1 |- ~p2"))
      (concl "p1 ; (p1 -> ~p2) |- ~p2")
      (hole "e"))
    (id "p2")
    (concl "p1 ; p2 |- ~(p1 -> ~p2)"))
  (concl "p1 * p2 |- ~(p1 -> ~p2)")
  (hole "e"))
)FIX";

struct Fixture {
  std::string file;       // path relative to the repository root
  const char* content;
  System system;
  bool valid;             // expected check(·, system) verdict
};

inline const std::vector<Fixture>& all() {
  static const std::vector<Fixture> fixtures = {
      {"fixtures/fusI_example.deriv", kFusIExample, System::B, true},
      {"fixtures/orE_mislabeled.deriv", kOrEMislabeled, System::B, false},
      {"fixtures/fusion_from_negimp.deriv", kFusionFromNegImp, System::R, true},
      {"fixtures/negimp_from_fusion.deriv", kNegImpFromFusion, System::R, true},
  };
  return fixtures;
}

// Modus ponens for (p1 -> p1) ; p1 |- p1, used by several suites.
inline ProofTreePtr modus_ponens_tree() {
  FormulaPtr p1 = mk_atom(1);
  FormulaPtr impf = mk_imp(p1, p1);
  return mk_rule(RuleName::ImpE, {mk_id(impf), mk_id(p1)},
                 Consecution{mk_semi(mk_leaf(impf), mk_leaf(p1)), p1});
}

}  // namespace bunched::fixtures
