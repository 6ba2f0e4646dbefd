// The acceptance suite: one function per gate criterion, each returning a
// pass/fail Result with a short detail string. Shared by the standalone
// acceptance runner and the CLI selftest subcommand. Oracles here are kept
// deliberately dumb (exhaustive enumeration, brute-force search) so they
// cannot share a bug with the code under test.
#pragma once

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "bunched/annotate.hpp"
#include "bunched/deriv.hpp"
#include "bunched/fixtures.hpp"
#include "bunched/harness.hpp"
#include "bunched/seqred.hpp"
#include "bunched/subst.hpp"
#include "bunched/translate.hpp"

namespace bunched::acceptance {

struct Result {
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

namespace detail {

template <class Body>
Result timed(std::string name, double budget_seconds, Body&& body) {
  auto t0 = std::chrono::steady_clock::now();
  Result r;
  r.name = std::move(name);
  try {
    body(r);
  } catch (const std::exception& e) {
    r.pass = false;
    r.detail = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (r.pass && budget_seconds > 0.0 && r.seconds > budget_seconds) {
    r.pass = false;
    std::ostringstream os;
    os << r.detail << " (over the " << budget_seconds << "s budget)";
    r.detail = os.str();
  }
  return r;
}

// All reduced sequences of length <= n, shortest first.
inline std::vector<Seq> reduced_upto(int n) {
  std::vector<Seq> out{Seq{}};
  std::size_t frontier_begin = 0;
  for (int len = 1; len <= n; ++len) {
    std::size_t frontier_end = out.size();
    for (std::size_t i = frontier_begin; i < frontier_end; ++i) {
      for (char c : kSeqLetters) {
        const Seq& s = out[i];
        if (!s.empty() && redex_contractum(s.back(), c)) continue;
        out.push_back(s + c);
      }
    }
    frontier_begin = frontier_end;
  }
  return out;
}

// For a fixed suffix w, the map red_concat(z, w) -> all reduced z in `pool`
// producing it. Uniqueness of suffix cancellation says every bucket is a
// singleton; the suite asserts that rather than assuming it.
inline std::map<Seq, std::vector<Seq>> concat_buckets(const std::vector<Seq>& pool, const Seq& w) {
  std::map<Seq, std::vector<Seq>> m;
  for (const Seq& z : pool) m[red_concat(z, w)].push_back(z);
  return m;
}

inline const std::vector<ProofTreePtr>& corpus() {
  static const std::vector<ProofTreePtr> trees = [] {
    std::vector<ProofTreePtr> v;
    GenConfig cfg;
    cfg.max_rule_nodes = 8;
    v.reserve(1000);
    for (std::uint64_t i = 1; i <= 1000; ++i) {
      cfg.seed = i;
      v.push_back(gen_derivation(cfg));
    }
    return v;
  }();
  return trees;
}

inline bool occurrence_with(const RseqAnnotation& ann, const Atom& a, const RSeq& w) {
  for (const RseqEntry& e : ann.entries)
    if (std::holds_alternative<FormulaPtr>(e.node)) {
      const FormulaPtr& f = std::get<FormulaPtr>(e.node);
      if (f->kind == FormulaKind::Atom && f->atom == a && e.seq == w) return true;
    }
  return false;
}

inline bool occurrence_with(const DepthAnnotation& ann, const Atom& a, int d) {
  for (const DepthEntry& e : ann.entries)
    if (std::holds_alternative<FormulaPtr>(e.node)) {
      const FormulaPtr& f = std::get<FormulaPtr>(e.node);
      if (f->kind == FormulaKind::Atom && f->atom == a && e.depth == d) return true;
    }
  return false;
}

}  // namespace detail

// 1. Every sequence over the alphabet, up to length 7, reduces to a unique
//    normal form no matter the order in which redexes are contracted, and
//    that normal form is red().
inline Result confluence_exhaustive() {
  return detail::timed("confluence-exhaustive", 60.0, [](Result& r) {
    std::vector<Seq> all{Seq{}};
    std::size_t begin = 0;
    for (int len = 1; len <= 7; ++len) {
      std::size_t end = all.size();
      for (std::size_t i = begin; i < end; ++i)
        for (char c : kSeqLetters) all.push_back(all[i] + c);
      begin = end;
    }
    std::size_t checked = 0;
    for (const Seq& s : all) {
      std::set<Seq> nfs = oracle_red_all_orders(s);
      if (nfs.size() != 1 || *nfs.begin() != red(s)) {
        r.detail = "divergent reduction for \"" + render_seq(s) + "\"";
        return;
      }
      ++checked;
    }
    std::ostringstream os;
    os << checked << " sequences, all confluent with red()";
    r.detail = os.str();
    r.pass = true;
  });
}

// 2. Suffix cancellation, exhaustively: for all reduced x (len <= 4) and
//    reduced w (len <= 3), cancel_suffix(x, w) returns exactly the unique
//    reduced z with red_concat(z, w) == x, or nothing when no such z exists;
//    and round-trips cancel_suffix(red_concat(y, w), w) == y for reduced
//    y (len <= 4).
inline Result cancellation_exhaustive() {
  return detail::timed("suffix-cancellation", 0.0, [](Result& r) {
    std::vector<Seq> xs = detail::reduced_upto(4);
    std::vector<Seq> ws = detail::reduced_upto(3);
    std::vector<Seq> pool = detail::reduced_upto(7);  // |z| <= |x| + |w|
    std::size_t solved = 0, empty = 0;
    for (const Seq& w : ws) {
      std::map<Seq, std::vector<Seq>> buckets = detail::concat_buckets(pool, w);
      for (const Seq& x : xs) {
        auto it = buckets.find(x);
        std::optional<RSeq> got = cancel_suffix(x, w);
        if (it == buckets.end()) {
          if (got) {
            r.detail = "spurious solution for x=" + render_seq(x) + " w=" + render_seq(w);
            return;
          }
          ++empty;
          continue;
        }
        if (it->second.size() != 1) {
          r.detail = "non-unique cancellation for x=" + render_seq(x) + " w=" + render_seq(w);
          return;
        }
        if (!got || *got != it->second.front()) {
          r.detail = "wrong solution for x=" + render_seq(x) + " w=" + render_seq(w);
          return;
        }
        ++solved;
      }
      for (const Seq& y : xs) {
        std::optional<RSeq> back = cancel_suffix(red_concat(y, w), w);
        if (!back || *back != y) {
          r.detail = "round trip failed for y=" + render_seq(y) + " w=" + render_seq(w);
          return;
        }
      }
    }
    std::ostringstream os;
    os << solved << " solvable / " << empty << " unsolvable pairs, all exact";
    r.detail = os.str();
    r.pass = true;
  });
}

// 3. red_concat agrees with reduce-after-concatenate, and reduction-equal
//    segments are interchangeable inside any context. 10,000 random cases
//    for each property.
inline Result concat_replacement() {
  return detail::timed("concat-replacement", 0.0, [](Result& r) {
    Rng rng(301);
    for (int i = 0; i < 10000; ++i) {
      Seq a = gen_seq(rng, 8), b = gen_seq(rng, 8);
      if (red_concat(a, b) != red(a + b)) {
        r.detail = "red_concat mismatch for \"" + render_seq(a) + "\" + \"" + render_seq(b) + "\"";
        return;
      }
    }
    for (int i = 0; i < 10000; ++i) {
      Seq u = gen_seq(rng, 5), x = gen_seq(rng, 6), v = gen_seq(rng, 5);
      Seq y = (i % 2 == 0) ? red(x) : x;
      if (i % 2 == 1) {
        std::size_t at = rng.below(x.size() + 1);
        y = x.substr(0, at) + "nn" + x.substr(at);
      }
      if (red(u + x + v) != red(u + y + v)) {
        r.detail = "replacement failed in context (\"" + render_seq(u) + "\", \"" +
                   render_seq(v) + "\")";
        return;
      }
    }
    r.detail = "10000 concatenations and 10000 replacements";
    r.pass = true;
  });
}

// 4. Depth substitution at every level n in [-3, 3] maps valid trees to
//    valid trees: 1000 generated trees x 20 substitutions.
inline Result depth_invariance_strong() {
  return detail::timed("depth-invariance-strong", 300.0, [](Result& r) {
    GenConfig cfg;
    Rng rng(401);
    std::size_t checks = 0;
    for (const ProofTreePtr& t : detail::corpus()) {
      for (int k = 0; k < 20; ++k) {
        DepthSubstitution d = gen_depth_substitution(rng, t->conclusion, cfg);
        int n = k % 7 - 3;
        ProofTreePtr image = apply_depth_to_tree(d, n, t);
        if (!check(image, System::B).valid) {
          r.detail = "image invalid at n=" + std::to_string(n) + " for tree with conclusion " +
                     render(t->conclusion);
          return;
        }
        ++checks;
      }
    }
    std::ostringstream os;
    os << checks << " transformed trees, all valid";
    r.detail = os.str();
    r.pass = true;
  });
}

// 5. Rseq substitution applied at the root sequence (x = e) maps valid trees
//    to valid trees: 1000 generated trees x 20 substitutions.
inline Result rseq_invariance_weak() {
  return detail::timed("rseq-invariance-weak", 0.0, [](Result& r) {
    GenConfig cfg;
    Rng rng(501);
    std::size_t checks = 0;
    for (const ProofTreePtr& t : detail::corpus()) {
      for (int k = 0; k < 20; ++k) {
        RseqSubstitution s = gen_rseq_substitution(rng, t->conclusion, cfg);
        ProofTreePtr image = apply_rseq_to_tree(s, RSeq{}, t);
        if (!check(image, System::B).valid) {
          r.detail = "image invalid for tree with conclusion " + render(t->conclusion);
          return;
        }
        ++checks;
      }
    }
    std::ostringstream os;
    os << checks << " transformed trees, all valid";
    r.detail = os.str();
    r.pass = true;
  });
}

// 6. Rseq substitution at a nonempty x does NOT preserve validity in
//    general: the deterministic search produces a verified counterexample
//    quickly.
inline Result rseq_invariance_strong_fails() {
  return detail::timed("rseq-invariance-strong-fails", 1.0, [](Result& r) {
    std::optional<StrongCounterexample> cex = find_strong_rseq_counterexample(1000);
    if (!cex) {
      r.detail = "no counterexample found";
      return;
    }
    if (!check(cex->tree, System::B).valid || check(cex->image, System::B).valid ||
        cex->x.empty()) {
      r.detail = "search returned an unverified witness";
      return;
    }
    r.detail = "tree " + render(cex->tree->conclusion) + ", x = " + render_seq(cex->x);
    r.pass = true;
  });
}

// 7. Variable sharing: the two sides of every generated provable consecution
//    share an atom, and share it at a common depth and at a common reduced
//    sequence; the reported witness is verified against the annotations.
inline Result sharing_property() {
  return detail::timed("sharing", 0.0, [](Result& r) {
    std::size_t checked = 0;
    for (const ProofTreePtr& t : detail::corpus()) {
      const Consecution& c = t->conclusion;
      std::optional<ShareWitness> plain = sharing_report(c, ShareMode::Plain);
      std::optional<ShareWitness> dep = sharing_report(c, ShareMode::Depth);
      std::optional<ShareWitness> seq = sharing_report(c, ShareMode::Rseq);
      if (!plain || !dep || !seq) {
        r.detail = "missing witness for " + render(c);
        return;
      }
      std::set<Atom> av = vars(c.antecedent), sv = vars(c.succedent);
      if (!av.count(plain->atom) || !sv.count(plain->atom)) {
        r.detail = "bad plain witness for " + render(c);
        return;
      }
      DepthAnnotation da = depth_annotations(c.antecedent);
      DepthAnnotation ds = depth_annotations(c.succedent);
      if (!dep->depth || !detail::occurrence_with(da, dep->atom, *dep->depth) ||
          !detail::occurrence_with(ds, dep->atom, *dep->depth)) {
        r.detail = "bad depth witness for " + render(c);
        return;
      }
      RseqAnnotation ra = rseq_annotations(c.antecedent);
      RseqAnnotation rs = rseq_annotations(c.succedent);
      if (!seq->seq || !detail::occurrence_with(ra, seq->atom, *seq->seq) ||
          !detail::occurrence_with(rs, seq->atom, *seq->seq)) {
        r.detail = "bad rseq witness for " + render(c);
        return;
      }
      ++checked;
    }
    std::ostringstream os;
    os << checked << " consecutions share in all three senses";
    r.detail = os.str();
    r.pass = true;
  });
}

// 8. The algebraic laws behind the tree actions, 10,000 random cases each:
//    depth shift composition, rseq shift lookups, both hole lemmas, and
//    well-definedness of the shifted lookup against brute-force enumeration
//    of candidate prefixes.
inline Result shift_and_hole_laws() {
  return detail::timed("shift-and-hole-laws", 0.0, [](Result& r) {
    GenConfig cfg;
    Rng rng(801);

    for (int i = 0; i < 10000; ++i) {
      FormulaPtr f = gen_formula(rng, 3, cfg.atom_pool);
      Consecution companion{mk_leaf(f), f};
      DepthSubstitution d = gen_depth_substitution(rng, companion, cfg);
      int n = rng.range(-3, 3), x = rng.range(-3, 3);
      if (!equal(apply_depth(d, n + x, f), apply_depth(shift_depth(d, x), n, f))) {
        r.detail = "depth shift law failed at n=" + std::to_string(n) +
                   " x=" + std::to_string(x) + " on " + render(f);
        return;
      }
    }

    for (int i = 0; i < 10000; ++i) {
      FormulaPtr f = gen_formula(rng, 2, cfg.atom_pool);
      Consecution companion{mk_leaf(f), f};
      RseqSubstitution s = gen_rseq_substitution(rng, companion, cfg);
      RSeq z = gen_rseq(rng, 3), w = gen_rseq(rng, 2), y = gen_rseq(rng, 3);
      Atom p{static_cast<std::int64_t>(1 + rng.below(4))};
      FormulaPtr via_shift = shift_rseq(s, w, y).lookup(red_concat(z, w), p);
      FormulaPtr direct = s.lookup(red_concat(z, y), p);
      if (!equal(via_shift, direct)) {
        r.detail = "rseq shift law failed at z=" + render_seq(z) + " w=" + render_seq(w) +
                   " y=" + render_seq(y);
        return;
      }
    }

    for (int i = 0; i < 10000; ++i) {
      BunchPtr xb = gen_bunch(rng, 3, cfg.atom_pool);
      std::vector<Path> paths = subbunch_paths(xb);
      Path pi = paths[rng.below(paths.size())];
      BunchPtr wb = gen_bunch(rng, 2, cfg.atom_pool);
      BunchPtr yb = replace_at(xb, pi, wb);
      HoleInfo h = hole_info(xb, pi);

      std::map<Path, int> ydepth;
      for (const DepthEntry& e : depth_annotations(yb).entries) ydepth[e.path] = e.depth;
      for (const DepthEntry& e : depth_annotations(wb).entries) {
        Path full = pi;
        full.insert(full.end(), e.path.begin(), e.path.end());
        auto it = ydepth.find(full);
        if (it == ydepth.end() || it->second != e.depth + h.depth) {
          r.detail = "depth hole lemma failed at path " + render_path(pi);
          return;
        }
      }
      std::map<Path, RSeq> yseq;
      for (const RseqEntry& e : rseq_annotations(yb).entries) yseq[e.path] = e.seq;
      for (const RseqEntry& e : rseq_annotations(wb).entries) {
        Path full = pi;
        full.insert(full.end(), e.path.begin(), e.path.end());
        auto it = yseq.find(full);
        if (it == yseq.end() || it->second != red_concat(e.seq, h.seq)) {
          r.detail = "rseq hole lemma failed at path " + render_path(pi);
          return;
        }
      }
    }

    {
      std::vector<Seq> pool = detail::reduced_upto(7);
      std::vector<Seq> ws = detail::reduced_upto(3);
      std::map<Seq, std::map<Seq, std::vector<Seq>>> buckets_by_w;
      for (const Seq& w : ws) buckets_by_w[w] = detail::concat_buckets(pool, w);
      std::vector<Seq> xs = detail::reduced_upto(4);
      for (int i = 0; i < 10000; ++i) {
        const Seq& x = xs[rng.below(xs.size())];
        const Seq& w = ws[rng.below(ws.size())];
        const std::map<Seq, std::vector<Seq>>& buckets = buckets_by_w[w];
        auto it = buckets.find(x);
        std::optional<RSeq> got = cancel_suffix(x, w);
        bool expect = it != buckets.end();
        if (expect != got.has_value() || (expect && it->second.size() != 1) ||
            (expect && *got != it->second.front())) {
          r.detail = "shifted lookup not well defined at x=" + render_seq(x) +
                     " w=" + render_seq(w);
          return;
        }
      }
    }

    r.detail = "4 law families x 10000 cases";
    r.pass = true;
  });
}

// 9. The worked examples: leaf depths in p ; q, the sequence annotations of
//    (p1 -> p2) ; ((p3 -> p1) ; p3), the root substitution rewriting modus
//    ponens, the fusion introduction fixture against its mislabeled variant,
//    and the two system R fixtures (including the strict-variant behavior
//    that motivated their shape).
inline Result worked_examples() {
  return detail::timed("worked-examples", 0.0, [](Result& r) {
    {
      BunchPtr b = parse_bunch("p ; q");
      DepthAnnotation ann = depth_annotations(b);
      bool left_ok = false, right_ok = false;
      for (const DepthEntry& e : ann.entries) {
        if (e.path == Path{0} && std::holds_alternative<BunchPtr>(e.node)) left_ok = e.depth == -1;
        if (e.path == Path{1} && std::holds_alternative<BunchPtr>(e.node)) right_ok = e.depth == 0;
      }
      if (!left_ok || !right_ok) {
        r.detail = "leaf depths of p ; q are wrong";
        return;
      }
      HoleInfo h = hole_info(b, Path{0});
      if (h.depth != -1 || h.seq != "L") {
        r.detail = "hole info for the left leaf of p ; q is wrong";
        return;
      }
    }
    {
      BunchPtr b = parse_bunch("(p1 -> p2) ; ((p3 -> p1) ; p3)");
      std::map<std::pair<std::int64_t, RSeq>, int> got;
      for (const RseqEntry& e : rseq_annotations(b).entries)
        if (std::holds_alternative<FormulaPtr>(e.node)) {
          const FormulaPtr& f = std::get<FormulaPtr>(e.node);
          if (f->kind == FormulaKind::Atom) ++got[{f->atom.index, e.seq}];
        }
      std::map<std::pair<std::int64_t, RSeq>, int> want = {
          {{1, "P"}, 2}, {{2, ""}, 1}, {{3, "PP"}, 2}};
      if (got != want) {
        r.detail = "sequence annotations of (p1 -> p2) ; ((p3 -> p1) ; p3) are wrong";
        return;
      }
    }
    {
      ProofTreePtr t = fixtures::modus_ponens_tree();
      std::map<RseqSubstitution::Key, FormulaPtr> table;
      table[{RSeq{}, 1}] = mk_atom(2);
      RseqSubstitution s = RseqSubstitution::from_table(std::move(table));
      Consecution want = parse_consecution("(p1 -> p2) ; p1 |- p2");
      if (!equal(apply_rseq(s, RSeq{}, t->conclusion), want)) {
        r.detail = "root substitution on modus ponens gave the wrong consecution";
        return;
      }
      ProofTreePtr image = apply_rseq_to_tree(s, RSeq{}, t);
      if (!equal(image->conclusion, want) || !check(image, System::B).valid) {
        r.detail = "transformed modus ponens derivation does not check";
        return;
      }
    }
    {
      ProofTreePtr good = parse_derivation(fixtures::kFusIExample);
      CheckReport rep = check(good, System::B);
      if (!rep.valid || rep.open_leaves.size() != 2) {
        r.detail = "fusion introduction fixture failed to validate";
        return;
      }
      ProofTreePtr bad = parse_derivation(fixtures::kOrEMislabeled);
      CheckReport brep = check(bad, System::B);
      bool arity = false;
      for (const CheckFailure& f : brep.failures) arity |= f.reason.find("arity") != std::string::npos;
      if (brep.valid || !arity) {
        r.detail = "mislabeled variant was not rejected for arity";
        return;
      }
    }
    {
      ProofTreePtr t1 = parse_derivation(fixtures::kFusionFromNegImp);
      ProofTreePtr t3 = parse_derivation(fixtures::kNegImpFromFusion);
      if (!check(t1, System::R).valid || !check(t3, System::R).valid) {
        r.detail = "system R fixtures failed to validate";
        return;
      }
      CheckOptions strict;
      strict.retain_neg_i = false;
      if (check(t1, System::R, strict).valid) {
        r.detail = "double negation fixture unexpectedly valid without negI";
        return;
      }
      if (!check(t3, System::R, strict).valid) {
        r.detail = "converse fixture should not need negI";
        return;
      }
    }
    r.detail = "annotations, substitution, and all four fixtures as expected";
    r.pass = true;
  });
}

// 10. The connective-free translation: it never emits the fused connective,
//     it preserves the variable set, and it is the identity on inputs that
//     are already free of it. 10,000 random cases.
inline Result translation_properties() {
  return detail::timed("translation", 0.0, [](Result& r) {
    Rng rng(1001);
    auto fusion_free = [](const FormulaPtr& f) {
      std::vector<FormulaPtr> stack{f};
      while (!stack.empty()) {
        FormulaPtr cur = stack.back();
        stack.pop_back();
        if (cur->kind == FormulaKind::Fusion) return false;
        if (cur->lhs) stack.push_back(cur->lhs);
        if (cur->rhs) stack.push_back(cur->rhs);
      }
      return true;
    };
    for (int i = 0; i < 10000; ++i) {
      if (i % 2 == 0) {
        FormulaPtr f = gen_formula(rng, 4, 4);
        FormulaPtr tf = tau(f);
        if (!fusion_free(tf)) {
          r.detail = "translation emitted a fused connective";
          return;
        }
        if (vars(tf) != vars(f)) {
          r.detail = "translation changed the variable set of " + render(f);
          return;
        }
        if (fusion_free(f) && !equal(tf, f)) {
          r.detail = "translation not the identity on " + render(f);
          return;
        }
      } else {
        BunchPtr b = gen_bunch(rng, 3, 4);
        FormulaPtr flat = cf(b);
        if (vars(flat) != vars(b)) {
          r.detail = "flattening changed the variable set of " + render(b);
          return;
        }
        FormulaPtr tb = tau(b);
        if (!fusion_free(tb) || !equal(tb, tau(flat))) {
          r.detail = "bunch translation disagreed with flatten-then-translate";
          return;
        }
      }
    }
    r.detail = "10000 cases";
    r.pass = true;
  });
}

// 11. Text round trips and generator determinism: parse(render(x)) renders
//     back byte-identically for formulas, bunches, consecutions, and
//     serialized derivations; generation is a pure function of its seed.
inline Result roundtrip_determinism() {
  return detail::timed("roundtrip-determinism", 0.0, [](Result& r) {
    Rng rng(1101);
    for (int i = 0; i < 10000; ++i) {
      std::string s1, s2;
      switch (i % 3) {
        case 0: {
          FormulaPtr f = gen_formula(rng, 4, 4);
          s1 = render(f);
          s2 = render(parse_formula(s1));
          break;
        }
        case 1: {
          BunchPtr b = gen_bunch(rng, 3, 4);
          s1 = render(b);
          s2 = render(parse_bunch(s1));
          break;
        }
        default: {
          Consecution c{gen_bunch(rng, 3, 4), gen_formula(rng, 3, 4)};
          s1 = render(c);
          s2 = render(parse_consecution(s1));
          break;
        }
      }
      if (s1 != s2) {
        r.detail = "round trip changed \"" + s1 + "\" into \"" + s2 + "\"";
        return;
      }
    }
    GenConfig cfg;
    cfg.max_rule_nodes = 6;
    for (std::uint64_t seed = 1; seed <= 500; ++seed) {
      cfg.seed = seed * 7919;
      std::string a = serialize_derivation(gen_derivation(cfg));
      std::string b = serialize_derivation(gen_derivation(cfg));
      if (a != b) {
        r.detail = "generation not deterministic at seed " + std::to_string(cfg.seed);
        return;
      }
      std::string c = serialize_derivation(parse_derivation(a));
      if (a != c) {
        r.detail = "derivation text round trip failed at seed " + std::to_string(cfg.seed);
        return;
      }
    }
    r.detail = "10000 text round trips, 500 seeds replayed";
    r.pass = true;
  });
}

inline std::vector<Result> run_all(std::ostream* progress = nullptr) {
  std::vector<Result> out;
  auto emit = [&](Result r) {
    if (progress) {
      std::ostringstream os;
      os << (r.pass ? "PASS" : "FAIL") << "  " << std::left << std::setw(30) << r.name
         << std::right << std::fixed << std::setprecision(2) << std::setw(8) << r.seconds
         << "s  " << r.detail << "\n";
      *progress << os.str() << std::flush;
    }
    out.push_back(std::move(r));
  };
  emit(confluence_exhaustive());
  emit(cancellation_exhaustive());
  emit(concat_replacement());
  emit(depth_invariance_strong());
  emit(rseq_invariance_weak());
  emit(rseq_invariance_strong_fails());
  emit(sharing_property());
  emit(shift_and_hole_laws());
  emit(worked_examples());
  emit(translation_properties());
  emit(roundtrip_determinism());
  return out;
}

inline bool all_passed(const std::vector<Result>& rs) {
  for (const Result& r : rs)
    if (!r.pass) return false;
  return true;
}

}  // namespace bunched::acceptance
