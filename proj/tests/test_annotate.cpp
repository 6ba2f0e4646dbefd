#include <catch2/catch_amalgamated.hpp>

#include <map>

#include "bunched/annotate.hpp"

using namespace bunched;

namespace {

std::map<Path, int> depth_by_path(const DepthAnnotation& ann) {
  std::map<Path, int> m;
  for (const DepthEntry& e : ann.entries) m[e.path] = e.depth;
  return m;
}

std::map<Path, RSeq> seq_by_path(const RseqAnnotation& ann) {
  std::map<Path, RSeq> m;
  for (const RseqEntry& e : ann.entries) m[e.path] = e.seq;
  return m;
}

}  // namespace

TEST_CASE("depth annotation of connectives") {
  auto imp = depth_by_path(depth_annotations(parse_formula("p1 -> p2")));
  CHECK(imp[Path{}] == 0);
  CHECK(imp[Path{0}] == 1);
  CHECK(imp[Path{1}] == 1);

  auto fus = depth_by_path(depth_annotations(parse_formula("p1 * p2")));
  CHECK(fus[Path{0}] == -1);
  CHECK(fus[Path{1}] == 0);

  auto neg = depth_by_path(depth_annotations(parse_formula("~(p1 & p2)")));
  CHECK(neg[Path{0}] == 0);
  CHECK(neg[Path{0, 0}] == 0);
  CHECK(neg[Path{0, 1}] == 0);
}

TEST_CASE("depth annotation of bunches") {
  BunchPtr b = parse_bunch("p ; q");
  auto d = depth_by_path(depth_annotations(b));
  CHECK(d[Path{}] == 0);
  CHECK(d[Path{0}] == -1);   // left leaf
  CHECK(d[Path{0, 0}] == -1);  // its formula
  CHECK(d[Path{1}] == 0);
  CHECK(d[Path{1, 0}] == 0);

  auto comma = depth_by_path(depth_annotations(parse_bunch("p1 , p2")));
  CHECK(comma[Path{0}] == 0);
  CHECK(comma[Path{1}] == 0);
}

TEST_CASE("rseq annotation of a nested bunch") {
  BunchPtr b = parse_bunch("(p1 -> p2) ; ((p3 -> p1) ; p3)");
  std::map<std::pair<std::int64_t, RSeq>, int> occurrences;
  for (const RseqEntry& e : rseq_annotations(b).entries)
    if (std::holds_alternative<FormulaPtr>(e.node)) {
      const FormulaPtr& f = std::get<FormulaPtr>(e.node);
      if (f->kind == FormulaKind::Atom) ++occurrences[{f->atom.index, e.seq}];
    }
  std::map<std::pair<std::int64_t, RSeq>, int> want = {
      {{1, "P"}, 2}, {{2, ""}, 1}, {{3, "PP"}, 2}};
  CHECK(occurrences == want);
}

TEST_CASE("rseq annotation of connectives") {
  auto imp = seq_by_path(rseq_annotations(parse_formula("p1 -> p2")));
  CHECK(imp[Path{}] == "");
  CHECK(imp[Path{0}] == "l");
  CHECK(imp[Path{1}] == "r");

  auto neg = seq_by_path(rseq_annotations(parse_formula("~~p1")));
  CHECK(neg[Path{0}] == "n");
  CHECK(neg[Path{0, 0}] == "");  // nn cancels

  auto fus = seq_by_path(rseq_annotations(parse_formula("p1 * p2")));
  CHECK(fus[Path{0}] == "L");
  CHECK(fus[Path{1}] == "P");
}

TEST_CASE("hole info accumulates along the spine") {
  BunchPtr b = parse_bunch("p ; q");
  HoleInfo h = hole_info(b, Path{0});
  CHECK(h.depth == -1);
  CHECK(h.seq == "L");
  HoleInfo r = hole_info(b, Path{1});
  CHECK(r.depth == 0);
  CHECK(r.seq == "P");

  BunchPtr c = parse_bunch("(p1 , p2) ; p3");
  HoleInfo deep = hole_info(c, Path{0, 1});
  CHECK(deep.depth == -1);
  CHECK(deep.seq == "L");

  HoleInfo root = hole_info(b, Path{});
  CHECK(root.depth == 0);
  CHECK(root.seq == "");

  CHECK_THROWS_AS(hole_info(b, Path{0, 0, 0}), InvalidPath);
}

TEST_CASE("sharing witnesses for modus ponens") {
  Consecution c = parse_consecution("(p1 -> p1) ; p1 |- p1");
  auto plain = sharing_report(c, ShareMode::Plain);
  REQUIRE(plain.has_value());
  CHECK(plain->atom == Atom{1});

  auto dep = sharing_report(c, ShareMode::Depth);
  REQUIRE(dep.has_value());
  CHECK(dep->atom == Atom{1});
  CHECK(dep->depth == 0);

  auto seq = sharing_report(c, ShareMode::Rseq);
  REQUIRE(seq.has_value());
  CHECK(seq->atom == Atom{1});
  CHECK(seq->seq == RSeq{});
}

TEST_CASE("sharing picks the smallest atom then the leftmost occurrence") {
  Consecution c = parse_consecution("p2 , p1 |- p1 & p2");
  auto seq = sharing_report(c, ShareMode::Rseq);
  REQUIRE(seq.has_value());
  CHECK(seq->atom == Atom{1});
  CHECK(seq->path == (Path{1, 0}));
}

TEST_CASE("sharing can fail") {
  Consecution c = parse_consecution("p1 |- p2");
  CHECK_FALSE(sharing_report(c, ShareMode::Plain).has_value());
  CHECK_FALSE(sharing_report(c, ShareMode::Depth).has_value());
  CHECK_FALSE(sharing_report(c, ShareMode::Rseq).has_value());

  // shared atom but never at a common depth: p1 sits at -1 on the right
  Consecution d = parse_consecution("p1 |- p1 * p2");
  CHECK(sharing_report(d, ShareMode::Plain).has_value());
  CHECK_FALSE(sharing_report(d, ShareMode::Depth).has_value());
}
