// Command line front end: parsing, annotation, sequence reduction,
// substitution, proof checking, sharing reports, translation, derivation
// generation, and the built-in acceptance suite.
//
// Exit codes: 0 on success (valid input, witness found), 1 for a negative
// verdict (invalid derivation, no witness), 2 for usage or parse errors.

#include <CLI11.hpp>

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "bunched/acceptance.hpp"
#include "bunched/annotate.hpp"
#include "bunched/deriv.hpp"
#include "bunched/fixtures.hpp"
#include "bunched/harness.hpp"
#include "bunched/seqred.hpp"
#include "bunched/subst.hpp"
#include "bunched/syntax.hpp"
#include "bunched/translate.hpp"

namespace {

using namespace bunched;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

System system_from(const std::string& s) { return s == "R" ? System::R : System::B; }

// A consecution when the text contains a turnstile, otherwise a bunch (a
// bare formula parses as a one-leaf bunch).
struct Entity {
  std::optional<Consecution> consecution;
  BunchPtr bunch;
};

Entity parse_entity(const std::string& text) {
  if (text.find("|-") != std::string::npos) return {parse_consecution(text), nullptr};
  return {std::nullopt, parse_bunch(text)};
}

void print_depth_entries(const DepthAnnotation& ann, const char* prefix) {
  for (const DepthEntry& e : ann.entries)
    std::cout << prefix << render_path(e.path) << "  " << e.depth << "  " << render(e.node)
              << "\n";
}

void print_rseq_entries(const RseqAnnotation& ann, const char* prefix) {
  for (const RseqEntry& e : ann.entries)
    std::cout << prefix << render_path(e.path) << "  " << render_seq(e.seq) << "  "
              << render(e.node) << "\n";
}

int parse_depth_level(const std::string& text) {
  std::size_t used = 0;
  int n = 0;
  try {
    n = std::stoi(text, &used);
  } catch (const std::exception&) {
    throw ParseError(0, "expected an integer depth for --at");
  }
  if (used != text.size()) throw ParseError(used, "expected an integer depth for --at");
  return n;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bunched consecutions: annotation, substitution, and proof checking"};
  app.require_subcommand(1);
  int rc = 0;

  std::string parse_text;
  auto* cmd_parse = app.add_subcommand("parse", "Parse text and print its canonical form");
  cmd_parse->add_option("text", parse_text, "formula, bunch, or consecution")->required();
  cmd_parse->callback([&] {
    Entity e = parse_entity(parse_text);
    std::cout << (e.consecution ? render(*e.consecution) : render(e.bunch)) << "\n";
  });

  std::string ann_mode, ann_text;
  auto* cmd_ann = app.add_subcommand("annotate", "Print per-node annotations");
  cmd_ann->add_option("--mode", ann_mode, "depth or rseq")
      ->required()
      ->check(CLI::IsMember({"depth", "rseq"}));
  cmd_ann->add_option("text", ann_text, "formula, bunch, or consecution")->required();
  cmd_ann->callback([&] {
    Entity e = parse_entity(ann_text);
    if (ann_mode == "depth") {
      if (e.consecution) {
        print_depth_entries(depth_annotations(e.consecution->antecedent), "ant  ");
        print_depth_entries(depth_annotations(e.consecution->succedent), "suc  ");
      } else {
        print_depth_entries(depth_annotations(e.bunch), "");
      }
    } else {
      if (e.consecution) {
        print_rseq_entries(rseq_annotations(e.consecution->antecedent), "ant  ");
        print_rseq_entries(rseq_annotations(e.consecution->succedent), "suc  ");
      } else {
        print_rseq_entries(rseq_annotations(e.bunch), "");
      }
    }
  });

  std::string reduce_text;
  auto* cmd_red = app.add_subcommand("reduce", "Reduce a sequence to normal form");
  cmd_red->add_option("sequence", reduce_text, "word over l r L P n, or e")->required();
  cmd_red->callback([&] { std::cout << render_seq(red(parse_seq(reduce_text))) << "\n"; });

  std::string sub_mode, sub_at, sub_file, sub_text;
  auto* cmd_sub = app.add_subcommand("subst", "Apply a substitution from a file");
  cmd_sub->add_option("--mode", sub_mode, "depth or rseq")
      ->required()
      ->check(CLI::IsMember({"depth", "rseq"}));
  cmd_sub->add_option("--at", sub_at, "depth (integer) or sequence to apply at")->required();
  cmd_sub->add_option("--sub", sub_file, "substitution file")->required();
  cmd_sub->add_option("text", sub_text, "formula, bunch, or consecution")->required();
  cmd_sub->callback([&] {
    Entity e = parse_entity(sub_text);
    if (sub_mode == "depth") {
      DepthSubstitution d = parse_depth_substitution(read_file(sub_file));
      int n = parse_depth_level(sub_at);
      std::cout << (e.consecution ? render(apply_depth(d, n, *e.consecution))
                                  : render(apply_depth(d, n, e.bunch)))
                << "\n";
    } else {
      RseqSubstitution s = parse_rseq_substitution(read_file(sub_file));
      RSeq x = red(parse_seq(sub_at));
      std::cout << (e.consecution ? render(apply_rseq(s, x, *e.consecution))
                                  : render(apply_rseq(s, x, e.bunch)))
                << "\n";
    }
  });

  std::string chk_system = "B", chk_file;
  bool chk_bidi = false, chk_no_neg_i = false;
  auto* cmd_chk = app.add_subcommand("check", "Check a derivation file");
  cmd_chk->add_option("--system", chk_system, "proof system (default B)")
      ->check(CLI::IsMember({"B", "R"}));
  cmd_chk->add_flag("--structural-bidirectional", chk_bidi,
                    "accept structural rules in both directions");
  cmd_chk->add_flag("--no-neg-i", chk_no_neg_i, "system R only: drop the negI rule");
  cmd_chk->add_option("file", chk_file, "derivation file")->required();
  cmd_chk->callback([&] {
    CheckOptions opts;
    opts.structural_bidirectional = chk_bidi;
    opts.retain_neg_i = !chk_no_neg_i;
    ProofTreePtr t = parse_derivation(read_file(chk_file));
    CheckReport rep = check(t, system_from(chk_system), opts);
    if (rep.valid) {
      std::cout << "valid\n";
      for (const Consecution& c : rep.open_leaves) std::cout << "open: " << render(c) << "\n";
      rc = 0;
    } else {
      std::cout << "invalid\n";
      for (const CheckFailure& f : rep.failures)
        std::cout << render_path(f.tree_path) << ": " << f.reason << "\n";
      rc = 1;
    }
  });

  std::string share_mode, share_text;
  auto* cmd_share = app.add_subcommand("share", "Report a shared variable of a consecution");
  cmd_share->add_option("--mode", share_mode, "plain, depth, or rseq")
      ->required()
      ->check(CLI::IsMember({"plain", "depth", "rseq"}));
  cmd_share->add_option("consecution", share_text, "consecution text")->required();
  cmd_share->callback([&] {
    Consecution c = parse_consecution(share_text);
    ShareMode mode = share_mode == "plain"  ? ShareMode::Plain
                     : share_mode == "depth" ? ShareMode::Depth
                                             : ShareMode::Rseq;
    std::optional<ShareWitness> w = sharing_report(c, mode);
    if (!w) {
      std::cout << "none\n";
      rc = 1;
      return;
    }
    std::cout << render_atom(w->atom);
    if (w->depth) std::cout << " @ " << *w->depth;
    if (w->seq) std::cout << " @ " << render_seq(*w->seq);
    std::cout << "\n";
  });

  std::string tr_direction, tr_text;
  auto* cmd_tr = app.add_subcommand("translate", "Flatten a bunch or translate away fusion");
  cmd_tr->add_option("direction", tr_direction, "cf (flatten) or tau (fusion-free)")
      ->required()
      ->check(CLI::IsMember({"cf", "tau"}));
  cmd_tr->add_option("text", tr_text, "bunch or formula")->required();
  cmd_tr->callback([&] {
    BunchPtr b = parse_bunch(tr_text);
    std::cout << render(tr_direction == "cf" ? cf(b) : tau(b)) << "\n";
  });

  std::uint64_t gen_seed = 1;
  int gen_count = 1, gen_steps = 8;
  std::string gen_system = "B", gen_out = ".";
  auto* cmd_gen = app.add_subcommand("gen", "Generate random valid derivations");
  cmd_gen->add_option("--count", gen_count, "number of derivations (default 1)")
      ->check(CLI::PositiveNumber);
  cmd_gen->add_option("--steps", gen_steps, "rule nodes per derivation (default 8)")
      ->check(CLI::PositiveNumber);
  cmd_gen->add_option("--seed", gen_seed, "base seed (file i uses seed + i)");
  cmd_gen->add_option("--system", gen_system, "proof system (default B)")
      ->check(CLI::IsMember({"B", "R"}));
  cmd_gen->add_option("--out", gen_out, "output directory (default .)");
  cmd_gen->callback([&] {
    GenConfig cfg;
    cfg.system = system_from(gen_system);
    cfg.max_rule_nodes = gen_steps;
    std::filesystem::create_directories(gen_out);
    for (int i = 0; i < gen_count; ++i) {
      cfg.seed = gen_seed + static_cast<std::uint64_t>(i);
      ProofTreePtr t = gen_derivation(cfg);
      char name[32];
      std::snprintf(name, sizeof name, "derivation_%04d.deriv", i + 1);
      std::filesystem::path path = std::filesystem::path(gen_out) / name;
      std::ofstream out(path, std::ios::binary);
      if (!out) throw std::runtime_error("cannot write " + path.string());
      out << serialize_derivation(t);
      std::cout << path.string() << "\n";
    }
  });

  auto* cmd_self = app.add_subcommand("selftest", "Run the built-in acceptance suite");
  cmd_self->callback(
      [&] { rc = acceptance::all_passed(acceptance::run_all(&std::cout)) ? 0 : 1; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return rc;
}
