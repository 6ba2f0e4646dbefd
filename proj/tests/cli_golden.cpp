// End-to-end tests for the command line tool: spawns the real binary and
// compares stdout and exit codes against pinned expectations.
//
// usage: cli_golden <path-to-cli> <source-dir>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run(const std::string& cmd) {
  std::string full = cmd + " 2>/dev/null";
  FILE* pipe = popen(full.c_str(), "r");
  if (!pipe) {
    std::cerr << "popen failed for: " << cmd << "\n";
    std::exit(2);
  }
  std::string out;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

int failures = 0;

void expect(const std::string& label, bool ok, const std::string& extra) {
  if (ok) {
    std::cout << "ok   " << label << "\n";
    return;
  }
  ++failures;
  std::cout << "FAIL " << label << "  [" << extra << "]\n";
}

void expect_exact(const std::string& label, const RunResult& r, int code, const std::string& out) {
  expect(label, r.exit_code == code && r.out == out,
         "exit " + std::to_string(r.exit_code) + ", output \"" + r.out + "\"");
}

void expect_code(const std::string& label, const RunResult& r, int code) {
  expect(label, r.exit_code == code, "exit " + std::to_string(r.exit_code));
}

void expect_contains(const std::string& label, const RunResult& r, int code,
                     const std::string& needle) {
  expect(label, r.exit_code == code && r.out.find(needle) != std::string::npos,
         "exit " + std::to_string(r.exit_code) + ", output \"" + r.out + "\"");
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 3) {
    std::cerr << "usage: cli_golden <path-to-cli> <source-dir>\n";
    return 2;
  }
  std::string cli = std::string("\"") + argv[1] + "\"";
  std::string fix = std::string(argv[2]) + "/fixtures";

  expect_exact("reduce lLr", run(cli + " reduce lLr"), 0, "l\n");
  expect_exact("reduce e", run(cli + " reduce e"), 0, "e\n");
  expect_exact("reduce lr stays put", run(cli + " reduce lr"), 0, "lr\n");
  expect_exact("reduce nnn", run(cli + " reduce nnn"), 0, "n\n");
  expect_code("reduce rejects bad letter", run(cli + " reduce q"), 2);

  expect_exact("share rseq modus ponens", run(cli + " share --mode rseq '(p1 -> p1) ; p1 |- p1'"),
               0, "p1 @ e\n");
  expect_exact("share depth modus ponens",
               run(cli + " share --mode depth '(p1 -> p1) ; p1 |- p1'"), 0, "p1 @ 0\n");
  expect_exact("share plain modus ponens",
               run(cli + " share --mode plain '(p1 -> p1) ; p1 |- p1'"), 0, "p1\n");
  expect_exact("share reports absence", run(cli + " share --mode plain 'p1 |- p2'"), 1, "none\n");

  expect_exact("parse canonicalizes", run(cli + " parse '(p1->p2);p1|-p2'"), 0,
               "(p1 -> p2) ; p1 |- p2\n");
  expect_exact("parse aliases identifiers", run(cli + " parse 'q |- q'"), 0, "p17 |- p17\n");
  expect_code("parse rejects truncated input", run(cli + " parse 'p1 ->'"), 2);
  expect_code("parse requires parentheses", run(cli + " parse 'p1 -> p2 -> p3'"), 2);

  expect_exact("check fusion introduction",
               run(cli + " check --system B " + fix + "/fusI_example.deriv"), 0,
               "valid\nopen: p1 |- p2\nopen: p3 |- p4\n");
  expect_contains("check rejects mislabeled rule",
                  run(cli + " check --system B " + fix + "/orE_mislabeled.deriv"), 1, "arity");
  expect_exact("check R double negation fixture",
               run(cli + " check --system R " + fix + "/fusion_from_negimp.deriv"), 0, "valid\n");
  expect_code("strict R variant rejects it",
              run(cli + " check --system R --no-neg-i " + fix + "/fusion_from_negimp.deriv"), 1);
  expect_exact("check R converse fixture",
               run(cli + " check --system R " + fix + "/negimp_from_fusion.deriv"), 0, "valid\n");
  expect_contains("system B rejects R rules",
                  run(cli + " check --system B " + fix + "/fusion_from_negimp.deriv"), 1,
                  "not a rule of system B");
  expect_code("check names missing files", run(cli + " check --system B /no/such/file.deriv"), 2);

  expect_exact("translate tau fusion", run(cli + " translate tau 'p1 * p2'"), 0,
               "~(p1 -> ~p2)\n");
  expect_exact("translate cf comma", run(cli + " translate cf 'p1 , p2'"), 0, "p1 & p2\n");
  expect_exact("translate cf mixed", run(cli + " translate cf '(p1 , p2) ; p3'"), 0,
               "(p1 & p2) * p3\n");
  expect_exact("translate tau is identity without fusion", run(cli + " translate tau 'p1 -> p2'"),
               0, "p1 -> p2\n");

  expect_exact("subst rseq at root",
               run(cli + " subst --mode rseq --at e --sub " + fix +
                   "/sample.rsub '(p1 -> p1) ; p1 |- p1'"),
               0, "((p1 * p1) -> p2) ; (p1 * p1) |- p2\n");
  expect_exact("subst depth at zero",
               run(cli + " subst --mode depth --at 0 --sub " + fix +
                   "/sample.dsub 'p1 , p2 |- p1 & p2'"),
               0, "(p2 -> p2) , p2 |- (p2 -> p2) & p2\n");
  expect_code("subst names missing files",
              run(cli + " subst --mode depth --at 0 --sub /no/such.dsub 'p1'"), 2);

  expect_exact("annotate depth fusion", run(cli + " annotate --mode depth 'p1 * p2'"), 0,
               "e  0  p1 * p2\n0  0  p1 * p2\n0.0  -1  p1\n0.1  0  p2\n");

  std::filesystem::path tmp_a = "cli_golden_tmp_a";
  std::filesystem::path tmp_b = "cli_golden_tmp_b";
  std::filesystem::remove_all(tmp_a);
  std::filesystem::remove_all(tmp_b);
  RunResult gen_a = run(cli + " gen --count 2 --steps 6 --seed 11 --system B --out " +
                        tmp_a.string());
  RunResult gen_b = run(cli + " gen --count 2 --steps 6 --seed 11 --system B --out " +
                        tmp_b.string());
  expect_code("gen succeeds", gen_a, 0);
  bool same = true;
  for (const char* name : {"derivation_0001.deriv", "derivation_0002.deriv"}) {
    std::string a = slurp(tmp_a / name), b = slurp(tmp_b / name);
    same = same && !a.empty() && a == b;
  }
  expect("gen is deterministic", same && gen_b.exit_code == 0, "regenerated files differ");
  expect_code("generated derivations check",
              run(cli + " check --system B " + (tmp_a / "derivation_0001.deriv").string()), 0);

  RunResult gen_r = run(cli + " gen --count 1 --steps 8 --seed 3 --system R --out " +
                        tmp_a.string());
  expect_code("gen covers system R", gen_r, 0);
  expect_code("generated R derivation checks",
              run(cli + " check --system R " + (tmp_a / "derivation_0001.deriv").string()), 0);
  std::filesystem::remove_all(tmp_a);
  std::filesystem::remove_all(tmp_b);

  expect_code("usage error exits 2", run(cli + " annotate --mode bogus 'p1'"), 2);
  expect_code("missing subcommand exits 2", run(cli), 2);

  if (failures) {
    std::cout << failures << " case(s) failed\n";
    return 1;
  }
  std::cout << "all cases passed\n";
  return 0;
}
