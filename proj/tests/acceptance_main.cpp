// Standalone acceptance gate: prints one line per criterion and fails the
// process if any criterion fails.
#include <iostream>
#include <vector>

#include "bunched/acceptance.hpp"

int main() {
  std::vector<bunched::acceptance::Result> results = bunched::acceptance::run_all(&std::cout);
  bool ok = bunched::acceptance::all_passed(results);
  std::cout << (ok ? "all criteria passed" : "some criteria FAILED") << "\n";
  return ok ? 0 : 1;
}
