// Acceptance battery: one line per criterion, details on failure, exit code
// reflects the overall verdict.
#include <iostream>

#include "deza/suite.hpp"

int main() {
  using namespace deza::suite;
  SuiteResult res = run_suite();
  std::cout << "----------------------------------------------------------\n";
  for (const auto& c : res.criteria) {
    std::cout << "criterion " << c.id << " " << (c.pass ? "PASS" : "FAIL") << ": " << c.name
              << "\n";
    if (!c.pass) std::cout << "  detail: " << c.detail << "\n";
  }
  std::cout << (res.all_pass ? "ALL CRITERIA PASS" : "SOME CRITERIA FAIL") << "\n";
  return res.all_pass ? 0 : 1;
}
