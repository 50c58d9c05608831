#include <iostream>

#include "pstr/acceptance.hpp"

int main() {
  const auto outcomes = pstr::acceptance::run_all([](const pstr::acceptance::Outcome& o) {
    std::cout << pstr::acceptance::format_line(o) << std::endl;
  });
  int failed = 0;
  int unexplained = 0;
  for (const auto& o : outcomes) {
    failed += o.passed ? 0 : 1;
    unexplained += o.passed || o.known_defect ? 0 : 1;
  }
  std::cout << (outcomes.size() - failed) << "/" << outcomes.size() << " criteria passed";
  if (failed) {
    std::cout << "; " << failed - unexplained
              << " red only on the documented counterexamples, " << unexplained << " unexplained";
  }
  std::cout << '\n';
  // The ctest entry guards against regressions: anything red must be red for
  // exactly the analysed reason. `pstr bench --suite paper` stays strict.
  return unexplained == 0 ? 0 : 1;
}
