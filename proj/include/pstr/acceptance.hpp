#pragma once

#include <string>
#include <utility>
#include <vector>

#include "pstr/reduction.hpp"

namespace pstr::acceptance {

struct Outcome {
  int id = 0;
  std::string title;
  bool passed = false;
  /// Failed, but only on mismatches that the documented counterexample
  /// analysis predicts case by case.
  bool known_defect = false;
  std::string detail;
  double seconds = 0.0;
};

/// Every gadget instance used for the reduction check, paired with the p
/// values whose graphs stay within the exact-verification limit.
struct CorpusItem {
  X3CInstance instance;
  std::vector<int> ps;
};

std::vector<CorpusItem> reduction_corpus();

/// q = 2 with five clauses; its exact cover uses clauses 1 and 4 (0-based).
X3CInstance worked_x3c_example();

/// Runs criteria 1..11 in order. `on_done` is called after each one.
std::vector<Outcome> run_all(void (*on_done)(const Outcome&) = nullptr);

/// One line per criterion: "[PASS] 3 title (detail, 1.23 s)".
std::string format_line(const Outcome& o);

}  // namespace pstr::acceptance
