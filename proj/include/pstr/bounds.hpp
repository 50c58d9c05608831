#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pstr/graph.hpp"
#include "pstr/solver.hpp"

namespace pstr {

enum class BoundDirection { lower, upper };

struct BoundEntry {
  std::string name;
  BoundDirection direction = BoundDirection::lower;
  /// Exact value of the expression (only the probabilistic bound is not integral).
  double value = 0.0;
  /// Integer consequence: ceil(value) for lower bounds, floor(value) for upper.
  std::int64_t integer_value = 0;
  bool applicable = false;
  /// Why the entry applies or not.
  std::string reason;
  /// Short statement of the argument behind the bound.
  std::string basis;
};

struct BoundsReport {
  std::vector<BoundEntry> entries;
  /// Tightest integer bounds among applicable entries.
  std::optional<std::int64_t> best_lower;
  std::optional<std::int64_t> best_upper;
  /// Filled when the report was built with the solver.
  std::optional<SolveResult> exact;
};

/// n - D + ceil(D/p): a maximum-degree vertex defends its whole neighbourhood.
std::int64_t bound_up1(int n, int max_degree, int p);

/// n - 2, valid whenever D >= 4 and 3 <= p <= D - 1.
std::int64_t bound_nminus2(int n);

/// Upper bound for r-regular graphs of girth >= 5 with r >= p + 1:
/// n - r^2 + (ceil((r-1)/p) + 1) r. nullopt when the hypotheses fail.
std::optional<std::int64_t> bound_regular(const Graph& g, int p);

/// ceil((n + p - 1) / p), a lower bound for connected graphs.
std::int64_t bound_lowbound(int n, int p);

/// n - floor((p - 1) b0 / p): lower bound from the zero-set size of an
/// optimal labelling.
std::int64_t lemma_lowB0(int n, int p, int b0);

/// ceil(p (n - gamma) / (p - 1)), clipped at 0: the least zero-set size an
/// optimal labelling can have. Requires p >= 2.
std::int64_t corollary_B0_min(int n, int p, std::int64_t gamma);

struct ProbabilisticBound {
  double value = 0.0;
  /// Inclusion probability that minimises the expected weight.
  double xi = 0.0;
};

/// Expected weight of the random construction at its optimal inclusion
/// probability; nullopt unless ceil(D/p) < delta.
std::optional<ProbabilisticBound> bound_probabilistic(const Graph& g, int p);

/// (gamma_R, (ceil(D/p) + 1) gamma).
std::pair<std::int64_t, std::int64_t> sandwich(const Graph& g, int p, std::int64_t gamma,
                                               std::int64_t gamma_r);

/// Every bound with its applicability verdict. With the solver, also the
/// sandwich entries and the zero-set lower bound of the optimal witness.
BoundsReport bounds_report(const Graph& g, int p, bool with_solver,
                           const SolverConfig& cfg = {});

std::string_view direction_name(BoundDirection d);

}  // namespace pstr
