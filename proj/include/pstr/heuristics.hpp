#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "pstr/graph.hpp"
#include "pstr/labeling.hpp"

namespace pstr {

struct TrialStats {
  double xi = 0.0;
  int trials = 0;
  std::vector<std::int64_t> weights;
  LabelFunction best;
  double mean_weight = 0.0;
  /// Standard error of the mean weight.
  double std_error = 0.0;
  std::uint64_t seed = 0;
};

/// Labelling of one trial: each vertex joins the defender set A with
/// probability xi; A gets ceil(D/p)+1, the rest of N(A) gets 0 and the
/// vertices outside N[A] get 1. Depends only on (seed, trial).
LabelFunction random_trial(const Graph& g, int p, double xi, std::uint64_t seed, int trial);

/**
 * Runs `trials` independent random constructions. Without an override, xi is
 * the optimum of the probabilistic bound, which requires ceil(D/p) < delta;
 * otherwise std::invalid_argument. An override must lie in [0, 1].
 */
TrialStats randomized_construction(const Graph& g, int p, int trials, std::uint64_t seed,
                                   std::optional<double> xi_override = std::nullopt);

/**
 * Lowers every label >= 2 without touching B0. Vertices are visited in
 * ascending order; one that is the only adequate defender of some zero
 * neighbour drops to its threshold, any other drops to 1. The input must be
 * valid (std::invalid_argument otherwise); the output is valid, no heavier,
 * and a fixed point of tighten.
 */
LabelFunction tighten(const Graph& g, int p, const LabelFunction& f);

}  // namespace pstr
