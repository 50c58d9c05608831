#include "pstr/heuristics.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "pstr/bounds.hpp"

namespace pstr {

LabelFunction random_trial(const Graph& g, int p, double xi, std::uint64_t seed, int trial) {
  const int n = g.order();
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial)};
  std::mt19937_64 rng(seq);
  std::bernoulli_distribution pick(xi);

  std::vector<bool> in_a(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) in_a[v] = pick(rng);

  const int top = max_label(g.max_degree(), p);
  std::vector<int> labels(static_cast<std::size_t>(n), 1);
  for (Vertex v = 0; v < n; ++v) {
    if (in_a[v]) {
      labels[v] = top;
      continue;
    }
    for (Vertex w : g.neighbors(v)) {
      if (in_a[w]) {
        labels[v] = 0;
        break;
      }
    }
  }
  return LabelFunction(std::move(labels));
}

TrialStats randomized_construction(const Graph& g, int p, int trials, std::uint64_t seed,
                                   std::optional<double> xi_override) {
  if (p < 1) throw std::invalid_argument("p must be >= 1");
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  TrialStats stats;
  if (xi_override) {
    if (!(*xi_override >= 0.0 && *xi_override <= 1.0)) {
      throw std::invalid_argument("xi must lie in [0, 1]");
    }
    stats.xi = *xi_override;
  } else {
    const auto pb = bound_probabilistic(g, p);
    if (!pb) {
      throw std::invalid_argument(
          "optimal xi undefined: needs ceil(D/p) < min degree (pass an explicit xi)");
    }
    stats.xi = pb->xi;
  }
  stats.trials = trials;
  stats.seed = seed;
  stats.weights.reserve(static_cast<std::size_t>(trials));

  double sum = 0.0;
  for (int t = 0; t < trials; ++t) {
    LabelFunction f = random_trial(g, p, stats.xi, seed, t);
    const std::int64_t w = f.weight();
    stats.weights.push_back(w);
    sum += static_cast<double>(w);
    if (t == 0 || w < stats.best.weight()) stats.best = std::move(f);
  }
  stats.mean_weight = sum / trials;
  if (trials > 1) {
    double ss = 0.0;
    for (auto w : stats.weights) {
      const double d = static_cast<double>(w) - stats.mean_weight;
      ss += d * d;
    }
    stats.std_error = std::sqrt(ss / (trials - 1)) / std::sqrt(static_cast<double>(trials));
  }
  return stats;
}

LabelFunction tighten(const Graph& g, int p, const LabelFunction& f) {
  if (!validate(g, p, f).valid) throw std::invalid_argument("tighten needs a valid labelling");
  const int n = g.order();
  const VertexSet zeros = f.zero_set();
  std::vector<int> thresholds(static_cast<std::size_t>(n), 0);
  for (Vertex v = 0; v < n; ++v) {
    if (!zeros.contains(v)) thresholds[v] = threshold(g, zeros, v, p);
  }
  std::vector<int> labels(f.labels().begin(), f.labels().end());
  auto adequate = [&](Vertex v) { return labels[v] > 0 && labels[v] >= thresholds[v]; };

  for (Vertex v = 0; v < n; ++v) {
    if (labels[v] < 2) continue;
    bool needed = false;
    if (adequate(v)) {
      for (Vertex u : g.neighbors(v)) {
        if (!zeros.contains(u)) continue;
        bool other = false;
        for (Vertex w : g.neighbors(u)) other = other || (w != v && adequate(w));
        if (!other) {
          needed = true;
          break;
        }
      }
    }
    labels[v] = needed ? thresholds[v] : 1;
  }
  return LabelFunction(std::move(labels));
}

}  // namespace pstr
