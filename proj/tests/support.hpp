#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "pstr/generators.hpp"
#include "pstr/graph.hpp"

namespace testing {

inline std::string data_path(const std::string& name) {
  return std::string(PSTR_DATA_DIR) + "/" + name;
}

inline pstr::Graph graph_of(int n, std::vector<pstr::Edge> edges) {
  return pstr::Graph::from_edges(n, edges);
}

// Seeded stream of G(n, m) graphs with n drawn from [lo, hi].
class RandomGraphs {
 public:
  RandomGraphs(std::uint64_t seed, int lo, int hi) : rng_(seed), lo_(lo), hi_(hi) {}

  pstr::Graph next() {
    const int n = std::uniform_int_distribution<int>(lo_, hi_)(rng_);
    const int m = std::uniform_int_distribution<int>(0, n * (n - 1) / 2)(rng_);
    return pstr::random_gnm(n, m, rng_());
  }

 private:
  std::mt19937_64 rng_;
  int lo_;
  int hi_;
};

}  // namespace testing
