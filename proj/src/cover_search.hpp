#pragma once

// Bitmask weighted set cover shared by min_weight_cover and the exact solver.

#include <bit>
#include <cmath>
#include <cstdint>
#include <vector>

namespace pstr::detail {

using Mask = std::uint64_t;

inline Mask bit(int i) { return Mask{1} << i; }

struct MaskCover {
  Mask elements = 0;               // element ids as bits
  std::vector<Mask> covers;        // per candidate, subset of elements
  std::vector<int> costs;          // per candidate, >= 0
};

struct MaskCoverResult {
  bool found = false;
  int cost = 0;
  Mask chosen = 0;  // candidate indices
};

class CoverSearch {
 public:
  explicit CoverSearch(const MaskCover& problem) : problem_(problem) {
    for (int e = 0; e < 64; ++e) {
      if (!(problem.elements & bit(e))) continue;
      Mask m = 0;
      for (std::size_t c = 0; c < problem.covers.size(); ++c) {
        if (problem.covers[c] & bit(e)) m |= bit(static_cast<int>(c));
      }
      coverers_[e] = m;
    }
  }

  /// Cheapest cover costing strictly less than `budget`.
  MaskCoverResult run(int budget) {
    best_ = budget;
    result_ = {};
    if (budget <= 0) return result_;
    const int k = static_cast<int>(problem_.covers.size());
    const Mask all = k == 64 ? ~Mask{0} : bit(k) - 1;
    dfs(problem_.elements, all, 0, 0);
    return result_;
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  void dfs(Mask uncovered, Mask allowed, int cost, Mask chosen) {
    ++nodes_;
    if (uncovered == 0) {
      if (cost < best_) {
        best_ = cost;
        result_ = {true, cost, chosen};
      }
      return;
    }
    // Each uncovered element pays at least the cheapest per-element price
    // among its remaining coverers; the prices sum to a valid lower bound.
    double ratio[64];
    for (Mask a = allowed; a; a &= a - 1) {
      const int c = std::countr_zero(a);
      const int hits = std::popcount(problem_.covers[c] & uncovered);
      ratio[c] = hits ? static_cast<double>(problem_.costs[c]) / hits : 0.0;
    }
    double bound = 0.0;
    int branch_elem = -1;
    int branch_count = 65;
    for (Mask u = uncovered; u; u &= u - 1) {
      const int e = std::countr_zero(u);
      const Mask options = coverers_[e] & allowed;
      const int count = std::popcount(options);
      if (count == 0) return;
      if (count < branch_count) {
        branch_count = count;
        branch_elem = e;
      }
      double cheapest = 1e300;
      for (Mask o = options; o; o &= o - 1) {
        const double r = ratio[std::countr_zero(o)];
        if (r < cheapest) cheapest = r;
      }
      bound += cheapest;
    }
    if (cost + static_cast<int>(std::ceil(bound - 1e-9)) >= best_) return;

    Mask options = coverers_[branch_elem] & allowed;
    for (Mask o = options; o; o &= o - 1) {
      const int c = std::countr_zero(o);
      if (cost + problem_.costs[c] < best_) {
        dfs(uncovered & ~problem_.covers[c], allowed & ~bit(c), cost + problem_.costs[c],
            chosen | bit(c));
      }
      // Later siblings never reuse c: the subtrees stay disjoint.
      allowed &= ~bit(c);
    }
  }

  const MaskCover& problem_;
  Mask coverers_[64] = {};
  int best_ = 0;
  MaskCoverResult result_;
  std::uint64_t nodes_ = 0;
};

}  // namespace pstr::detail
