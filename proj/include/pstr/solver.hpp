#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "pstr/graph.hpp"
#include "pstr/labeling.hpp"

namespace pstr {

/// Weighted set cover: every element needs one chosen candidate covering it.
struct CoverCandidate {
  Vertex vertex;
  std::vector<Vertex> covered;
  int cost;
};

struct CoverInstance {
  std::vector<Vertex> elements;
  std::vector<CoverCandidate> candidates;
};

struct CoverSolution {
  std::vector<Vertex> chosen;  // ascending candidate vertex ids
  int cost = 0;
};

/// For a fixed zero-set B0: elements are B0, candidates the vertices outside
/// B0 with a neighbour in it, each costing threshold(v) - 1.
CoverInstance make_cover_instance(const Graph& g, const VertexSet& zero_set, int p);

/**
 * Minimum-cost cover with cost strictly below `budget`, or nullopt. Branches
 * on the uncovered element with the fewest remaining coverers (lowest id on
 * ties) and tries its coverers in ascending vertex order, so the answer is
 * deterministic. Elements and candidates are limited to 64 each.
 */
std::optional<CoverSolution> min_weight_cover(const CoverInstance& inst, int budget);

enum class Algorithm { b0_enumeration, naive };

struct SolverConfig {
  int worker_count = 1;
  std::optional<std::chrono::duration<double>> time_limit;
  Algorithm algorithm = Algorithm::b0_enumeration;
};

struct SolveStats {
  std::uint64_t subsets_examined = 0;
  std::uint64_t pruned = 0;
  std::chrono::duration<double> elapsed{0};
};

struct SolveResult {
  std::int64_t value = 0;
  LabelFunction witness;
  bool optimal = false;
  SolveStats stats;
};

/**
 * gamma_StR^p(G) by zero-set enumeration.
 *
 * The empty zero-set (all ones, weight n) is the first candidate; then the
 * zero-sets B0 are visited by decreasing size, in lexicographic order within
 * a size. A set qualifies only if each member has a neighbour outside it;
 * its best completion costs (n - |B0|) + min_weight_cover. A whole size class
 * k is skipped once n - k + ceil(k/p) reaches the incumbent.
 *
 * The reported optimum is the first optimal (B0, cover) pair in that order,
 * so value and witness do not depend on worker_count. On timeout the best
 * incumbent is returned with optimal = false. Requires 1 <= n <= 64.
 */
SolveResult solve_exact(const Graph& g, int p, const SolverConfig& cfg = {});

/// Exhaustive search over all labellings of weight below the incumbent, each
/// checked with validate(). Independent of the zero-set decomposition; n <= 12.
SolveResult solve_naive(const Graph& g, int p);

/// Dispatches on cfg.algorithm.
SolveResult solve(const Graph& g, int p, const SolverConfig& cfg = {});

/// gamma(G); the witness labels the dominating set with 1.
SolveResult domination_number(const Graph& g);

/// gamma_R(G), solved as the p >= Delta regime where every defender needs 2.
SolveResult roman_domination_number(const Graph& g, const SolverConfig& cfg = {});

inline constexpr int kMaxExactOrder = 64;
inline constexpr int kMaxNaiveOrder = 12;

}  // namespace pstr
