#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pstr/graph.hpp"
#include "pstr/labeling.hpp"
#include "pstr/solver.hpp"

namespace pstr {

/// Exact Cover by 3-Sets: elements 1..3q, clauses are triples of them.
struct X3CInstance {
  int q = 0;
  std::vector<std::array<int, 3>> clauses;
};

/// Throws std::invalid_argument on q < 1, no clauses, a repeated element
/// inside a triple or an element outside 1..3q.
void check_instance(const X3CInstance& inst);

/// "q t" header, then t lines of three elements; '#' starts a comment.
X3CInstance parse_x3c(std::string_view text);
std::string write_x3c(const X3CInstance& inst);

/// Clause indices (ascending) of an exact cover, or nullopt. Backtracks on
/// the smallest uncovered element, trying clauses in input order.
std::optional<std::vector<int>> x3c_has_exact_cover(const X3CInstance& inst);

enum class ReductionVariant { bipartite, chordal };

std::optional<ReductionVariant> variant_from_name(std::string_view name);
std::string_view variant_name(ReductionVariant v);

struct VertexRole {
  enum class Kind { element, clause, hub, pendant } kind;
  int index;  // element i (0-based) or clause j (0-based)
  int leaf;   // pendant number 0..2p-2, otherwise -1
  friend bool operator==(const VertexRole&, const VertexRole&) = default;
};

std::string role_name(const VertexRole& role);

/**
 * Gadget graph of an X3C instance.
 *
 * Vertex layout: elements 0..3q-1, then one block per clause j in order:
 * the clause vertex, its hub z_j, then 2p-1 pendants on z_j. Elements join
 * the clauses containing them. The chordal variant also makes the clause
 * vertices a clique. An exact cover exists iff the value is at most
 * threshold = 2q + 3t.
 */
struct ReductionResult {
  Graph graph;
  std::vector<VertexRole> roles;
  std::int64_t threshold = 0;
  ReductionVariant variant = ReductionVariant::bipartite;
  int p = 0;
  X3CInstance instance;

  Vertex clause_vertex(int j) const;
  Vertex hub_vertex(int j) const;
};

/// Throws std::invalid_argument for p < 3 or an invalid instance.
ReductionResult build_reduction(const X3CInstance& inst, int p, ReductionVariant variant);

/// 2 on cover clauses, 3 on every hub, 0 elsewhere; weight 2q + 3t. Throws
/// std::invalid_argument when `cover` is not an exact cover.
LabelFunction proof_labeling(const ReductionResult& res, const std::vector<int>& cover);

struct EquivalenceReport {
  bool has_cover = false;
  std::optional<std::vector<int>> cover;
  std::int64_t value = 0;
  std::int64_t threshold = 0;
  int vertices = 0;
  /// has_cover == (value <= threshold).
  bool equivalent = false;
};

inline constexpr int kMaxVerifiedReductionOrder = 18;

/// Solves the gadget graph exactly and compares with the X3C answer. Throws
/// std::invalid_argument when the graph exceeds 18 vertices.
EquivalenceReport verify_reduction_equivalence(const X3CInstance& inst, int p,
                                               ReductionVariant variant,
                                               const SolverConfig& cfg = {});

}  // namespace pstr
