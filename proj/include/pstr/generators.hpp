#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "pstr/graph.hpp"

namespace pstr {

namespace family {
struct Path { int n; };
struct Cycle { int n; };
/// K_{1,n-1}: `n` counts the centre.
struct Star { int n; };
struct CompleteBipartite { int r; int s; };
/// Double star T_{r,s}: two adjacent centres with r and s pendant leaves.
struct DoubleStar { int r; int s; };
struct Edgeless { int n; };
struct Robertson {};
/// Two adjacent hubs, each with three degree-2 midpoints carrying one leaf.
struct Fig3Spider {};
struct RandomGnm { int n; int m; std::uint64_t seed; };
struct Join;
}  // namespace family

using FamilySpec = std::variant<family::Path, family::Cycle, family::Star,
                                family::CompleteBipartite, family::DoubleStar,
                                family::Edgeless, family::Robertson, family::Fig3Spider,
                                family::RandomGnm, family::Join>;

namespace family {
struct Join {
  std::shared_ptr<const FamilySpec> a;
  std::shared_ptr<const FamilySpec> b;
};
}  // namespace family

FamilySpec make_join(FamilySpec a, FamilySpec b);

/// Throws std::invalid_argument for parameters below 1 (or m too large).
Graph generate(const FamilySpec& spec);

/**
 * Keyword form used by the CLI: "robertson", "fig3_spider", "path:5",
 * "cycle:6", "star:11", "kbip:3,4", "bistar:3,3", "edgeless:3",
 * "gnm:n,m,seed". Returns nullopt when `text` is not a keyword.
 */
std::optional<FamilySpec> parse_family_keyword(std::string_view text);

std::string describe(const FamilySpec& spec);

/// The (4,5)-cage on 19 vertices. Validated on first use; a corrupted
/// table throws std::logic_error.
const Graph& robertson_graph();

/// G(n, m) uniform over edge sets; identical output for a fixed seed.
Graph random_gnm(int n, int m, std::uint64_t seed);

}  // namespace pstr
