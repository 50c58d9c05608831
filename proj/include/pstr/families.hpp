#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "pstr/graph.hpp"

namespace pstr {

struct FamilyValue {
  std::string family;
  std::vector<int> parameters;
  int p = 0;
  std::int64_t value = 0;
  bool applicable = false;
  std::string reason;
};

/// K_{r,s} with 2 <= r <= s, s >= 4, 3 <= p <= s - 1:
/// 2 + ceil(s/p) for r = 2, ceil((r+p-1)/p) + ceil((s+p-1)/p) otherwise.
FamilyValue value_complete_bipartite(int r, int s, int p);

/// Double star T_{r,s} with 1 <= r <= s, s + 1 >= 4, 3 <= p <= s:
/// 2 + ceil(r/p) + ceil(s/p). Not applicable for r = 1 when p does not divide
/// s; there the value is 2 + ceil((s+1)/p).
FamilyValue value_bistar(int r, int s, int p);

/// Graphs with a universal vertex, 3 <= p <= n - 2: ceil((n+p-1)/p), which
/// equals n - floor((p-1)(n-1)/p).
FamilyValue value_universal(int n, int p);

enum class SmallValue { three, four, other, not_applicable };

struct SmallValueClass {
  SmallValue kind = SmallValue::other;
  /// For `four`: 1 universal vertex, 2 two twin hubs, 3 one vertex of degree
  /// n-2, 4 two vertices with at most p private zero neighbours each.
  int four_case = 0;
  std::string reason;
};

/// Recognises graphs whose value is 3 or 4 from structure alone. Requires
/// D >= 4 and 3 <= p <= D - 1; otherwise `not_applicable`.
SmallValueClass classify_small_value(const Graph& g, int p);

std::string_view small_value_name(SmallValue v);

}  // namespace pstr
