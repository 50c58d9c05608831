#include "pstr/families.hpp"

#include <stdexcept>

#include "pstr/labeling.hpp"

namespace pstr {
namespace {

FamilyValue make(std::string family, std::vector<int> params, int p) {
  FamilyValue v;
  v.family = std::move(family);
  v.parameters = std::move(params);
  v.p = p;
  return v;
}

FamilyValue rejected(FamilyValue v, std::string why) {
  v.applicable = false;
  v.reason = std::move(why);
  return v;
}

}  // namespace

FamilyValue value_complete_bipartite(int r, int s, int p) {
  FamilyValue v = make("kbip", {r, s}, p);
  if (!(r >= 2 && r <= s)) return rejected(std::move(v), "needs 2 <= r <= s");
  if (s < 4) return rejected(std::move(v), "needs s >= 4");
  if (!(p >= 3 && p <= s - 1)) return rejected(std::move(v), "needs 3 <= p <= s-1");
  v.applicable = true;
  v.reason = "hypotheses hold";
  v.value = r == 2 ? 2 + ceil_div(s, p) : ceil_div(r + p - 1, p) + ceil_div(s + p - 1, p);
  return v;
}

FamilyValue value_bistar(int r, int s, int p) {
  FamilyValue v = make("bistar", {r, s}, p);
  if (!(r >= 1 && r <= s)) return rejected(std::move(v), "needs 1 <= r <= s");
  if (s + 1 < 4) return rejected(std::move(v), "needs max degree s+1 >= 4");
  if (!(p >= 3 && p <= s)) return rejected(std::move(v), "needs 3 <= p <= s");
  if (r == 1 && s % p != 0) {
    // The lone leaf's centre can take 0 and the leaf 1, giving 2 + ceil((s+1)/p).
    return rejected(std::move(v), "closed form overestimates for r=1 unless p divides s");
  }
  v.applicable = true;
  v.reason = "hypotheses hold";
  v.value = 2 + ceil_div(r, p) + ceil_div(s, p);
  return v;
}

FamilyValue value_universal(int n, int p) {
  FamilyValue v = make("universal", {n}, p);
  if (!(p >= 3 && p <= n - 2)) return rejected(std::move(v), "needs 3 <= p <= n-2");
  const std::int64_t by_ceiling = ceil_div(n + p - 1, p);
  const std::int64_t by_floor = n - static_cast<std::int64_t>(p - 1) * (n - 1) / p;
  if (by_ceiling != by_floor) throw std::logic_error("universal-vertex closed forms disagree");
  v.applicable = true;
  v.reason = "hypotheses hold";
  v.value = by_ceiling;
  return v;
}

std::string_view small_value_name(SmallValue v) {
  switch (v) {
    case SmallValue::three: return "three";
    case SmallValue::four: return "four";
    case SmallValue::other: return "other";
    case SmallValue::not_applicable: return "not_applicable";
  }
  return "unknown";
}

SmallValueClass classify_small_value(const Graph& g, int p) {
  const int n = g.order();
  const int delta_max = g.max_degree();
  SmallValueClass out;
  if (delta_max < 4 || p < 3 || p > delta_max - 1) {
    out.kind = SmallValue::not_applicable;
    out.reason = "needs max degree >= 4 and 3 <= p <= max degree - 1";
    return out;
  }
  if (delta_max == n - 1 && n >= p + 2 && n <= 2 * p + 1) {
    out.kind = SmallValue::three;
    out.reason = "universal vertex, p+2 <= n <= 2p+1";
    return out;
  }
  auto four = [&](int which, std::string why) {
    out.kind = SmallValue::four;
    out.four_case = which;
    out.reason = std::move(why);
    return out;
  };
  if (delta_max == n - 1 && n >= 2 * p + 2 && n <= 3 * p + 1) {
    return four(1, "universal vertex, 2p+2 <= n <= 3p+1");
  }
  if (delta_max == n - 2) {
    if (n >= 4 && n <= 2 * p + 2) {
      // Two non-adjacent hubs, each adjacent to every other vertex.
      int hubs = 0;
      for (Vertex v = 0; v < n; ++v) hubs += g.degree(v) == n - 2 ? 1 : 0;
      for (Vertex u = 0; u < n && hubs >= 2; ++u) {
        if (g.degree(u) != n - 2) continue;
        for (Vertex w = u + 1; w < n; ++w) {
          if (g.degree(w) == n - 2 && !g.adjacent(u, w)) {
            return four(2, "two hubs adjacent to all other vertices, 4 <= n <= 2p+2");
          }
        }
      }
    }
    if (n >= p + 3 && n <= 2 * p + 2) {
      return four(3, "a vertex of degree n-2, p+3 <= n <= 2p+2");
    }
  }
  // Two defenders labelled 2: each has at most p neighbours besides the other,
  // and together they dominate the rest.
  for (Vertex u = 0; u < n; ++u) {
    const int du = g.degree(u);
    for (Vertex w = u + 1; w < n; ++w) {
      const int link = g.adjacent(u, w) ? 1 : 0;
      if (du - link > p || g.degree(w) - link > p) continue;
      bool dominates = true;
      for (Vertex x = 0; x < n && dominates; ++x) {
        if (x != u && x != w) dominates = g.adjacent(x, u) || g.adjacent(x, w);
      }
      if (dominates) return four(4, "two vertices with at most p other neighbours dominate the rest");
    }
  }
  out.kind = SmallValue::other;
  out.reason = "no structure forcing value 3 or 4";
  return out;
}

}  // namespace pstr
