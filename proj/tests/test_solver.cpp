#include <doctest.h>

#include <algorithm>
#include <chrono>
#include <random>

#include "pstr/generators.hpp"
#include "pstr/labeling.hpp"
#include "pstr/metrics.hpp"
#include "pstr/solver.hpp"
#include "support.hpp"

using namespace pstr;

namespace {

bool dominates(const Graph& g, unsigned mask) {
  for (Vertex v = 0; v < g.order(); ++v) {
    if (mask >> v & 1u) continue;
    bool hit = false;
    for (Vertex w : g.neighbors(v)) hit = hit || (mask >> w & 1u);
    if (!hit) return false;
  }
  return true;
}

int domination_by_subsets(const Graph& g) {
  const int n = g.order();
  for (int k = 0; k <= n; ++k) {
    std::vector<bool> pick(static_cast<std::size_t>(n), false);
    std::fill(pick.begin(), pick.begin() + k, true);
    do {
      unsigned mask = 0;
      for (int v = 0; v < n; ++v) mask |= pick[v] ? 1u << v : 0u;
      if (dominates(g, mask)) return k;
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  return n;
}

std::optional<int> cover_by_subsets(const CoverInstance& inst) {
  std::optional<int> best;
  const int c = static_cast<int>(inst.candidates.size());
  for (unsigned mask = 0; mask < (1u << c); ++mask) {
    int cost = 0;
    std::vector<Vertex> hit;
    for (int i = 0; i < c; ++i) {
      if (!(mask >> i & 1u)) continue;
      cost += inst.candidates[i].cost;
      hit.insert(hit.end(), inst.candidates[i].covered.begin(), inst.candidates[i].covered.end());
    }
    bool all = true;
    for (Vertex e : inst.elements) all = all && std::find(hit.begin(), hit.end(), e) != hit.end();
    if (all && (!best || cost < *best)) best = cost;
  }
  return best;
}

SolverConfig workers(int w) {
  SolverConfig cfg;
  cfg.worker_count = w;
  return cfg;
}

}  // namespace

TEST_CASE("exact values on named graphs") {
  const SolveResult r = solve_exact(robertson_graph(), 3);
  CHECK(r.value == 11);
  CHECK(r.optimal);
  CHECK(validate(robertson_graph(), 3, r.witness).weight == 11);

  CHECK(solve_exact(generate(family::Star{5}), 3).value == 3);
  CHECK(solve_exact(generate(family::Fig3Spider{}), 3).value == 10);
}

TEST_CASE("exhaustive search on small graphs") {
  CHECK(solve_naive(generate(family::Star{5}), 3).value == 3);
  const Graph wheel_path = join(Graph(1), generate(family::Path{5}));
  CHECK(solve_naive(wheel_path, 3).value == 3);
  CHECK(solve_exact(wheel_path, 3).value == 3);
  const SolveResult single = solve_naive(Graph(1), 3);
  CHECK(single.value == 1);
  CHECK(single.witness == LabelFunction({1}));
  CHECK(solve_exact(Graph(1), 3).value == 1);
}

TEST_CASE("cover search") {
  CoverInstance forced{{0}, {{5, {0}, 1}}};
  auto s = min_weight_cover(forced, 100);
  REQUIRE(s);
  CHECK(s->chosen == std::vector<Vertex>{5});
  CHECK(s->cost == 1);

  CoverInstance dominated{{0, 1}, {{5, {0}, 1}, {6, {1}, 1}, {7, {0, 1}, 1}}};
  s = min_weight_cover(dominated, 100);
  REQUIRE(s);
  CHECK(s->chosen == std::vector<Vertex>{7});
  CHECK(s->cost == 1);

  CoverInstance stranded{{0, 1}, {{5, {0}, 1}}};
  CHECK_FALSE(min_weight_cover(stranded, 100).has_value());

  // The budget is strict.
  CHECK_FALSE(min_weight_cover(forced, 1).has_value());
  CHECK(min_weight_cover(forced, 2).has_value());

  CoverInstance empty{{}, {}};
  s = min_weight_cover(empty, 1);
  REQUIRE(s);
  CHECK(s->cost == 0);
}

TEST_CASE("cover instance of a star") {
  const Graph star = generate(family::Star{11});
  VertexSet leaves(11);
  for (Vertex v = 1; v <= 10; ++v) leaves.insert(v);
  const CoverInstance inst = make_cover_instance(star, leaves, 4);
  CHECK(inst.elements.size() == 10);
  REQUIRE(inst.candidates.size() == 1);
  CHECK(inst.candidates[0].vertex == 0);
  CHECK(inst.candidates[0].cost == 3);
}

TEST_CASE("cover search agrees with subset enumeration") {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 300; ++i) {
    const int elements = std::uniform_int_distribution<int>(0, 8)(rng);
    const int candidates = std::uniform_int_distribution<int>(0, 9)(rng);
    CoverInstance inst;
    for (int e = 0; e < elements; ++e) inst.elements.push_back(100 + e);
    for (int c = 0; c < candidates; ++c) {
      CoverCandidate cand{c, {}, std::uniform_int_distribution<int>(1, 4)(rng)};
      for (int e = 0; e < elements; ++e) {
        if (std::bernoulli_distribution(0.3)(rng)) cand.covered.push_back(100 + e);
      }
      inst.candidates.push_back(cand);
    }
    const auto want = cover_by_subsets(inst);
    const auto got = min_weight_cover(inst, 1000);
    REQUIRE(got.has_value() == want.has_value());
    if (!got) continue;
    CHECK(got->cost == *want);
    int cost = 0;
    for (Vertex v : got->chosen) cost += inst.candidates[v].cost;
    CHECK(cost == got->cost);
  }
}

TEST_CASE("domination number") {
  CHECK(domination_number(generate(family::Star{5})).value == 1);
  CHECK(domination_number(generate(family::Cycle{6})).value == 2);
  CHECK(domination_number(Graph(3)).value == 3);
  const SolveResult r = domination_number(robertson_graph());
  CHECK(r.value == domination_by_subsets(robertson_graph()));
  unsigned mask = 0;
  for (Vertex v = 0; v < 19; ++v) mask |= r.witness[v] == 1 ? 1u << v : 0u;
  CHECK(dominates(robertson_graph(), mask));
  CHECK(r.witness.weight() == r.value);

  testing::RandomGraphs gen(13, 1, 10);
  for (int i = 0; i < 80; ++i) {
    const Graph g = gen.next();
    CHECK(domination_number(g).value == domination_by_subsets(g));
  }
}

TEST_CASE("Roman domination number") {
  CHECK(roman_domination_number(generate(family::Star{11})).value == 2);
  CHECK(roman_domination_number(Graph(3)).value == 3);
  const Graph c5 = generate(family::Cycle{5});
  CHECK(roman_domination_number(c5).value == 4);
  CHECK(solve_naive(c5, 2).value == 4);
}

TEST_CASE("zero-set search agrees with exhaustive search") {
  testing::RandomGraphs gen(2024, 1, 9);
  for (int i = 0; i < 120; ++i) {
    const Graph g = gen.next();
    for (int p = 1; p <= g.max_degree() + 1; ++p) {
      const SolveResult fast = solve_exact(g, p);
      const SolveResult slow = solve(g, p, SolverConfig{1, std::nullopt, Algorithm::naive});
      CHECK(fast.value == slow.value);
      CHECK(slow.optimal);
      const auto rep = validate(g, p, fast.witness);
      CHECK(rep.valid);
      CHECK(rep.weight == fast.value);
      CHECK(validate(g, p, slow.witness).weight == slow.value);
    }
  }
}

TEST_CASE("regimes: p = 1 gives n and p >= max degree gives the Roman number") {
  testing::RandomGraphs gen(77, 1, 11);
  for (int i = 0; i < 80; ++i) {
    const Graph g = gen.next();
    const int delta = g.max_degree();
    CHECK(solve_exact(g, 1).value == g.order());
    const std::int64_t roman = roman_domination_number(g).value;
    CHECK(solve_exact(g, std::max(delta, 1)).value == roman);
    CHECK(solve_exact(g, delta + 3).value == roman);
  }
}

TEST_CASE("value does not increase with p") {
  testing::RandomGraphs gen(88, 5, 12);
  for (int i = 0; i < 80; ++i) {
    const Graph g = gen.next();
    std::int64_t previous = solve_exact(g, 1).value;
    for (int p = 2; p <= g.max_degree() + 1; ++p) {
      const std::int64_t v = solve_exact(g, p).value;
      CHECK(v <= previous);
      previous = v;
    }
  }
}

TEST_CASE("components add up") {
  testing::RandomGraphs gen(55, 1, 7);
  for (int i = 0; i < 60; ++i) {
    const Graph a = gen.next();
    const Graph b = gen.next();
    const Graph both = disjoint_union(a, b);
    for (int p = 1; p <= both.max_degree() + 1; ++p) {
      CHECK(solve_exact(both, p).value == solve_exact(a, p).value + solve_exact(b, p).value);
    }
  }
}

TEST_CASE("worker count does not change value or witness") {
  std::vector<Graph> graphs{robertson_graph(), generate(family::Fig3Spider{})};
  testing::RandomGraphs gen(66, 14, 20);
  for (int i = 0; i < 8; ++i) graphs.push_back(gen.next());
  for (const Graph& g : graphs) {
    for (int p : {2, 3, 4}) {
      const SolveResult one = solve_exact(g, p, workers(1));
      for (int w : {2, 3, 4, 8}) {
        const SolveResult many = solve_exact(g, p, workers(w));
        CHECK(many.value == one.value);
        CHECK(many.witness == one.witness);
        CHECK(many.optimal);
      }
    }
  }
}

TEST_CASE("a time limit returns the incumbent unproven") {
  const Graph g = random_gnm(60, 240, 3);
  SolverConfig cfg;
  cfg.time_limit = std::chrono::duration<double>(0.0);
  const SolveResult r = solve_exact(g, 3, cfg);
  CHECK_FALSE(r.optimal);
  const auto rep = validate(g, 3, r.witness);
  CHECK(rep.valid);
  CHECK(rep.weight == r.value);
}

TEST_CASE("solver preconditions") {
  CHECK_THROWS_AS(solve_exact(Graph(0), 3), std::invalid_argument);
  CHECK_THROWS_AS(solve_exact(Graph(3), 0), std::invalid_argument);
  CHECK_THROWS_AS(solve_exact(Graph(65), 3), std::invalid_argument);
  CHECK_THROWS_AS(solve_naive(Graph(13), 3), std::invalid_argument);
}
