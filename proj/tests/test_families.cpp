#include <doctest.h>

#include <random>

#include "pstr/families.hpp"
#include "pstr/generators.hpp"
#include "pstr/solver.hpp"
#include "support.hpp"

using namespace pstr;

namespace {

// Every labelled graph on `h` vertices, indexed by its edge bitmask.
Graph graph_from_mask(int h, unsigned mask) {
  std::vector<Edge> edges;
  int bit = 0;
  for (int u = 0; u < h; ++u) {
    for (int v = u + 1; v < h; ++v, ++bit) {
      if (mask >> bit & 1u) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edges(h, edges);
}

void check_classification(const Graph& g, int& threes, int& fours) {
  const int delta = g.max_degree();
  for (int p = 3; p <= delta - 1; ++p) {
    const SmallValueClass c = classify_small_value(g, p);
    const std::int64_t v = solve_exact(g, p).value;
    CHECK((c.kind == SmallValue::three) == (v == 3));
    CHECK((c.kind == SmallValue::four) == (v == 4));
    threes += v == 3 ? 1 : 0;
    fours += v == 4 ? 1 : 0;
  }
}

}  // namespace

TEST_CASE("complete bipartite closed form") {
  CHECK(value_complete_bipartite(2, 6, 3).value == 4);
  CHECK(value_complete_bipartite(4, 5, 3).value == 5);
  const FamilyValue k34 = value_complete_bipartite(3, 4, 3);
  CHECK(k34.applicable);
  CHECK(k34.value == 4);
  CHECK(solve_naive(generate(family::CompleteBipartite{3, 4}), 3).value == 4);

  CHECK_FALSE(value_complete_bipartite(1, 6, 3).applicable);
  CHECK_FALSE(value_complete_bipartite(3, 3, 3).applicable);
  CHECK_FALSE(value_complete_bipartite(3, 5, 5).applicable);
  CHECK_FALSE(value_complete_bipartite(5, 4, 3).applicable);
}

TEST_CASE("complete bipartite formula matches the solver") {
  int applicable = 0;
  for (int r = 1; r <= 11; ++r) {
    for (int s = r; r + s <= 12; ++s) {
      for (int p = 1; p <= s + 1; ++p) {
        const FamilyValue f = value_complete_bipartite(r, s, p);
        if (!f.applicable) continue;
        CHECK(solve_exact(generate(family::CompleteBipartite{r, s}), p).value == f.value);
        ++applicable;
      }
    }
  }
  CHECK(applicable > 50);
}

TEST_CASE("bi-star closed form") {
  CHECK(value_bistar(3, 3, 3).value == 4);
  CHECK(value_bistar(6, 6, 4).value == 6);
  CHECK(solve_exact(generate(family::DoubleStar{6, 6}), 4).value == 6);
  CHECK_FALSE(value_bistar(2, 2, 3).applicable);
  CHECK_FALSE(value_bistar(3, 4, 5).applicable);
}

TEST_CASE("bi-star with a single leaf on one centre") {
  // Centre with one leaf takes 0, the leaf 1; the other centre defends both.
  const FamilyValue f = value_bistar(1, 5, 3);
  CHECK_FALSE(f.applicable);
  const Graph t15 = generate(family::DoubleStar{1, 5});
  CHECK(solve_naive(t15, 3).value == 4);
  CHECK(solve_exact(t15, 3).value == 4);
  CHECK(value_bistar(1, 6, 3).applicable);
  CHECK(value_bistar(1, 6, 3).value == 5);
  for (int s = 3; s <= 12; ++s) {
    for (int p = 3; p <= s; ++p) {
      CHECK(solve_exact(generate(family::DoubleStar{1, s}), p).value == 2 + ceil_div(s + 1, p));
    }
  }
}

TEST_CASE("bi-star formula matches the solver when applicable") {
  int applicable = 0;
  for (int r = 1; r <= 6; ++r) {
    for (int s = r; r + s + 2 <= 14; ++s) {
      for (int p = 1; p <= s + 2; ++p) {
        const FamilyValue f = value_bistar(r, s, p);
        if (!f.applicable) continue;
        CHECK(solve_exact(generate(family::DoubleStar{r, s}), p).value == f.value);
        ++applicable;
      }
    }
  }
  CHECK(applicable > 40);
}

TEST_CASE("universal vertex closed form") {
  CHECK(value_universal(11, 4).value == 4);
  CHECK(value_universal(19, 3).value == 7);
  CHECK(value_universal(5, 3).value == 3);
  CHECK_FALSE(value_universal(5, 4).applicable);
  CHECK_FALSE(value_universal(9, 2).applicable);
  for (unsigned mask = 0; mask < 64; ++mask) {
    CHECK(solve_naive(join(Graph(1), graph_from_mask(4, mask)), 3).value == 3);
  }
  for (int n = 5; n <= 60; ++n) {
    for (int p = 3; p <= n - 2; ++p) CHECK(value_universal(n, p).applicable);
  }
}

TEST_CASE("small values on named graphs") {
  const auto three = classify_small_value(generate(family::Star{5}), 3);
  CHECK(three.kind == SmallValue::three);
  const auto four = classify_small_value(generate(family::Star{8}), 3);
  CHECK(four.kind == SmallValue::four);
  CHECK(four.four_case == 1);
  CHECK(classify_small_value(robertson_graph(), 3).kind == SmallValue::other);
  CHECK(classify_small_value(generate(family::Cycle{6}), 3).kind == SmallValue::not_applicable);
  CHECK(classify_small_value(generate(family::Star{8}), 7).kind == SmallValue::not_applicable);

  // Two adjacent centres with three leaves each.
  const auto t33 = classify_small_value(generate(family::DoubleStar{3, 3}), 3);
  CHECK(t33.kind == SmallValue::four);
  CHECK(t33.four_case == 4);
  CHECK(solve_exact(generate(family::DoubleStar{3, 3}), 3).value == 4);
}

TEST_CASE("classification agrees with the solver on hub joins") {
  int threes = 0;
  int fours = 0;
  const std::vector<Graph> hubs{Graph(1), Graph(2), generate(family::Path{2})};
  for (int h = 1; h <= 5; ++h) {
    for (unsigned mask = 0; mask < (1u << (h * (h - 1) / 2)); ++mask) {
      const Graph body = graph_from_mask(h, mask);
      for (const Graph& hub : hubs) check_classification(join(hub, body), threes, fours);
    }
  }
  std::mt19937_64 rng(3);
  for (int i = 0; i < 400; ++i) {
    const int h = std::uniform_int_distribution<int>(6, 7)(rng);
    const unsigned mask = static_cast<unsigned>(rng()) & ((1u << (h * (h - 1) / 2)) - 1);
    const Graph body = graph_from_mask(h, mask);
    for (const Graph& hub : hubs) check_classification(join(hub, body), threes, fours);
  }
  CHECK(threes > 0);
  CHECK(fours > 0);
}

TEST_CASE("classification agrees with the solver on random graphs") {
  int threes = 0;
  int fours = 0;
  testing::RandomGraphs gen(300, 5, 10);
  for (int i = 0; i < 300; ++i) check_classification(gen.next(), threes, fours);
  CHECK(fours > 0);
}
