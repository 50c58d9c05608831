#include <doctest.h>

#include <random>

#include "pstr/generators.hpp"
#include "pstr/labeling.hpp"
#include "pstr/solver.hpp"
#include "support.hpp"

using namespace pstr;

namespace {

// Classical Roman condition: every 0 has a neighbour labelled 2.
bool roman_ok(const Graph& g, const std::vector<int>& f) {
  for (Vertex v = 0; v < g.order(); ++v) {
    if (f[v] != 0) continue;
    bool found = false;
    for (Vertex w : g.neighbors(v)) found = found || f[w] == 2;
    if (!found) return false;
  }
  return true;
}

LabelFunction star_centre(int centre_label) {
  std::vector<int> labels(11, 0);
  labels[0] = centre_label;
  return LabelFunction(labels);
}

VertexSet leaves_of_star() {
  VertexSet z(11);
  for (Vertex v = 1; v <= 10; ++v) z.insert(v);
  return z;
}

}  // namespace

TEST_CASE("threshold on the ten-leaf star") {
  const Graph star = generate(family::Star{11});
  CHECK(threshold(star, leaves_of_star(), 0, 4) == 4);
  CHECK(threshold(star, leaves_of_star(), 0, 2) == 6);
  CHECK(threshold(star, VertexSet(11), 0, 3) == 1);
  CHECK_THROWS_AS(threshold(star, leaves_of_star(), 1, 3), std::invalid_argument);
  CHECK_THROWS_AS(threshold(star, VertexSet(11), 0, 0), std::invalid_argument);
}

TEST_CASE("validate on the ten-leaf star") {
  const Graph star = generate(family::Star{11});
  const auto ok = validate(star, 4, star_centre(4));
  CHECK(ok.valid);
  CHECK(ok.weight == 4);
  CHECK(ok.max_label == 4);
  CHECK(ok.violations.empty());

  const auto short_by_one = validate(star, 3, star_centre(4));
  CHECK_FALSE(short_by_one.valid);
  CHECK(short_by_one.weight == 4);
  CHECK(short_by_one.violations.size() == 10);
  CHECK(short_by_one.violations.front() == Violation{1, ViolationReason::undefended_zero});

  const auto too_big = validate(star, 4, star_centre(5));
  CHECK_FALSE(too_big.valid);
  CHECK(too_big.violations == std::vector<Violation>{{0, ViolationReason::label_exceeds_max}});
}

TEST_CASE("all ones is valid with weight n") {
  testing::RandomGraphs gen(3, 1, 12);
  for (int i = 0; i < 50; ++i) {
    const Graph g = gen.next();
    for (int p = 1; p <= 4; ++p) {
      const auto rep = validate(g, p, LabelFunction::constant(g.order(), 1));
      CHECK(rep.valid);
      CHECK(rep.weight == g.order());
    }
  }
}

TEST_CASE("a zero on an isolated vertex is undefended") {
  const Graph g(3);
  const auto rep = validate(g, 1, LabelFunction({0, 1, 1}));
  CHECK_FALSE(rep.valid);
  CHECK(rep.violations == std::vector<Violation>{{0, ViolationReason::undefended_zero}});
}

TEST_CASE("validate rejects bad arguments") {
  const Graph g = generate(family::Path{3});
  CHECK_THROWS_AS(validate(g, 1, LabelFunction({1, 1})), std::invalid_argument);
  CHECK_THROWS_AS(validate(g, 0, LabelFunction({1, 1, 1})), std::invalid_argument);
  CHECK_THROWS_AS(LabelFunction({1, -1}), std::invalid_argument);
}

TEST_CASE("label partition and weight") {
  const LabelFunction f({0, 1, 3, 0, 2});
  CHECK(f.weight() == 6);
  CHECK(f.b0() == std::vector<Vertex>{0, 3});
  CHECK(f.b1() == std::vector<Vertex>{1});
  CHECK(f.b2() == std::vector<Vertex>{2, 4});
  CHECK(f.zero_set().size() == 2);
}

TEST_CASE("label files") {
  const LabelFunction f = parse_labels("# centre first\n4 0 0\n0\n");
  CHECK(f == LabelFunction({4, 0, 0, 0}));
  CHECK(parse_labels(write_labels(f)) == f);
  CHECK_THROWS(parse_labels("1 two 3"));
  CHECK_THROWS(parse_labels("1 -2"));
}

TEST_CASE("regime classifier") {
  const Graph star = generate(family::Star{11});
  CHECK(classify_p(star, 1) == ModelClass::trivial);
  CHECK(classify_p(star, 2) == ModelClass::strong_roman);
  CHECK(classify_p(star, 3) == ModelClass::p_strong);
  CHECK(classify_p(star, 9) == ModelClass::p_strong);
  CHECK(classify_p(star, 10) == ModelClass::roman);
  CHECK(classify_p(star, 40) == ModelClass::roman);
  CHECK(model_class_name(ModelClass::p_strong) == "p_strong");
}

TEST_CASE("codomain ceiling identity") {
  for (int d = 0; d <= 60; ++d) {
    for (int p = 1; p <= 20; ++p) CHECK(ceil_div(d + p, p) == max_label(d, p));
  }
}

TEST_CASE("raising labels keeps a labelling valid") {
  testing::RandomGraphs gen(5, 2, 9);
  std::mt19937_64 rng(17);
  for (int i = 0; i < 60; ++i) {
    const Graph g = gen.next();
    const int delta = g.max_degree();
    for (int p = 1; p <= delta + 1; ++p) {
      const LabelFunction f = solve_exact(g, p).witness;
      REQUIRE(validate(g, p, f).valid);
      const int top = max_label(delta, p);
      for (int k = 0; k < 5; ++k) {
        std::vector<int> raised(f.labels().begin(), f.labels().end());
        for (int& x : raised) {
          x = std::uniform_int_distribution<int>(x, std::max(x, top))(rng);
        }
        CHECK(validate(g, p, LabelFunction(raised)).valid);
      }
    }
  }
}

TEST_CASE("p at least the maximum degree is Roman domination") {
  testing::RandomGraphs gen(9, 2, 7);
  std::mt19937_64 rng(23);
  int checked = 0;
  for (int i = 0; i < 80; ++i) {
    const Graph g = gen.next();
    const int delta = g.max_degree();
    if (delta == 0) continue;
    for (int k = 0; k < 40; ++k) {
      std::vector<int> f(static_cast<std::size_t>(g.order()));
      for (int& x : f) x = std::uniform_int_distribution<int>(0, 2)(rng);
      for (int p : {delta, delta + 1, delta + 5}) {
        CHECK(validate(g, p, LabelFunction(f)).valid == roman_ok(g, f));
        ++checked;
      }
    }
  }
  CHECK(checked > 1000);
}
