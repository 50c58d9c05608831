#include "pstr/acceptance.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <thread>

#include "pstr/bounds.hpp"
#include "pstr/cli.hpp"
#include "pstr/families.hpp"
#include "pstr/generators.hpp"
#include "pstr/heuristics.hpp"
#include "pstr/metrics.hpp"
#include "pstr/solver.hpp"

namespace pstr::acceptance {
namespace {

// Tolerances and budgets, fixed here so that no run can loosen them.
constexpr double kRobertsonSeconds = 120.0;
constexpr double kStarSeconds = 1.0;
constexpr double kBipartiteSweepSeconds = 60.0;
constexpr double kProbabilisticBound = 8.4657;
constexpr double kProbabilisticSlackSigmas = 3.0;
constexpr int kUniversalGraphs = 50;
constexpr int kOracleGraphs = 200;
constexpr int kBoundGraphs = 300;
constexpr int kMinCorpus = 20;
constexpr int kHeuristicTrials = 1000;
constexpr std::uint64_t kHeuristicSeed = 7;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Collects mismatches; the first one ends up in the detail line. A mismatch
// flagged as `known` is one the analysis in the README predicts exactly.
struct Tally {
  int checks = 0;
  int failures = 0;
  int unknown = 0;
  std::string first;

  void expect(bool ok, const std::string& what, bool known = false) {
    ++checks;
    if (ok) return;
    if (failures++ == 0) first = what;
    if (!known) ++unknown;
  }
  std::string summary(const std::string& unit) const {
    std::string s = std::to_string(checks) + " " + unit;
    if (failures) s += ", " + std::to_string(failures) + " failed, first: " + first;
    return s;
  }
  void finish(Outcome& o, const std::string& unit, const std::string& known_note = {}) const {
    o.passed = failures == 0;
    o.known_defect = failures > 0 && unknown == 0;
    o.detail = summary(unit);
    if (o.known_defect) o.detail += "; " + known_note;
  }
};

SolverConfig parallel_config() {
  SolverConfig cfg;
  cfg.worker_count = static_cast<int>(std::clamp(std::thread::hardware_concurrency(), 1u, 4u));
  return cfg;
}

Outcome start(int id, std::string title) {
  Outcome o;
  o.id = id;
  o.title = std::move(title);
  return o;
}

std::string show(const Graph& g) {
  std::ostringstream out;
  out << "n=" << g.order() << " edges=[";
  bool first = true;
  for (auto [u, v] : g.edges()) {
    out << (first ? "" : " ") << u << "-" << v;
    first = false;
  }
  out << "]";
  return out.str();
}

Outcome robertson() {
  Outcome o = start(1, "Robertson graph, p=3: value 11, proven optimal");
  const auto t0 = Clock::now();
  const SolveResult r = solve_exact(robertson_graph(), 3, parallel_config());
  const double took = seconds_since(t0);
  const bool valid = validate(robertson_graph(), 3, r.witness).valid;
  o.passed = r.value == 11 && r.optimal && valid && took < kRobertsonSeconds;
  o.detail = "value " + std::to_string(r.value) + (r.optimal ? " optimal" : " not proven") +
             (valid ? ", witness valid" : ", witness INVALID");
  return o;
}

Outcome star_figure() {
  Outcome o = start(2, "K_{1,10}: Roman 2, p=2 6, p=3 5, p=4 4");
  const Graph star = generate(family::Star{11});
  Tally t;
  auto timed = [&](const std::string& what, const std::function<SolveResult()>& run,
                   std::int64_t want) {
    const auto t0 = Clock::now();
    const SolveResult r = run();
    const double took = seconds_since(t0);
    t.expect(r.value == want && r.optimal,
             what + " = " + std::to_string(r.value) + ", expected " + std::to_string(want));
    t.expect(took < kStarSeconds, what + " took " + std::to_string(took) + " s");
  };
  timed("Roman", [&] { return roman_domination_number(star); }, 2);
  timed("p=2", [&] { return solve_exact(star, 2); }, 6);
  timed("p=3", [&] { return solve_exact(star, 3); }, 5);
  timed("p=4", [&] { return solve_exact(star, 4); }, 4);
  t.expect(value_universal(11, 3).value == 5, "universal formula at p=3");
  t.expect(value_universal(11, 4).value == 4, "universal formula at p=4");
  o.passed = t.failures == 0;
  o.detail = t.summary("checks");
  return o;
}

Outcome bipartite_sweep() {
  Outcome o = start(3, "K_{r,s} sweep matches the closed form");
  const auto t0 = Clock::now();
  Tally t;
  for (int s = 4; s <= 6; ++s) {
    for (int r = 2; r <= s; ++r) {
      for (int p = 3; p <= s - 1; ++p) {
        const FamilyValue f = value_complete_bipartite(r, s, p);
        const SolveResult x = solve_exact(generate(family::CompleteBipartite{r, s}), p);
        t.expect(f.applicable && x.optimal && x.value == f.value,
                 "K_{" + std::to_string(r) + "," + std::to_string(s) + "} p=" +
                     std::to_string(p) + ": solver " + std::to_string(x.value) + ", formula " +
                     std::to_string(f.value));
      }
    }
  }
  const double took = seconds_since(t0);
  t.expect(took < kBipartiteSweepSeconds, "sweep took " + std::to_string(took) + " s");
  o.passed = t.failures == 0;
  o.detail = t.summary("checks");
  return o;
}

Outcome bistar_sweep() {
  Outcome o = start(4, "T_{r,s} sweep matches 2+ceil(r/p)+ceil(s/p)");
  Tally t;
  for (int s = 3; s <= 6; ++s) {
    for (int r = 1; r <= s; ++r) {
      for (int p = 3; p <= s; ++p) {
        const std::int64_t want = 2 + ceil_div(r, p) + ceil_div(s, p);
        const FamilyValue f = value_bistar(r, s, p);
        const SolveResult x = solve_exact(generate(family::DoubleStar{r, s}), p);
        // With one leaf on a centre, that centre can drop to 0 and its leaf to 1.
        const bool single_leaf = r == 1 && s % p != 0 && x.optimal &&
                                 x.value == 2 + ceil_div(s + 1, p) && !f.applicable;
        t.expect(x.optimal && x.value == want,
                 "T_{" + std::to_string(r) + "," + std::to_string(s) + "} p=" +
                     std::to_string(p) + ": solver " + std::to_string(x.value) + ", expected " +
                     std::to_string(want),
                 single_leaf);
        t.expect(!f.applicable || f.value == want, "value_bistar disagrees with the formula");
      }
    }
  }
  t.finish(o, "checks",
           "every mismatch is r=1 with p not dividing s, where the value is 2+ceil((s+1)/p)");
  return o;
}

Outcome fig3_sharpness() {
  Outcome o = start(5, "fig3 spider, p=3: value 10 = n - floor(2*6/3)");
  const Graph g = generate(family::Fig3Spider{});
  const SolveResult r = solve_exact(g, 3);
  const std::int64_t bound = lemma_lowB0(14, 3, 6);
  o.passed = g.order() == 14 && r.optimal && r.value == 10 && bound == 10;
  o.detail = "value " + std::to_string(r.value) + ", zero-set bound " + std::to_string(bound);
  return o;
}

Outcome universal_vertex() {
  Outcome o = start(6, "K_1 join H: value ceil((n+p-1)/p)");
  std::mt19937_64 rng(6);
  Tally t;
  for (int i = 0; i < kUniversalGraphs; ++i) {
    const int n = std::uniform_int_distribution<int>(5, 12)(rng);
    const int h = n - 1;
    const int m = std::uniform_int_distribution<int>(0, h * (h - 1) / 2)(rng);
    const Graph g = join(Graph(1), random_gnm(h, m, rng()));
    for (int p = 3; p <= n - 2; ++p) {
      const std::int64_t want = ceil_div(n + p - 1, p);
      const SolveResult r = solve_exact(g, p);
      t.expect(r.optimal && r.value == want && value_universal(n, p).value == want,
               show(g) + " p=" + std::to_string(p) + ": solver " + std::to_string(r.value) +
                   ", expected " + std::to_string(want));
    }
  }
  o.passed = t.failures == 0;
  o.detail = t.summary("(graph, p) pairs");
  return o;
}

Outcome oracle_equivalence() {
  Outcome o = start(7, "zero-set solver agrees with exhaustive search");
  std::mt19937_64 rng(7);
  Tally t;
  for (int i = 0; i < kOracleGraphs; ++i) {
    const int n = std::uniform_int_distribution<int>(1, 9)(rng);
    const int m = std::uniform_int_distribution<int>(0, n * (n - 1) / 2)(rng);
    const Graph g = random_gnm(n, m, rng());
    const int delta = g.max_degree();
    const std::int64_t roman = roman_domination_number(g).value;
    for (int p = 1; p <= delta + 1; ++p) {
      const SolveResult fast = solve_exact(g, p);
      const SolveResult slow = solve_naive(g, p);
      const std::string tag = show(g) + " p=" + std::to_string(p);
      t.expect(fast.value == slow.value,
               tag + ": exact " + std::to_string(fast.value) + ", naive " +
                   std::to_string(slow.value));
      t.expect(validate(g, p, fast.witness).valid && fast.witness.weight() == fast.value,
               tag + ": witness does not certify the value");
      if (p == 1) t.expect(fast.value == n, tag + ": p=1 should give n");
      if (p >= delta) t.expect(fast.value == roman, tag + ": differs from the Roman value");
    }
  }
  o.passed = t.failures == 0;
  o.detail = t.summary("checks");
  return o;
}

Graph connected_graph(std::mt19937_64& rng) {
  for (;;) {
    const int n = std::uniform_int_distribution<int>(5, 12)(rng);
    const int m = std::uniform_int_distribution<int>(n - 1, n * (n - 1) / 2)(rng);
    Graph g = random_gnm(n, m, rng());
    if (g.max_degree() >= 4 && is_connected(g)) return g;
  }
}

Outcome bound_soundness() {
  Outcome o = start(8, "applicable bounds bracket the value; value non-increasing in p");
  std::mt19937_64 rng(8);
  Tally t;
  for (int i = 0; i < kBoundGraphs; ++i) {
    const Graph g = connected_graph(rng);
    const int delta = g.max_degree();
    std::vector<std::int64_t> by_p(static_cast<std::size_t>(delta + 2), 0);
    for (int p = 1; p <= delta + 1; ++p) {
      const BoundsReport rep = bounds_report(g, p, true);
      const std::int64_t value = rep.exact->value;
      by_p[p] = value;
      for (const auto& e : rep.entries) {
        if (!e.applicable) continue;
        const bool ok = e.direction == BoundDirection::lower
                            ? e.integer_value <= value
                            : static_cast<double>(value) <= e.value + 1e-9;
        t.expect(ok, show(g) + " p=" + std::to_string(p) + ": " + e.name + " " +
                         std::to_string(e.value) + " vs value " + std::to_string(value));
      }
    }
    for (int p = 3; p + 1 <= delta - 1; ++p) {
      t.expect(by_p[p] >= by_p[p + 1], show(g) + ": value rises from p=" + std::to_string(p));
    }
  }
  o.passed = t.failures == 0;
  o.detail = t.summary("checks");
  return o;
}

// In the chordal gadget a cover clause vertex also sees the zero clause
// vertices, so label 2 stops being adequate once 3 + (t - q) > p.
bool proof_overloaded(const ReductionResult& res, const std::vector<int>& cover) {
  const int t = static_cast<int>(res.instance.clauses.size());
  return 3 + (t - static_cast<int>(cover.size())) > res.p;
}

bool clique_overload(const X3CInstance& inst, int p, ReductionVariant variant,
                     const EquivalenceReport& r) {
  if (variant != ReductionVariant::chordal || !r.cover || r.value <= r.threshold) return false;
  const ReductionResult res = build_reduction(inst, p, variant);
  return proof_overloaded(res, *r.cover) && !validate(res.graph, p, proof_labeling(res, *r.cover)).valid;
}

Outcome reduction_equivalence() {
  Outcome o = start(9, "X3C gadget: cover iff value <= 2q+3t; worked example weight 19");
  Tally t;
  const auto corpus = reduction_corpus();
  t.expect(static_cast<int>(corpus.size()) >= kMinCorpus, "corpus too small");
  int with_cover = 0;
  for (const auto& item : corpus) {
    with_cover += x3c_has_exact_cover(item.instance) ? 1 : 0;
    for (int p : item.ps) {
      for (auto variant : {ReductionVariant::bipartite, ReductionVariant::chordal}) {
        const EquivalenceReport r = verify_reduction_equivalence(item.instance, p, variant);
        t.expect(r.equivalent,
                 "q=" + std::to_string(item.instance.q) + " t=" +
                     std::to_string(item.instance.clauses.size()) + " p=" + std::to_string(p) +
                     " " + std::string(variant_name(variant)) + ": value " +
                     std::to_string(r.value) + ", threshold " + std::to_string(r.threshold),
                 clique_overload(item.instance, p, variant, r));
      }
    }
  }
  const X3CInstance ex = worked_x3c_example();
  const auto cover = x3c_has_exact_cover(ex);
  t.expect(cover && *cover == std::vector<int>{1, 4}, "worked example cover");
  if (cover) {
    for (auto variant : {ReductionVariant::bipartite, ReductionVariant::chordal}) {
      const ReductionResult res = build_reduction(ex, 3, variant);
      const LabelFunction f = proof_labeling(res, *cover);
      const ValidationReport rep = validate(res.graph, 3, f);
      const bool overloaded = variant == ReductionVariant::chordal &&
                              proof_overloaded(res, *cover) && !rep.valid;
      t.expect(res.graph.order() == 41 && rep.valid && rep.weight == 19 && res.threshold == 19,
               "worked example " + std::string(variant_name(variant)) + ": labelling " +
                   (rep.valid ? "valid" : "invalid") + ", weight " + std::to_string(rep.weight),
               overloaded);
    }
  }
  t.finish(o, "checks",
           "every mismatch is a chordal gadget whose clause clique pushes a cover clause "
           "vertex above label 2");
  o.detail = std::to_string(corpus.size()) + " instances (" + std::to_string(with_cover) +
             " with a cover), " + o.detail;
  return o;
}

Outcome probabilistic() {
  Outcome o = start(10, "K_{5,5}, p=4: random construction within the expected-weight bound");
  const Graph g = generate(family::CompleteBipartite{5, 5});
  const TrialStats s = randomized_construction(g, 4, kHeuristicTrials, kHeuristicSeed);
  int valid = 0;
  for (int i = 0; i < kHeuristicTrials; ++i) {
    valid += validate(g, 4, random_trial(g, 4, s.xi, kHeuristicSeed, i)).valid ? 1 : 0;
  }
  const std::int64_t exact = solve_exact(g, 4).value;
  const std::int64_t lowest = *std::min_element(s.weights.begin(), s.weights.end());
  const double limit = kProbabilisticBound + kProbabilisticSlackSigmas * s.std_error;
  const auto pb = bound_probabilistic(g, 4);
  const bool bound_ok = pb && std::abs(pb->value - kProbabilisticBound) < 1e-4;
  o.passed = valid == kHeuristicTrials && s.mean_weight <= limit && lowest >= exact && bound_ok;
  std::ostringstream d;
  d.precision(4);
  d << std::fixed << valid << "/" << kHeuristicTrials << " valid, mean " << s.mean_weight
    << " <= " << limit << ", min " << lowest << " >= exact " << exact;
  if (!bound_ok) d << ", bound expression off";
  o.detail = d.str();
  return o;
}

Outcome determinism() {
  Outcome o = start(11, "CLI JSON identical for --workers 1 and --workers 4");
  Tally t;
  auto same = [&](std::vector<std::string> args, const std::string& what) {
    auto one = args;
    one.insert(one.end(), {"--json", "--workers", "1"});
    auto four = args;
    four.insert(four.end(), {"--json", "--workers", "4"});
    const CommandResult a = dispatch(one);
    const CommandResult b = dispatch(four);
    t.expect(a.exit_code == 0 && b.exit_code == 0 && a.render() == b.render(), what);
  };
  same({"solve", "--graph", "robertson", "--p", "3"}, "robertson solve");

  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() /
                       ("pstr-acceptance-" + std::to_string(Clock::now().time_since_epoch().count()));
  fs::create_directories(dir);
  int index = 0;
  for (const auto& item : reduction_corpus()) {
    const fs::path file = dir / ("instance" + std::to_string(index++) + ".x3c");
    std::ofstream(file) << write_x3c(item.instance);
    for (int p : item.ps) {
      for (const char* variant : {"bipartite", "chordal"}) {
        same({"verify-reduction", "--x3c", file.string(), "--p", std::to_string(p), "--variant",
              variant},
             file.filename().string() + " p=" + std::to_string(p) + " " + variant);
      }
    }
  }
  std::error_code ignored;
  fs::remove_all(dir, ignored);
  o.passed = t.failures == 0;
  o.detail = t.summary("command pairs");
  return o;
}

}  // namespace

std::vector<CorpusItem> reduction_corpus() {
  std::vector<X3CInstance> instances;
  std::array<int, 3> perm{1, 2, 3};
  do {
    instances.push_back({1, {perm}});
  } while (std::next_permutation(perm.begin(), perm.end()));
  for (int a = 1; a <= 6; ++a) {
    for (int b = a + 1; b <= 6; ++b) {
      for (int c = b + 1; c <= 6; ++c) instances.push_back({2, {{a, b, c}}});
    }
  }
  instances.push_back({1, {{1, 2, 3}, {1, 2, 3}}});
  instances.push_back({1, {{1, 2, 3}, {3, 2, 1}}});

  std::vector<CorpusItem> out;
  for (auto& inst : instances) {
    CorpusItem item{std::move(inst), {}};
    const int t = static_cast<int>(item.instance.clauses.size());
    for (int p : {3, 4}) {
      if (3 * item.instance.q + t * (2 * p + 1) <= kMaxVerifiedReductionOrder) item.ps.push_back(p);
    }
    out.push_back(std::move(item));
  }
  return out;
}

X3CInstance worked_x3c_example() {
  return {2, {{1, 2, 3}, {1, 2, 4}, {1, 5, 6}, {2, 3, 4}, {3, 5, 6}}};
}

std::vector<Outcome> run_all(void (*on_done)(const Outcome&)) {
  const std::vector<Outcome (*)()> criteria{
      robertson,        star_figure,           bipartite_sweep, bistar_sweep,
      fig3_sharpness,   universal_vertex,      oracle_equivalence, bound_soundness,
      reduction_equivalence, probabilistic,    determinism};
  std::vector<Outcome> out;
  for (auto run : criteria) {
    const auto t0 = Clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.id = static_cast<int>(out.size()) + 1;
      o.title = "criterion " + std::to_string(o.id);
      o.passed = false;
      o.detail = std::string("threw: ") + e.what();
    }
    o.seconds = seconds_since(t0);
    if (on_done) on_done(o);
    out.push_back(std::move(o));
  }
  return out;
}

std::string format_line(const Outcome& o) {
  std::ostringstream out;
  out.precision(2);
  out << std::fixed << (o.passed ? "[PASS] " : "[FAIL] ") << o.id << ". " << o.title << " ("
      << o.detail << "; " << o.seconds << " s)";
  return out.str();
}

}  // namespace pstr::acceptance
