#include "pstr/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "pstr/labeling.hpp"
#include "pstr/metrics.hpp"

namespace pstr {
namespace {

struct Verdict {
  bool ok = true;
  std::string reason;

  void require(bool cond, const std::string& why) {
    if (!cond && ok) {
      ok = false;
      reason = why;
    }
  }
};

Verdict core_hypotheses(const GraphMetrics& m, int p) {
  Verdict v;
  v.require(m.max_degree >= 4, "needs max degree >= 4");
  v.require(p >= 3 && p <= m.max_degree - 1, "needs 3 <= p <= max degree - 1");
  return v;
}

BoundEntry integer_entry(std::string name, BoundDirection dir, std::int64_t value,
                         const Verdict& verdict, std::string basis) {
  BoundEntry e;
  e.name = std::move(name);
  e.direction = dir;
  e.value = static_cast<double>(value);
  e.integer_value = value;
  e.applicable = verdict.ok;
  e.reason = verdict.ok ? "hypotheses hold" : verdict.reason;
  e.basis = std::move(basis);
  return e;
}

}  // namespace

std::string_view direction_name(BoundDirection d) {
  return d == BoundDirection::lower ? "lower" : "upper";
}

std::int64_t bound_up1(int n, int max_degree, int p) {
  if (p < 1) throw std::invalid_argument("p must be >= 1");
  return static_cast<std::int64_t>(n) - max_degree + ceil_div(max_degree, p);
}

std::int64_t bound_nminus2(int n) { return static_cast<std::int64_t>(n) - 2; }

std::optional<std::int64_t> bound_regular(const Graph& g, int p) {
  if (p < 1) throw std::invalid_argument("p must be >= 1");
  const auto m = metrics(g);
  if (!m.regular_degree) return std::nullopt;
  const std::int64_t r = *m.regular_degree;
  if (r < p + 1) return std::nullopt;
  if (!m.girth || *m.girth < 5) return std::nullopt;
  return m.n - r * r + (ceil_div(static_cast<int>(r) - 1, p) + 1) * r;
}

std::int64_t bound_lowbound(int n, int p) {
  if (p < 1) throw std::invalid_argument("p must be >= 1");
  return ceil_div(n + p - 1, p);
}

std::int64_t lemma_lowB0(int n, int p, int b0) {
  if (p < 1) throw std::invalid_argument("p must be >= 1");
  if (b0 < 0 || b0 > n) throw std::invalid_argument("zero-set size out of range");
  // n + ceil((1 - p) b0 / p), the ceiling taken toward +infinity.
  return static_cast<std::int64_t>(n) - (static_cast<std::int64_t>(p) - 1) * b0 / p;
}

std::int64_t corollary_B0_min(int n, int p, std::int64_t gamma) {
  if (p < 2) throw std::invalid_argument("p must be >= 2");
  const std::int64_t gap = n - gamma;
  if (gap <= 0) return 0;
  return (p * gap + (p - 2)) / (p - 1);
}

std::optional<ProbabilisticBound> bound_probabilistic(const Graph& g, int p) {
  if (p < 1) throw std::invalid_argument("p must be >= 1");
  const int top = ceil_div(g.max_degree(), p);
  const int delta = g.min_degree();
  if (top >= delta) return std::nullopt;
  const double a = 1.0 + top;
  const double b = 1.0 + delta;
  const double log_ratio = std::log(b / a);
  ProbabilisticBound out;
  out.xi = log_ratio / b;
  out.value = a * g.order() / b * (log_ratio + 1.0);
  return out;
}

std::pair<std::int64_t, std::int64_t> sandwich(const Graph& g, int p, std::int64_t gamma,
                                               std::int64_t gamma_r) {
  return {gamma_r, static_cast<std::int64_t>(max_label(g.max_degree(), p)) * gamma};
}

BoundsReport bounds_report(const Graph& g, int p, bool with_solver, const SolverConfig& cfg) {
  if (p < 1) throw std::invalid_argument("p must be >= 1");
  const auto m = metrics(g);
  const int n = m.n;
  const Verdict core = core_hypotheses(m, p);
  BoundsReport report;
  auto& entries = report.entries;

  {
    Verdict v = core;
    v.require(m.connected, "needs a connected graph");
    entries.push_back(integer_entry("lowbound", BoundDirection::lower, bound_lowbound(n, p), v,
                                    "every zero vertex is worth at least 1/p and |B0| <= n-1"));
  }
  entries.push_back(integer_entry("up1", BoundDirection::upper, bound_up1(n, m.max_degree, p),
                                  core, "label a maximum-degree vertex ceil(D/p)+1, its "
                                        "neighbours 0, the rest 1"));
  entries.push_back(integer_entry("n_minus_2", BoundDirection::upper, bound_nminus2(n), core,
                                  "up1 relaxed with D >= 4 and p <= D-1"));
  {
    Verdict v = core;
    v.require(m.regular_degree.has_value(), "needs a regular graph");
    const int r = m.regular_degree.value_or(0);
    v.require(r >= p + 1, "needs regular degree r >= p+1");
    v.require(m.girth && *m.girth >= 5, "needs girth >= 5");
    std::int64_t value = 0;
    if (m.regular_degree) {
      value = n - static_cast<std::int64_t>(r) * r + (ceil_div(r - 1, p) + 1) * static_cast<std::int64_t>(r);
    }
    entries.push_back(integer_entry("regular", BoundDirection::upper, value, v,
                                    "second neighbourhood of a vertex labelled 0, its "
                                    "neighbours ceil((r-1)/p)+1"));
  }
  {
    Verdict v = core;
    const int top = ceil_div(m.max_degree, p);
    v.require(top < m.min_degree, "needs ceil(D/p) < min degree");
    BoundEntry e;
    e.name = "probabilistic";
    e.direction = BoundDirection::upper;
    e.basis = "expected weight of a random defender set at the optimal inclusion probability";
    if (auto pb = bound_probabilistic(g, p)) {
      e.value = pb->value;
      e.integer_value = static_cast<std::int64_t>(std::floor(pb->value + 1e-9));
    }
    e.applicable = v.ok;
    e.reason = v.ok ? "hypotheses hold" : v.reason;
    entries.push_back(std::move(e));
  }

  if (with_solver) {
    SolveResult exact = solve_exact(g, p, cfg);
    const SolveResult gamma = domination_number(g);
    const SolveResult gamma_r = roman_domination_number(g, cfg);
    const auto [lower, upper] = sandwich(g, p, gamma.value, gamma_r.value);
    Verdict v = core;
    v.require(m.connected, "needs a connected graph");
    entries.push_back(integer_entry("roman_lower", BoundDirection::lower, lower, v,
                                    "raising every label >= 2 to 2 gives a Roman function"));
    entries.push_back(integer_entry("domination_upper", BoundDirection::upper, upper, v,
                                    "label a minimum dominating set ceil(D/p)+1"));
    Verdict w = core;
    w.require(exact.optimal, "solver did not prove optimality");
    const int b0 = static_cast<int>(exact.witness.b0().size());
    entries.push_back(integer_entry("lowB0", BoundDirection::lower, lemma_lowB0(n, p, b0), w,
                                    "each non-zero vertex costs 1, each zero vertex 1/p, "
                                    "with B0 from the optimal witness"));
    report.exact = std::move(exact);
  }

  for (const auto& e : entries) {
    if (!e.applicable) continue;
    if (e.direction == BoundDirection::lower) {
      report.best_lower = std::max(report.best_lower.value_or(e.integer_value), e.integer_value);
    } else {
      report.best_upper = std::min(report.best_upper.value_or(e.integer_value), e.integer_value);
    }
  }
  return report;
}

}  // namespace pstr
