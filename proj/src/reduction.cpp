#include "pstr/reduction.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace pstr {
namespace {

std::vector<std::vector<long long>> numeric_lines(std::string_view text) {
  std::vector<std::vector<long long>> out;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::vector<long long> row;
    std::string tok;
    while (fields >> tok) {
      std::size_t used = 0;
      long long value = 0;
      try {
        value = std::stoll(tok, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != tok.size()) throw std::invalid_argument("expected integer, got '" + tok + "'");
      row.push_back(value);
    }
    if (!row.empty()) out.push_back(std::move(row));
  }
  return out;
}

}  // namespace

void check_instance(const X3CInstance& inst) {
  if (inst.q < 1) throw std::invalid_argument("q must be >= 1");
  if (inst.clauses.empty()) throw std::invalid_argument("instance needs at least one clause");
  for (std::size_t j = 0; j < inst.clauses.size(); ++j) {
    const auto& c = inst.clauses[j];
    for (int x : c) {
      if (x < 1 || x > 3 * inst.q) {
        throw std::invalid_argument("clause " + std::to_string(j) + ": element " +
                                    std::to_string(x) + " outside 1.." + std::to_string(3 * inst.q));
      }
    }
    if (c[0] == c[1] || c[0] == c[2] || c[1] == c[2]) {
      throw std::invalid_argument("clause " + std::to_string(j) + ": duplicate element");
    }
  }
}

X3CInstance parse_x3c(std::string_view text) {
  const auto lines = numeric_lines(text);
  if (lines.empty() || lines[0].size() != 2) throw std::invalid_argument("expected header 'q t'");
  const long long q = lines[0][0];
  const long long t = lines[0][1];
  if (q < 1 || t < 1) throw std::invalid_argument("q and t must be >= 1");
  if (static_cast<long long>(lines.size()) - 1 != t) {
    throw std::invalid_argument("header announces " + std::to_string(t) + " clauses, found " +
                                std::to_string(lines.size() - 1));
  }
  X3CInstance inst;
  inst.q = static_cast<int>(q);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (lines[i].size() != 3) throw std::invalid_argument("each clause needs three elements");
    inst.clauses.push_back({static_cast<int>(lines[i][0]), static_cast<int>(lines[i][1]),
                            static_cast<int>(lines[i][2])});
  }
  check_instance(inst);
  return inst;
}

std::string write_x3c(const X3CInstance& inst) {
  std::ostringstream out;
  out << inst.q << ' ' << inst.clauses.size() << '\n';
  for (const auto& c : inst.clauses) out << c[0] << ' ' << c[1] << ' ' << c[2] << '\n';
  return out.str();
}

std::optional<std::vector<int>> x3c_has_exact_cover(const X3CInstance& inst) {
  check_instance(inst);
  const int elements = 3 * inst.q;
  std::vector<bool> covered(static_cast<std::size_t>(elements + 1), false);
  std::vector<int> chosen;

  auto fits = [&](const std::array<int, 3>& c) {
    return !covered[c[0]] && !covered[c[1]] && !covered[c[2]];
  };
  auto mark = [&](const std::array<int, 3>& c, bool on) {
    for (int x : c) covered[x] = on;
  };
  auto search = [&](auto&& self) -> bool {
    int first = 1;
    while (first <= elements && covered[first]) ++first;
    if (first > elements) return true;
    for (std::size_t j = 0; j < inst.clauses.size(); ++j) {
      const auto& c = inst.clauses[j];
      if (std::find(c.begin(), c.end(), first) == c.end() || !fits(c)) continue;
      mark(c, true);
      chosen.push_back(static_cast<int>(j));
      if (self(self)) return true;
      chosen.pop_back();
      mark(c, false);
    }
    return false;
  };
  if (!search(search)) return std::nullopt;
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

std::optional<ReductionVariant> variant_from_name(std::string_view name) {
  if (name == "bipartite") return ReductionVariant::bipartite;
  if (name == "chordal") return ReductionVariant::chordal;
  return std::nullopt;
}

std::string_view variant_name(ReductionVariant v) {
  return v == ReductionVariant::bipartite ? "bipartite" : "chordal";
}

std::string role_name(const VertexRole& role) {
  switch (role.kind) {
    case VertexRole::Kind::element: return "x" + std::to_string(role.index + 1);
    case VertexRole::Kind::clause: return "C" + std::to_string(role.index + 1);
    case VertexRole::Kind::hub: return "z" + std::to_string(role.index + 1);
    case VertexRole::Kind::pendant:
      return "h" + std::to_string(role.leaf + 1) + "_" + std::to_string(role.index + 1);
  }
  return "?";
}

Vertex ReductionResult::clause_vertex(int j) const { return 3 * instance.q + j * (2 * p + 1); }

Vertex ReductionResult::hub_vertex(int j) const { return clause_vertex(j) + 1; }

ReductionResult build_reduction(const X3CInstance& inst, int p, ReductionVariant variant) {
  if (p < 3) throw std::invalid_argument("the reduction needs p >= 3");
  check_instance(inst);
  ReductionResult res;
  res.instance = inst;
  res.p = p;
  res.variant = variant;
  const int q = inst.q;
  const int t = static_cast<int>(inst.clauses.size());
  const int n = 3 * q + t * (2 * p + 1);

  for (int i = 0; i < 3 * q; ++i) res.roles.push_back({VertexRole::Kind::element, i, -1});
  std::vector<Edge> edges;
  for (int j = 0; j < t; ++j) {
    const Vertex clause = res.clause_vertex(j);
    const Vertex hub = res.hub_vertex(j);
    res.roles.push_back({VertexRole::Kind::clause, j, -1});
    res.roles.push_back({VertexRole::Kind::hub, j, -1});
    for (int x : inst.clauses[j]) edges.emplace_back(x - 1, clause);
    edges.emplace_back(clause, hub);
    for (int l = 0; l < 2 * p - 1; ++l) {
      res.roles.push_back({VertexRole::Kind::pendant, j, l});
      edges.emplace_back(hub, hub + 1 + l);
    }
  }
  if (variant == ReductionVariant::chordal) {
    for (int j = 0; j < t; ++j) {
      for (int k = j + 1; k < t; ++k) edges.emplace_back(res.clause_vertex(j), res.clause_vertex(k));
    }
  }
  res.graph = Graph::from_edges(n, edges);
  res.threshold = 2LL * q + 3LL * t;
  return res;
}

LabelFunction proof_labeling(const ReductionResult& res, const std::vector<int>& cover) {
  const auto& inst = res.instance;
  const int t = static_cast<int>(inst.clauses.size());
  std::vector<int> hits(static_cast<std::size_t>(3 * inst.q + 1), 0);
  std::vector<bool> in_cover(static_cast<std::size_t>(t), false);
  for (int j : cover) {
    if (j < 0 || j >= t || in_cover[j]) throw std::invalid_argument("cover has a bad clause index");
    in_cover[j] = true;
    for (int x : inst.clauses[j]) ++hits[x];
  }
  for (int x = 1; x <= 3 * inst.q; ++x) {
    if (hits[x] != 1) throw std::invalid_argument("not an exact cover");
  }
  std::vector<int> labels(static_cast<std::size_t>(res.graph.order()), 0);
  for (int j = 0; j < t; ++j) {
    labels[res.hub_vertex(j)] = 3;
    if (in_cover[j]) labels[res.clause_vertex(j)] = 2;
  }
  return LabelFunction(std::move(labels));
}

EquivalenceReport verify_reduction_equivalence(const X3CInstance& inst, int p,
                                               ReductionVariant variant,
                                               const SolverConfig& cfg) {
  const ReductionResult res = build_reduction(inst, p, variant);
  if (res.graph.order() > kMaxVerifiedReductionOrder) {
    throw std::invalid_argument("gadget graph has " + std::to_string(res.graph.order()) +
                                " vertices; exact verification is limited to " +
                                std::to_string(kMaxVerifiedReductionOrder));
  }
  EquivalenceReport report;
  report.cover = x3c_has_exact_cover(inst);
  report.has_cover = report.cover.has_value();
  report.value = solve_exact(res.graph, p, cfg).value;
  report.threshold = res.threshold;
  report.vertices = res.graph.order();
  report.equivalent = report.has_cover == (report.value <= report.threshold);
  return report;
}

}  // namespace pstr
