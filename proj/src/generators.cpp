#include "pstr/generators.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <random>
#include <stdexcept>
#include <vector>

#include "pstr/metrics.hpp"

namespace pstr {
namespace {

void require_positive(int value, const char* what) {
  if (value < 1) throw std::invalid_argument(std::string(what) + " must be >= 1");
}

// Hamiltonian cycle 0..18 plus one chord i -> i + kRobertsonChord[i] (mod 19).
constexpr int kRobertsonChord[19] = {8, 4, 7, 4, 8, 5, 7, 4, 7, 8, 4, 5, 7, 8, 4, 8, 4, 8, 4};

Graph build_robertson() {
  std::vector<Edge> edges;
  for (int i = 0; i < 19; ++i) {
    edges.emplace_back(i, (i + 1) % 19);
    edges.emplace_back(i, (i + kRobertsonChord[i]) % 19);
  }
  Graph g = Graph::from_edges(19, edges);
  const auto m = metrics(g);
  if (m.n != 19 || m.m != 38 || m.regular_degree != 4 || m.girth != 5) {
    throw std::logic_error("embedded Robertson graph failed validation");
  }
  return g;
}

Graph build_fig3_spider() {
  // 0, 1 hubs; hub h owns midpoints and leaves in its own block.
  std::vector<Edge> edges{{0, 1}};
  int next = 2;
  for (int hub = 0; hub < 2; ++hub) {
    for (int i = 0; i < 3; ++i) {
      const int mid = next++;
      const int leaf = next++;
      edges.emplace_back(hub, mid);
      edges.emplace_back(mid, leaf);
    }
  }
  return Graph::from_edges(14, edges);
}

std::vector<int> parse_ints(std::string_view s) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t end = s.find(',', pos);
    if (end == std::string_view::npos) end = s.size();
    auto tok = s.substr(pos, end - pos);
    int v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size() || tok.empty()) {
      throw std::invalid_argument("bad family parameter '" + std::string(tok) + "'");
    }
    out.push_back(v);
    pos = end + 1;
  }
  return out;
}

struct Generator {
  Graph operator()(const family::Path& f) const {
    require_positive(f.n, "path order");
    std::vector<Edge> e;
    for (int i = 0; i + 1 < f.n; ++i) e.emplace_back(i, i + 1);
    return Graph::from_edges(f.n, e);
  }
  Graph operator()(const family::Cycle& f) const {
    if (f.n < 3) throw std::invalid_argument("cycle order must be >= 3");
    std::vector<Edge> e;
    for (int i = 0; i < f.n; ++i) e.emplace_back(i, (i + 1) % f.n);
    return Graph::from_edges(f.n, e);
  }
  Graph operator()(const family::Star& f) const {
    require_positive(f.n, "star order");
    std::vector<Edge> e;
    for (int i = 1; i < f.n; ++i) e.emplace_back(0, i);
    return Graph::from_edges(f.n, e);
  }
  Graph operator()(const family::CompleteBipartite& f) const {
    require_positive(f.r, "r");
    require_positive(f.s, "s");
    std::vector<Edge> e;
    for (int i = 0; i < f.r; ++i) {
      for (int j = 0; j < f.s; ++j) e.emplace_back(i, f.r + j);
    }
    return Graph::from_edges(f.r + f.s, e);
  }
  Graph operator()(const family::DoubleStar& f) const {
    require_positive(f.r, "r");
    require_positive(f.s, "s");
    std::vector<Edge> e{{0, 1}};
    for (int i = 0; i < f.r; ++i) e.emplace_back(0, 2 + i);
    for (int j = 0; j < f.s; ++j) e.emplace_back(1, 2 + f.r + j);
    return Graph::from_edges(f.r + f.s + 2, e);
  }
  Graph operator()(const family::Edgeless& f) const {
    require_positive(f.n, "edgeless order");
    return Graph(f.n);
  }
  Graph operator()(const family::Robertson&) const { return robertson_graph(); }
  Graph operator()(const family::Fig3Spider&) const { return build_fig3_spider(); }
  Graph operator()(const family::RandomGnm& f) const { return random_gnm(f.n, f.m, f.seed); }
  Graph operator()(const family::Join& f) const {
    if (!f.a || !f.b) throw std::invalid_argument("join needs two operands");
    return join(generate(*f.a), generate(*f.b));
  }
};

struct Describer {
  std::string operator()(const family::Path& f) const { return "path:" + std::to_string(f.n); }
  std::string operator()(const family::Cycle& f) const { return "cycle:" + std::to_string(f.n); }
  std::string operator()(const family::Star& f) const { return "star:" + std::to_string(f.n); }
  std::string operator()(const family::CompleteBipartite& f) const {
    return "kbip:" + std::to_string(f.r) + "," + std::to_string(f.s);
  }
  std::string operator()(const family::DoubleStar& f) const {
    return "bistar:" + std::to_string(f.r) + "," + std::to_string(f.s);
  }
  std::string operator()(const family::Edgeless& f) const {
    return "edgeless:" + std::to_string(f.n);
  }
  std::string operator()(const family::Robertson&) const { return "robertson"; }
  std::string operator()(const family::Fig3Spider&) const { return "fig3_spider"; }
  std::string operator()(const family::RandomGnm& f) const {
    return "gnm:" + std::to_string(f.n) + "," + std::to_string(f.m) + "," +
           std::to_string(f.seed);
  }
  std::string operator()(const family::Join& f) const {
    return "join(" + describe(*f.a) + "," + describe(*f.b) + ")";
  }
};

}  // namespace

FamilySpec make_join(FamilySpec a, FamilySpec b) {
  return family::Join{std::make_shared<const FamilySpec>(std::move(a)),
                      std::make_shared<const FamilySpec>(std::move(b))};
}

Graph generate(const FamilySpec& spec) { return std::visit(Generator{}, spec); }

std::string describe(const FamilySpec& spec) { return std::visit(Describer{}, spec); }

std::optional<FamilySpec> parse_family_keyword(std::string_view text) {
  if (text == "robertson") return family::Robertson{};
  if (text == "fig3_spider") return family::Fig3Spider{};
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) return std::nullopt;
  const auto name = text.substr(0, colon);
  const auto args = parse_ints(text.substr(colon + 1));
  auto want = [&](std::size_t k) {
    if (args.size() != k) {
      throw std::invalid_argument(std::string(name) + " expects " + std::to_string(k) +
                                  " parameter(s)");
    }
  };
  if (name == "path") { want(1); return family::Path{args[0]}; }
  if (name == "cycle") { want(1); return family::Cycle{args[0]}; }
  if (name == "star") { want(1); return family::Star{args[0]}; }
  if (name == "edgeless") { want(1); return family::Edgeless{args[0]}; }
  if (name == "kbip") { want(2); return family::CompleteBipartite{args[0], args[1]}; }
  if (name == "bistar") { want(2); return family::DoubleStar{args[0], args[1]}; }
  if (name == "gnm") {
    want(3);
    return family::RandomGnm{args[0], args[1], static_cast<std::uint64_t>(args[2])};
  }
  return std::nullopt;
}

const Graph& robertson_graph() {
  static const Graph g = build_robertson();
  return g;
}

Graph random_gnm(int n, int m, std::uint64_t seed) {
  require_positive(n, "gnm order");
  const long long pairs = static_cast<long long>(n) * (n - 1) / 2;
  if (m < 0 || m > pairs) throw std::invalid_argument("gnm requires 0 <= m <= n(n-1)/2");
  std::vector<Edge> all;
  all.reserve(static_cast<std::size_t>(pairs));
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) all.emplace_back(u, v);
  }
  // Partial Fisher-Yates: the first m slots are a uniform m-subset.
  std::mt19937_64 rng(seed);
  for (int i = 0; i < m; ++i) {
    std::uniform_int_distribution<std::size_t> pick(static_cast<std::size_t>(i), all.size() - 1);
    std::swap(all[static_cast<std::size_t>(i)], all[pick(rng)]);
  }
  all.resize(static_cast<std::size_t>(m));
  return Graph::from_edges(n, all);
}

}  // namespace pstr
