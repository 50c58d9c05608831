#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "cover_search.hpp"
#include "pstr/solver.hpp"

namespace pstr {

CoverInstance make_cover_instance(const Graph& g, const VertexSet& zero_set, int p) {
  CoverInstance inst;
  inst.elements = zero_set.members();
  for (Vertex v = 0; v < g.order(); ++v) {
    if (zero_set.contains(v)) continue;
    CoverCandidate cand{v, {}, 0};
    for (Vertex w : g.neighbors(v)) {
      if (zero_set.contains(w)) cand.covered.push_back(w);
    }
    if (cand.covered.empty()) continue;
    cand.cost = threshold(g, zero_set, v, p) - 1;
    inst.candidates.push_back(std::move(cand));
  }
  return inst;
}

std::optional<CoverSolution> min_weight_cover(const CoverInstance& inst, int budget) {
  if (inst.elements.size() > 64 || inst.candidates.size() > 64) {
    throw std::invalid_argument("min_weight_cover supports at most 64 elements and candidates");
  }
  std::map<Vertex, int> slot;
  for (Vertex e : inst.elements) slot.emplace(e, static_cast<int>(slot.size()));

  std::vector<std::size_t> order(inst.candidates.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return inst.candidates[a].vertex < inst.candidates[b].vertex;
  });

  detail::MaskCover problem;
  for (const auto& [e, i] : slot) problem.elements |= detail::bit(i);
  for (std::size_t idx : order) {
    const auto& cand = inst.candidates[idx];
    if (cand.cost < 0) throw std::invalid_argument("negative candidate cost");
    detail::Mask m = 0;
    for (Vertex e : cand.covered) {
      auto it = slot.find(e);
      if (it != slot.end()) m |= detail::bit(it->second);
    }
    problem.covers.push_back(m);
    problem.costs.push_back(cand.cost);
  }

  detail::CoverSearch search(problem);
  const auto found = search.run(budget);
  if (!found.found) return std::nullopt;
  CoverSolution out;
  out.cost = found.cost;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (found.chosen & detail::bit(static_cast<int>(i))) {
      out.chosen.push_back(inst.candidates[order[i]].vertex);
    }
  }
  return out;
}

}  // namespace pstr
