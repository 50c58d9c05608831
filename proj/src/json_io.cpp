#include "pstr/json_io.hpp"

#include <chrono>

namespace pstr {

Json to_json(const GraphMetrics& m) {
  Json j;
  j["n"] = m.n;
  j["m"] = m.m;
  j["max_degree"] = m.max_degree;
  j["min_degree"] = m.min_degree;
  if (m.girth) {
    j["girth"] = *m.girth;
  } else {
    j["girth"] = "acyclic";
  }
  j["connected"] = m.connected;
  j["bipartite"] = m.bipartite;
  j["chordal"] = m.chordal;
  if (m.regular_degree) {
    j["regular_degree"] = *m.regular_degree;
  } else {
    j["regular_degree"] = "not regular";
  }
  return j;
}

Json to_json(const LabelFunction& f) {
  Json arr = Json::array();
  for (int x : f.labels()) arr.push_back(x);
  return arr;
}

Json to_json(const ValidationReport& r) {
  Json j;
  j["valid"] = r.valid;
  j["weight"] = r.weight;
  j["max_label"] = r.max_label;
  Json vs = Json::array();
  for (const auto& v : r.violations) {
    vs.push_back({{"vertex", v.vertex}, {"reason", std::string(reason_name(v.reason))}});
  }
  j["violations"] = std::move(vs);
  return j;
}

Json to_json(const SolveResult& r, bool with_stats) {
  Json j;
  j["value"] = r.value;
  j["optimal"] = r.optimal;
  j["witness"] = to_json(r.witness);
  if (with_stats) {
    j["stats"] = {
        {"subsets_examined", r.stats.subsets_examined},
        {"pruned", r.stats.pruned},
        {"elapsed_ms",
         std::chrono::duration<double, std::milli>(r.stats.elapsed).count()},
    };
  }
  return j;
}

Json to_json(const BoundEntry& e) {
  Json j;
  j["name"] = e.name;
  j["direction"] = std::string(direction_name(e.direction));
  j["value"] = e.value;
  j["integer_value"] = e.integer_value;
  j["applicable"] = e.applicable;
  j["reason"] = e.reason;
  j["basis"] = e.basis;
  return j;
}

Json to_json(const BoundsReport& r, bool with_stats) {
  Json j;
  Json entries = Json::array();
  for (const auto& e : r.entries) entries.push_back(to_json(e));
  j["entries"] = std::move(entries);
  j["best_lower"] = r.best_lower ? Json(*r.best_lower) : Json(nullptr);
  j["best_upper"] = r.best_upper ? Json(*r.best_upper) : Json(nullptr);
  if (r.exact) j["exact"] = to_json(*r.exact, with_stats);
  return j;
}

Json to_json(const TrialStats& s) {
  Json j;
  j["xi"] = s.xi;
  j["trials"] = s.trials;
  j["seed"] = s.seed;
  j["mean_weight"] = s.mean_weight;
  j["std_error"] = s.std_error;
  j["best_weight"] = s.best.weight();
  j["best"] = to_json(s.best);
  j["weights"] = s.weights;
  return j;
}

Json to_json(const FamilyValue& v) {
  Json j;
  j["family"] = v.family;
  j["parameters"] = v.parameters;
  j["p"] = v.p;
  j["applicable"] = v.applicable;
  j["value"] = v.applicable ? Json(v.value) : Json(nullptr);
  j["reason"] = v.reason;
  return j;
}

Json to_json(const SmallValueClass& c) {
  Json j;
  j["kind"] = std::string(small_value_name(c.kind));
  if (c.kind == SmallValue::four) j["case"] = c.four_case;
  j["reason"] = c.reason;
  return j;
}

Json to_json(const X3CInstance& inst) {
  Json clauses = Json::array();
  for (const auto& c : inst.clauses) clauses.push_back({c[0], c[1], c[2]});
  return {{"q", inst.q}, {"clauses", std::move(clauses)}};
}

Json to_json(const ReductionResult& r) {
  Json j;
  j["variant"] = std::string(variant_name(r.variant));
  j["p"] = r.p;
  j["vertices"] = r.graph.order();
  j["edges"] = r.graph.size();
  j["threshold"] = r.threshold;
  Json roles = Json::array();
  for (const auto& role : r.roles) roles.push_back(role_name(role));
  j["roles"] = std::move(roles);
  return j;
}

Json to_json(const EquivalenceReport& r) {
  Json j;
  j["has_cover"] = r.has_cover;
  j["cover"] = r.cover ? Json(*r.cover) : Json(nullptr);
  j["value"] = r.value;
  j["threshold"] = r.threshold;
  j["vertices"] = r.vertices;
  j["equivalent"] = r.equivalent;
  return j;
}

}  // namespace pstr
