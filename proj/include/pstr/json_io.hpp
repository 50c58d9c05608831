#pragma once

#include <json.hpp>

#include "pstr/bounds.hpp"
#include "pstr/families.hpp"
#include "pstr/heuristics.hpp"
#include "pstr/labeling.hpp"
#include "pstr/metrics.hpp"
#include "pstr/reduction.hpp"
#include "pstr/solver.hpp"

namespace pstr {

// Insertion-ordered so that the same result always dumps to the same bytes.
using Json = nlohmann::ordered_json;

Json to_json(const GraphMetrics& m);
Json to_json(const LabelFunction& f);
Json to_json(const ValidationReport& r);
/// Search counters and timing are schedule dependent; they are only emitted
/// when `with_stats` is set.
Json to_json(const SolveResult& r, bool with_stats);
Json to_json(const BoundEntry& e);
Json to_json(const BoundsReport& r, bool with_stats);
Json to_json(const TrialStats& s);
Json to_json(const FamilyValue& v);
Json to_json(const SmallValueClass& c);
Json to_json(const X3CInstance& inst);
Json to_json(const ReductionResult& r);
Json to_json(const EquivalenceReport& r);

}  // namespace pstr
