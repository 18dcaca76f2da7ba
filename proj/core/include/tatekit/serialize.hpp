#pragma once

#include <json.hpp>

#include "tatekit/bft.hpp"
#include "tatekit/cochains.hpp"
#include "tatekit/tn.hpp"

namespace tatekit {

using Json = nlohmann::json;

// matrices as row-major arrays of arrays; entries that fit in 64 bits are
// numbers, anything larger becomes a decimal string
Json to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const Json& j);
Json to_json(const IntVec& v);
IntVec vec_from_json(const Json& j);

Json to_json(const PresentedAbGroup& g);          // {"torsion": [...], "free_rank": r}
Json group_to_json(const FinGroup& g);            // {"degree": n, "generators": [[...], ...]}
FinGroup group_from_json(const Json& j, unsigned max_order = FinGroup::kDefaultMaxOrder);
Json gset_to_json(const GSet& x);                 // {"size": m, "generator_action": [[...], ...]}
GSet gset_from_json(const FinGroup& g, const Json& j);
Json module_to_json(const GModule& m);            // {"rank", "relations", "generator_action"}
GModule module_from_json(const FinGroup& g, const Json& j);

Json cocycle1_to_json(const Cocycle1Table& z);    // {"sigma": [...], ...}
Cocycle1Table cocycle1_from_json(const Json& j, unsigned order, std::size_t rank);
Json cocycle2_to_json(const Cocycle2Table& z);    // {"sigma,tau": [...], ...}
Cocycle2Table cocycle2_from_json(const Json& j, unsigned order, std::size_t rank);

Json model_to_json(const GlobalModel& m);         // group + places + S orbit indices
GlobalModel model_from_json(const Json& j);
Json tower_to_json(const TowerModel& t);
TowerModel tower_from_json(const Json& j);

/// A scenario: named fixtures plus a task list.  Running it produces a
/// report keyed by task id.
struct Scenario {
  Json raw;
};
Scenario parse_scenario(const Json& j);  // throws ParseError / UnresolvedReference
struct RunReport {
  Json by_task;       // task id -> result or {"error": ...}
  bool any_error = false;
  Json to_json() const;
};
RunReport run_scenario(const Scenario& s);

}  // namespace tatekit
