#pragma once

#include <json.hpp>

#include "indep/core/axioms.hpp"

namespace indep {

// {"axiom": ..., "checked": ..., "inconclusive": ..., "violations": ..., "counterexamples": [...]}
nlohmann::ordered_json to_json(const AxiomReport& report);

}  // namespace indep
