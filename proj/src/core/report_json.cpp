#include "indep/core/report_json.hpp"

namespace indep {

nlohmann::ordered_json to_json(const AxiomReport& report)
{
    nlohmann::ordered_json j;
    j["axiom"] = std::string(to_string(report.axiom));
    j["checked"] = report.instances_checked;
    j["inconclusive"] = report.inconclusive;
    j["violations"] = report.violations;
    auto ces = nlohmann::ordered_json::array();
    for (const auto& ce : report.counterexamples) {
        nlohmann::ordered_json c;
        c["index"] = ce.structure_index;
        c["structure"] = ce.structure;
        c["sets"] = ce.sets;
        c["detail"] = ce.detail;
        ces.push_back(std::move(c));
    }
    j["counterexamples"] = std::move(ces);
    return j;
}

}  // namespace indep
