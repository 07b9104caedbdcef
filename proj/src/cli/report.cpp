#include <sstream>

#include "indep/cli/runner.hpp"

namespace indep::cli {

using json = nlohmann::ordered_json;

namespace {

json to_json(const QueryResult& r)
{
    json j;
    j["index"] = r.index;
    j["query"] = r.query;
    j["kind"] = r.kind;
    j["status"] = r.status;
    if (r.bound) j["bound"] = *r.bound;
    if (!r.detail.empty()) j[r.status == "fails" ? "witness" : "result"] = r.detail;
    if (!r.note.empty()) j["note"] = r.note;
    if (r.replay) j["replay"] = *r.replay;
    if (r.error) j["error"] = *r.error;
    if (r.millis) j["millis"] = *r.millis;
    return j;
}

std::string summary(const json& detail)
{
    std::string out;
    for (const auto& [k, v] : detail.items()) {
        if (!out.empty()) out += " ";
        out += k + "=" + (v.is_string() ? v.get<std::string>() : v.dump());
    }
    return out;
}

}  // namespace

std::string report(const std::vector<QueryResult>& results, Format format, const RunConfig& config)
{
    if (format == Format::json) {
        json j;
        j["schema"] = "indep-report/1";
        j["config"] = {{"bound", config.bound},
                       {"order", config.order},
                       {"iterations", config.iterations},
                       {"seed", config.seed},
                       {"limit_vertices", config.limit_vertices}};
        json arr = json::array();
        for (const auto& r : results) arr.push_back(to_json(r));
        j["results"] = std::move(arr);
        return j.dump(2) + "\n";
    }
    std::ostringstream os;
    if (results.empty()) os << "no queries\n";
    for (const auto& r : results) {
        os << "[" << r.index << "] " << r.query << "\n    " << r.status;
        if (r.bound) os << " (bound " << *r.bound << ")";
        if (r.error) os << ": " << *r.error;
        os << "\n";
        if (!r.detail.empty()) os << "    " << summary(r.detail) << "\n";
        if (!r.note.empty()) os << "    note: " << r.note << "\n";
        if (r.replay) os << "    replay: " << *r.replay << "\n";
        if (r.millis) os << "    " << *r.millis << " ms\n";
    }
    return os.str();
}

}  // namespace indep::cli
