#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "indep/cli/ast.hpp"
#include "indep/cli/parser.hpp"
#include "indep/field/fieldspec.hpp"
#include "indep/pseudoplane/forest.hpp"
#include "indep/theories/jet.hpp"

namespace indep::cli {

struct RunConfig {
    int bound = 4;
    int order = 1;
    int iterations = 4;
    unsigned long seed = 1;
    int limit_vertices = 5;
    bool parallel = false;
    bool timing = false;
};

struct QueryResult {
    std::size_t index = 0;
    std::string query;   // canonical echo
    std::string kind;
    std::string status;  // holds, fails, inconclusive, ok, error
    std::optional<int> bound;
    nlohmann::ordered_json detail = nlohmann::ordered_json::object();
    std::string note;
    std::optional<std::string> replay;  // re-evaluable query reproducing a Fails
    std::optional<std::string> error;
    std::optional<double> millis;
};

struct Target {
    TargetType type = TargetType::forest;
    std::optional<pseudoplane::Forest> forest;
    std::optional<field::FieldSpec> ambient;
    std::shared_ptr<const theories::JetDiffField> jet;

    field::RatFunc parse(const std::string& text) const;
    std::vector<field::RatFunc> parse(const std::vector<std::string>& items) const;
    field::FieldSpec spec(std::vector<field::RatFunc> gens) const;
    std::string render(const field::RatFunc& f) const;
};

// Builds a target from a declaration; throws ParseError for ill-formed blocks.
Target build_target(const Decl& d);

class Runner {
public:
    Runner(const Script& script, RunConfig config);

    std::vector<QueryResult> run() const;
    QueryResult run_query(const Query& q, std::size_t index) const;

    const RunConfig& config() const { return config_; }

private:
    void evaluate(const Query& q, QueryResult& r) const;

    const Script& script_;
    RunConfig config_;
    std::map<std::string, Target> targets_;
};

enum class Format { json, text };

std::string report(const std::vector<QueryResult>& results, Format format, const RunConfig& config);

}  // namespace indep::cli
