#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "indep/cli/ast.hpp"

namespace indep::cli {

class ParseError : public std::runtime_error {
public:
    ParseError(int line, int col, std::string message, std::vector<std::string> expected = {});

    int line() const { return line_; }
    int col() const { return col_; }
    const std::string& message() const { return message_; }
    const std::vector<std::string>& expected() const { return expected_; }

private:
    int line_, col_;
    std::string message_;
    std::vector<std::string> expected_;
};

Script parse(std::string_view source);

// Target category a query kind needs; used by the parser and the runner.
enum class TargetType { forest, field, dcf0, scf, dcfp, forests };

struct KindInfo {
    std::string name;
    std::vector<TargetType> targets;
    std::vector<std::pair<std::string, Value::Type>> keys;
    std::vector<std::string> required;
};

const std::vector<KindInfo>& query_kinds();
const KindInfo* find_kind(std::string_view name);

}  // namespace indep::cli
