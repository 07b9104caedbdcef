#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace indep::cli {

struct Value {
    enum class Type { set, word, number, flag };
    Type type = Type::flag;
    std::vector<std::string> items;  // set members, whitespace-free
    std::string text;                // word or number

    bool operator==(const Value&) const = default;
};

struct Param {
    std::string key;
    Value value;
    bool operator==(const Param& o) const { return key == o.key && value == o.value; }
};

struct Query {
    std::string kind;
    std::string target;
    std::vector<Param> params;
    int line = 0, col = 0;

    const Param* find(const std::string& key) const;
    bool operator==(const Query& o) const { return kind == o.kind && target == o.target && params == o.params; }
};

struct Decl {
    enum class Kind { forest, field, theory };
    Kind kind = Kind::forest;
    std::string theory;  // dcf0, scf, dcfp
    std::string name;
    std::vector<std::string> vertices;
    std::vector<std::pair<std::string, std::string>> edges;
    std::optional<unsigned> characteristic;
    std::vector<std::string> vars;
    std::vector<std::pair<std::string, int>> chains;
    std::vector<std::pair<std::string, int>> constants;
    int line = 0, col = 0;

    bool operator==(const Decl& o) const
    {
        return kind == o.kind && theory == o.theory && name == o.name && vertices == o.vertices && edges == o.edges &&
               characteristic == o.characteristic && vars == o.vars && chains == o.chains && constants == o.constants;
    }
};

using Statement = std::variant<Decl, Query>;

struct Script {
    std::vector<Statement> statements;

    std::vector<const Decl*> decls() const;
    std::vector<const Query*> queries() const;
    bool operator==(const Script&) const = default;
};

std::string render(const Value& v);
std::string render(const Query& q);
std::string render(const Decl& d);
std::string render(const Script& s);

}  // namespace indep::cli
