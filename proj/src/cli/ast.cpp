#include "indep/cli/ast.hpp"

#include <sstream>

namespace indep::cli {

const Param* Query::find(const std::string& key) const
{
    for (const auto& p : params)
        if (p.key == key) return &p;
    return nullptr;
}

std::vector<const Decl*> Script::decls() const
{
    std::vector<const Decl*> out;
    for (const auto& s : statements)
        if (auto* d = std::get_if<Decl>(&s)) out.push_back(d);
    return out;
}

std::vector<const Query*> Script::queries() const
{
    std::vector<const Query*> out;
    for (const auto& s : statements)
        if (auto* q = std::get_if<Query>(&s)) out.push_back(q);
    return out;
}

std::string render(const Value& v)
{
    switch (v.type) {
    case Value::Type::set: {
        std::string out = "{";
        for (std::size_t i = 0; i < v.items.size(); ++i) out += (i ? ", " : "") + v.items[i];
        return out + "}";
    }
    case Value::Type::word:
    case Value::Type::number:
        return v.text;
    case Value::Type::flag:
        return "";
    }
    return "";
}

std::string render(const Query& q)
{
    std::string out = "query " + q.kind + " " + q.target;
    for (const auto& p : q.params) {
        out += " " + p.key;
        if (p.value.type != Value::Type::flag) out += "=" + render(p.value);
    }
    return out + ";";
}

static std::string render_pairs(const std::vector<std::pair<std::string, int>>& xs)
{
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i)
        out += (i ? ", " : "") + xs[i].first + ":" + std::to_string(xs[i].second);
    return out;
}

static std::string render_words(const std::vector<std::string>& xs)
{
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? " " : "") + xs[i];
    return out;
}

std::string render(const Decl& d)
{
    std::ostringstream os;
    switch (d.kind) {
    case Decl::Kind::forest: {
        os << "structure forest " << d.name << " { vertices: " << render_words(d.vertices) << "; edges: ";
        for (std::size_t i = 0; i < d.edges.size(); ++i)
            os << (i ? ", " : "") << d.edges[i].first << "-" << d.edges[i].second;
        os << "; }";
        break;
    }
    case Decl::Kind::field:
        os << "field " << d.name << " { char: " << d.characteristic.value_or(0) << "; vars: " << render_words(d.vars)
           << "; }";
        break;
    case Decl::Kind::theory:
        os << "theory " << d.theory << " " << d.name << " {";
        if (d.characteristic) os << " char: " << *d.characteristic << ";";
        if (!d.vars.empty()) os << " vars: " << render_words(d.vars) << ";";
        if (!d.chains.empty()) os << " chains: " << render_pairs(d.chains) << ";";
        if (!d.constants.empty()) os << " constants: " << render_pairs(d.constants) << ";";
        os << " }";
        break;
    }
    return os.str();
}

std::string render(const Script& s)
{
    std::string out;
    for (const auto& st : s.statements) {
        out += std::visit([](const auto& x) { return render(x); }, st);
        out += "\n";
    }
    return out;
}

}  // namespace indep::cli
