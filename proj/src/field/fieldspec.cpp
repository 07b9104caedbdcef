#include "indep/field/fieldspec.hpp"

#include "indep/field/expr.hpp"

namespace indep::field {

FieldSpec FieldSpec::prime(PrimeField f, std::vector<std::string> vars) { return {f, std::move(vars), {}}; }

FieldSpec FieldSpec::ambient(PrimeField f, std::vector<std::string> vars)
{
    FieldSpec s{f, std::move(vars), {}};
    s.gens = s.ambient_vars();
    return s;
}

FieldSpec FieldSpec::generated(PrimeField f, std::vector<std::string> vars, std::vector<RatFunc> gens)
{
    FieldSpec s{f, std::move(vars), std::move(gens)};
    for (const auto& g : s.gens) s.check_element(g);
    return s;
}

RatFunc FieldSpec::parse(const std::string& text) const { return parse_expr(text, vars, field); }

std::vector<RatFunc> FieldSpec::ambient_vars() const
{
    std::vector<RatFunc> out;
    for (int i = 0; i < nvars(); ++i) out.push_back(var(i));
    return out;
}

std::vector<RatFunc> FieldSpec::nonconstant_gens() const
{
    std::vector<RatFunc> out;
    for (const auto& g : gens)
        if (!g.is_constant()) out.push_back(g);
    return out;
}

bool FieldSpec::is_full() const
{
    for (int i = 0; i < nvars(); ++i) {
        const RatFunc v = var(i);
        bool found = false;
        for (const auto& g : gens) found = found || g == v;
        if (!found) return false;
    }
    return true;
}

FieldSpec FieldSpec::adjoin(const std::vector<RatFunc>& extra) const
{
    FieldSpec out = *this;
    for (const auto& e : extra) {
        check_element(e);
        out.gens.push_back(e);
    }
    return out;
}

std::string FieldSpec::render(const std::vector<RatFunc>& fs) const
{
    std::string out = "[";
    for (std::size_t i = 0; i < fs.size(); ++i) {
        if (i) out += ", ";
        out += render(fs[i]);
    }
    return out + "]";
}

void FieldSpec::check_compatible(const FieldSpec& o) const
{
    if (field != o.field) throw FieldError("mismatched characteristic");
    if (vars != o.vars) throw FieldError("mismatched ambient variables");
}

void FieldSpec::check_element(const RatFunc& f) const
{
    if (f.field() != field || f.nvars() != nvars()) throw FieldError("element outside the ambient field");
}

}  // namespace indep::field
