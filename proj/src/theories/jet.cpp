#include "indep/theories/jet.hpp"

#include <algorithm>

#include "indep/field/expr.hpp"

namespace indep::theories {

JetDiffField::JetDiffField(unsigned characteristic, std::vector<Chain> chains, std::vector<Constant> constants)
    : chains_(std::move(chains)), constants_(std::move(constants))
{
    const field::PrimeField f(characteristic);
    std::vector<std::string> vars;
    for (std::size_t c = 0; c < chains_.size(); ++c) {
        if (chains_[c].order < 0) throw field::FieldError("negative chain order");
        for (int i = 0; i <= chains_[c].order; ++i) {
            vars.push_back(chains_[c].name + std::to_string(i));
            var_chain_.push_back(static_cast<int>(c));
            var_index_.push_back(i);
        }
    }
    for (const auto& k : constants_) {
        if (k.level < 0 || (characteristic == 0 && k.level > 0))
            throw field::FieldError("root levels need positive characteristic");
        vars.push_back(k.level == 0 ? k.name : k.name + "@" + std::to_string(k.level));
        var_chain_.push_back(-1);
        var_index_.push_back(0);
    }
    std::vector<std::string> sorted = vars;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw field::FieldError("duplicate variable name in differential field");
    ambient_ = FieldSpec::ambient(f, vars);
    int v = static_cast<int>(vars.size() - constants_.size());
    for (const auto& k : constants_) {
        const RatFunc u = ambient_.var(v++);
        long power = 1;
        for (int lvl = k.level; lvl >= 0; --lvl) {
            if (lvl < k.level) aliases_.emplace(lvl == 0 ? k.name : k.name + "@" + std::to_string(lvl), u.pow(static_cast<int>(power)));
            power *= characteristic;
        }
    }
}

RatFunc JetDiffField::parse(const std::string& text) const
{
    return field::parse_expr(text, ambient_.vars, ambient_.field, aliases_);
}

RatFunc JetDiffField::derive(const RatFunc& f) const
{
    RatFunc acc = ambient_.zero();
    for (int v = 0; v < ambient_.nvars(); ++v) {
        if (!f.involves(v) || var_chain_[v] < 0) continue;
        const RatFunc d = f.derivative(v);
        if (d.is_zero()) continue;
        if (var_index_[v] == chains_[var_chain_[v]].order)
            throw HorizonError("derivation of " + ambient_.vars[v] + " is beyond the truncation horizon");
        acc += d * ambient_.var(v + 1);
    }
    return acc;
}

std::optional<int> JetDiffField::headroom(const RatFunc& f) const
{
    std::optional<int> out;
    for (int v = 0; v < ambient_.nvars(); ++v) {
        if (!f.involves(v) || var_chain_[v] < 0) continue;
        const int room = chains_[var_chain_[v]].order - var_index_[v];
        out = out ? std::min(*out, room) : room;
    }
    return out;
}

FieldSpec JetDiffField::spec(std::vector<RatFunc> gens) const
{
    FieldSpec s = FieldSpec::prime(ambient_.field, ambient_.vars);
    for (auto& g : gens) {
        s.check_element(g);
        s.gens.push_back(std::move(g));
    }
    return s;
}

std::vector<RatFunc> diff_generated(const JetDiffField& k, const std::vector<RatFunc>& a, int order)
{
    if (order < 0) throw field::FieldError("negative order");
    for (const auto& x : a) {
        const auto room = k.headroom(x);
        if (room && *room < order)
            throw HorizonError("order " + std::to_string(order) + " exceeds the headroom of " + k.render(x));
    }
    std::vector<RatFunc> out;
    auto push = [&](const RatFunc& x) {
        if (x.is_constant()) return;
        if (std::find(out.begin(), out.end(), x) == out.end()) out.push_back(x);
    };
    // Declared order: all of A, then δA, then δ²A.
    std::vector<RatFunc> layer = a;
    for (const auto& x : layer) push(x);
    for (int o = 1; o <= order; ++o) {
        for (auto& x : layer) x = k.derive(x);
        for (const auto& x : layer) push(x);
    }
    return out;
}

std::optional<RatFunc> DerivationTable::value(const RatFunc& g) const
{
    for (const auto& [x, v] : entries)
        if (x == g) return v;
    return std::nullopt;
}

DerivationTable DerivationTable::of(const JetDiffField& k, const std::vector<RatFunc>& gens)
{
    DerivationTable t;
    for (const auto& g : gens) t.entries.emplace_back(g, k.derive(g));
    return t;
}

}  // namespace indep::theories
