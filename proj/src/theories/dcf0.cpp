#include "indep/theories/dcf0.hpp"

#include <algorithm>

namespace indep::theories {

using field::annihilator_search;
using field::transcendence_degree;

namespace {

std::vector<RatFunc> with_base(std::vector<RatFunc> xs, const std::vector<RatFunc>& base)
{
    for (const auto& b : base)
        if (std::find(xs.begin(), xs.end(), b) == xs.end()) xs.push_back(b);
    return xs;
}

}  // namespace

Verdict<DependenceWitness> dcf0_indep(const DiffFieldSpec& l, const DiffFieldSpec& m, const DiffFieldSpec& k, int order,
                                      int bound)
{
    using V = Verdict<DependenceWitness>;
    const JetDiffField& jf = *k.field;
    if (l.field != k.field || m.field != k.field) throw field::FieldError("specs from different differential fields");
    if (!k.certified_rac) throw field::PreconditionError("base is not certified relatively algebraically closed");
    const auto ck = diff_generated(jf, k.gens, order);
    const FieldSpec base = jf.spec(ck);
    const auto cl = diff_generated(jf, with_base(l.gens, k.gens), order);
    const auto cm = diff_generated(jf, with_base(m.gens, k.gens), order);
    // The flag is validated inside the compositum of the two closures.
    const auto reg = field::regular_upto(base, jf.spec(with_base(cl, cm)), bound);
    if (reg.is_fails())
        throw field::PreconditionError("base is not relatively algebraically closed: " + jf.render(reg.witness->element));
    const auto tl = transcendence_degree(cl, base, bound);
    const auto tm = transcendence_degree(cm, base, bound);
    auto both = cl;
    both.insert(both.end(), cm.begin(), cm.end());
    const auto tlm = transcendence_degree(both, base, bound);
    const Status conclusive = conjoin(conjoin(tl.status, tm.status), tlm.status);
    if (tlm.count == tl.count + tm.count) {
        if (conclusive == Status::holds && !reg.is_inconclusive()) return V::holds(bound);
        return V::inconclusive(bound, "transcendence degrees not certified");
    }
    if (conclusive != Status::holds) return V::inconclusive(bound, "transcendence degrees not certified");
    DependenceWitness w;
    for (auto i : tl.basis) w.tuple.push_back(cl[i]);
    for (auto i : tm.basis) w.tuple.push_back(cm[i]);
    const auto ann = annihilator_search(w.tuple, base, bound);
    if (ann.is_fails()) w.annihilator = *ann.witness;
    auto v = V::fails(std::move(w), bound);
    if (reg.is_inconclusive()) v.note = "base regularity only bounded: " + reg.note;
    return v;
}

Status table_consistent(const DerivationTable& t, const FieldSpec& ambient, int bound)
{
    std::vector<RatFunc> gens;
    for (const auto& [g, v] : t.entries) {
        ambient.check_element(g);
        ambient.check_element(v);
        if (g.is_constant() && !v.is_zero()) return Status::fails;
        if (std::find(gens.begin(), gens.end(), g) != gens.end()) {
            if (*t.value(g) != v) return Status::fails;
            continue;
        }
        if (!g.is_constant()) gens.push_back(g);
    }
    const FieldSpec prime = FieldSpec::prime(ambient.field, ambient.vars);
    const auto td = transcendence_degree(gens, prime, bound);
    std::vector<RatFunc> basis;
    for (auto i : td.basis) basis.push_back(gens[i]);
    Status out = td.status;
    for (std::size_t j = 0; j < gens.size(); ++j) {
        if (std::find(td.basis.begin(), td.basis.end(), j) != td.basis.end()) continue;
        auto tuple = basis;
        tuple.push_back(gens[j]);
        const auto ann = annihilator_search(tuple, prime, bound);
        if (!ann.is_fails()) {
            out = conjoin(out, Status::inconclusive);
            continue;
        }
        // D(P(g)) = Σ ∂P/∂X_i(g)·D(g_i) must vanish.
        RatFunc acc = ambient.zero();
        for (std::size_t i = 0; i < tuple.size(); ++i)
            acc += ann.witness->derivative(static_cast<int>(i)).evaluate(tuple) * *t.value(tuple[i]);
        if (!acc.is_zero()) return Status::fails;
    }
    return out;
}

bool restricts_to(const DerivationTable& whole, const DerivationTable& t)
{
    for (const auto& [g, v] : t.entries) {
        auto w = whole.value(g);
        if (!w || *w != v) return false;
    }
    return true;
}

Amalgamation amalgamate_derivations(const DiffFieldSpec& l, const DerivationTable& dl, const DiffFieldSpec& m,
                                    const DerivationTable& dm, const DiffFieldSpec& k, int bound)
{
    const JetDiffField& jf = *k.field;
    Amalgamation out;
    for (const auto& g : k.spec().nonconstant_gens()) {
        auto a = dl.value(g), b = dm.value(g);
        if (!a || !b) throw field::PreconditionError("base generator " + jf.render(g) + " missing from a table");
        if (*a != *b) throw field::PreconditionError("tables disagree on base generator " + jf.render(g));
    }
    const Status cl = table_consistent(dl, jf.ambient(), bound);
    const Status cm = table_consistent(dm, jf.ambient(), bound);
    if (cl == Status::fails || cm == Status::fails) throw field::PreconditionError("inconsistent derivation table");
    const auto disjoint = field::linearly_disjoint(l.spec(), m.spec(), k.spec(), bound);
    if (disjoint.is_fails()) {
        out.status = Status::fails;
        out.refusal = *disjoint.witness;
        out.note = "fields are not linearly disjoint over the base";
        return out;
    }
    if (disjoint.is_inconclusive()) {
        out.note = disjoint.note;
        return out;
    }
    DerivationTable merged = dl;
    for (const auto& [g, v] : dm.entries)
        if (!merged.value(g)) merged.entries.emplace_back(g, v);
    const Status c = table_consistent(merged, jf.ambient(), bound);
    if (c == Status::fails) throw field::FieldError("merged table inconsistent despite disjointness");
    out.status = conjoin(conjoin(cl, cm), c);
    if (out.status != Status::holds) out.note = "consistency checked only up to the bound";
    out.table = std::move(merged);
    return out;
}

}  // namespace indep::theories
