#include "indep/field/disjoint.hpp"

#include <algorithm>
#include <functional>

namespace indep::field {

std::vector<RatFunc> generator_monomials(const FieldSpec& f, int bound)
{
    const auto gens = f.nonconstant_gens();
    const int r = static_cast<int>(gens.size());
    std::vector<Exponents> exps;
    Exponents e(r, 0);
    std::function<void(int, int)> rec = [&](int pos, int left) {
        if (pos == r) {
            if (left == 0) exps.push_back(e);
            return;
        }
        for (int v = left; v >= 0; --v) {
            e[pos] = v;
            rec(pos + 1, left - v);
        }
    };
    for (int d = 0; d <= bound; ++d) rec(0, d);
    std::vector<RatFunc> out;
    for (const auto& x : exps) {
        RatFunc m = f.one();
        for (int i = 0; i < r; ++i)
            if (x[i]) m *= gens[i].pow(x[i]);
        if (std::find(out.begin(), out.end(), m) == out.end()) out.push_back(std::move(m));
    }
    return out;
}

Verdict<DisjointWitness> linearly_disjoint(const FieldSpec& l, const FieldSpec& m, const FieldSpec& k, int bound)
{
    l.check_compatible(m);
    l.check_compatible(k);
    using V = Verdict<DisjointWitness>;
    const Status in_l = contained_in(k, l, bound), in_m = contained_in(k, m, bound);
    if (in_l != Status::holds || in_m != Status::holds)
        return V::inconclusive(bound, "base generators not shown to lie in both fields");
    const Subfield sk(k), sm(m);
    // A k-independent family of L-monomials, greedy in grlex order.
    std::vector<RatFunc> u;
    for (const auto& x : generator_monomials(l, bound)) {
        auto trial = u;
        trial.push_back(x);
        if (auto rel = sk.find_dependence(trial, bound); rel && rel->coeffs.size() == trial.size()) continue;
        u.push_back(x);
    }
    if (auto rel = sm.find_dependence(u, bound)) {
        std::vector<RatFunc> prefix(u.begin(), u.begin() + static_cast<long>(rel->coeffs.size()));
        if (sk.certify_independent(prefix)) return V::fails({prefix, *rel}, bound);
        return V::inconclusive(bound, "dependence over M found but independence over k not certified");
    }
    if (sm.certify_independent(u)) return V::holds(bound);
    return V::inconclusive(bound, "no dependence found and no independence certificate");
}

Verdict<RegularWitness> regular_upto(const FieldSpec& k, const FieldSpec& l, int bound)
{
    k.check_compatible(l);
    using V = Verdict<RegularWitness>;
    const Subfield sk(k);
    // The prime field is algebraically closed in F(t_1..t_n), hence in every subfield.
    if (sk.is_prime()) return V::holds();
    Status st = Status::holds;
    std::string note;
    for (const auto& w : generator_monomials(l, bound)) {
        if (w.is_constant()) continue;
        if (sk.find_in_field(w, bound)) continue;
        const auto ann = annihilator_search({w}, k, bound);
        if (!ann.is_fails()) continue;
        if (sk.certify_not_in_field(w)) return V::fails({w, *ann.witness}, bound);
        st = Status::inconclusive;
        note = "algebraic element " + l.render(w) + " not certified outside the base";
    }
    if (k.characteristic() != 0) {
        const auto sep = separable_extension(k, l, bound);
        if (sep.is_fails()) return V::fails({sep.witness->element, std::nullopt}, bound);
        if (!sep.is_holds()) {
            st = conjoin(st, Status::inconclusive);
            if (note.empty()) note = sep.note;
        }
    }
    if (st == Status::holds) return V::holds(bound);
    return V::inconclusive(bound, note);
}

}  // namespace indep::field
