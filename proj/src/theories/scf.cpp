#include "indep/theories/scf.hpp"

#include <algorithm>

namespace indep::theories {

namespace {

std::vector<RatFunc> concat(std::vector<RatFunc> a, const std::vector<RatFunc>& b)
{
    for (const auto& x : b)
        if (std::find(a.begin(), a.end(), x) == a.end()) a.push_back(x);
    return a;
}

}  // namespace

ClosureResult scf_dcl_lambda(const std::vector<RatFunc>& a, const FieldSpec& ambient, int iterations, int bound)
{
    if (ambient.characteristic() == 0) throw field::UnsupportedCharacteristic("scf_dcl_lambda needs characteristic p");
    ClosureResult out{FieldSpec::prime(ambient.field, ambient.vars), Status::inconclusive, 0, {}};
    for (const auto& x : a)
        if (!x.is_constant() && std::find(out.field.gens.begin(), out.field.gens.end(), x) == out.field.gens.end())
            out.field = out.field.adjoin({x});
    const FieldSpec prime = FieldSpec::prime(ambient.field, ambient.vars);
    for (;;) {
        const auto sep = field::separable_extension(out.field, ambient, bound);
        if (sep.is_holds()) {
            out.status = Status::holds;
            return out;
        }
        if (sep.is_inconclusive()) {
            out.note = sep.note;
            return out;
        }
        if (out.iterations >= iterations) {
            out.note = "iteration bound exhausted";
            return out;
        }
        ++out.iterations;
        const auto mem = field::membership_oracle(sep.witness->element, prime, sep.witness->others, bound);
        if (!mem.is_fails()) {
            out.note = "p-dependent element has no representation within bound";
            return out;
        }
        std::vector<RatFunc> fresh;
        for (const auto& [coeff, mono] : mem.witness->terms) {
            if (coeff.is_constant()) continue;
            if (std::find(out.field.gens.begin(), out.field.gens.end(), coeff) != out.field.gens.end()) continue;
            if (std::find(fresh.begin(), fresh.end(), coeff) != fresh.end()) continue;
            fresh.push_back(coeff);
        }
        if (fresh.empty()) {
            out.note = "coordinates already present; closure stalled";
            return out;
        }
        out.field = out.field.adjoin(fresh);
    }
}

Verdict<ScfWitness> scf_indep(const std::vector<RatFunc>& a, const std::vector<RatFunc>& b,
                              const std::vector<RatFunc>& c, const FieldSpec& ambient, int bound, int iterations)
{
    using V = Verdict<ScfWitness>;
    const auto cc = scf_dcl_lambda(c, ambient, iterations, bound);
    if (cc.status != Status::holds) return V::inconclusive(bound, "closure of C: " + cc.note);
    const auto reg = field::regular_upto(cc.field, ambient, bound);
    if (reg.is_fails()) throw field::PreconditionError("closure of C is not algebraically closed in the ambient");
    if (reg.is_inconclusive()) return V::inconclusive(bound, "closure of C: " + reg.note);
    const auto ca = scf_dcl_lambda(concat(a, c), ambient, iterations, bound);
    const auto cb = scf_dcl_lambda(concat(b, c), ambient, iterations, bound);
    if (ca.status != Status::holds || cb.status != Status::holds)
        return V::inconclusive(bound, "closure not certified: " + (ca.note.empty() ? cb.note : ca.note));
    const auto ld = field::linearly_disjoint(ca.field, cb.field, cc.field, bound);
    if (ld.is_fails()) {
        ScfWitness w;
        w.clause = 1;
        w.disjoint = *ld.witness;
        return V::fails(std::move(w), bound);
    }
    const FieldSpec compositum = ca.field.adjoin(cb.field.gens);
    const auto sep = field::separable_extension(compositum, ambient, bound);
    if (sep.is_fails()) {
        ScfWitness w;
        w.clause = 2;
        w.separability = *sep.witness;
        auto v = V::fails(std::move(w), bound);
        if (ld.is_inconclusive()) v.note = "clause (i) inconclusive: " + ld.note;
        return v;
    }
    if (ld.is_holds() && sep.is_holds()) return V::holds(bound);
    return V::inconclusive(bound, ld.is_inconclusive() ? ld.note : sep.note);
}

}  // namespace indep::theories
