#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "indep/field/algdep.hpp"

namespace indep::field {

class PreconditionError : public FieldError {
public:
    using FieldError::FieldError;
};

// Rows are the formal differentials (∂f/∂t_1, …, ∂f/∂t_n).
struct DiffMatrix {
    Matrix rows;

    static DiffMatrix of(const std::vector<RatFunc>& elems);
    int rank() const { return field::rank(rows); }
};

// y = Σ_j c_j^p · t^j over exponent vectors j with entries < p; returns the c_j.
std::map<Exponents, RatFunc> p_coordinates(const RatFunc& y);

struct PWitness {
    std::size_t index = 0;
    RatFunc element;
};

Verdict<PWitness> p_independent(const std::vector<RatFunc>& b, const FieldSpec& over, const FieldSpec& ambient);

// x = Σ coeff_i^p · monomial_i.
struct Membership {
    std::vector<std::pair<RatFunc, RatFunc>> terms;  // (c_i, m_i)
    RatFunc value() const;
};

// Fails(member) when x ∈ K^p[k ∪ S]; Holds when non-membership is certain
// (the monomial family is complete at the bound), Inconclusive otherwise.
Verdict<Membership> membership_oracle(const RatFunc& x, const FieldSpec& k, const std::vector<RatFunc>& s, int bound);

std::vector<RatFunc> p_basis(const FieldSpec& over, const std::vector<RatFunc>& candidates, const FieldSpec& ambient);

struct ImperfectionResult {
    int degree = 0;
    int basis_size = 0;  // p^degree monomials certified independent over K^p
};

ImperfectionResult imperfection_degree(const FieldSpec& k);

// A subset B of k's generators with |B| = trdeg k, algebraically independent,
// every other generator separably algebraic over F(B). Certificates attached.
struct SubfieldPBasis {
    std::vector<std::size_t> indices;
    std::vector<RatFunc> basis;
    std::vector<std::pair<RatFunc, Annihilator>> separable;  // other generators with P(g) = 0 ≠ P'(g)
};

std::optional<SubfieldPBasis> subfield_p_basis(const FieldSpec& k, int bound);

struct SeparabilityWitness {
    RatFunc element;                   // a p-basis element of k that is p-dependent in the ambient
    std::vector<RatFunc> others;       // the rest of the p-basis it depends on
};

Verdict<SeparabilityWitness> separable_extension(const FieldSpec& k, const FieldSpec& ambient, int bound = 4);

// Separable algebraicity certificate: P over ⟨over⟩ with P(y) = 0, P'(y) ≠ 0.
std::optional<Annihilator> separable_annihilator(const RatFunc& y, const FieldSpec& over, int bound);

struct MacLaneReport {
    Status status = Status::inconclusive;
    std::vector<RatFunc> p_basis;                        // A
    Verdict<Annihilator> independence;                   // A algebraically independent over k
    std::vector<std::pair<RatFunc, Annihilator>> residual;  // remaining generators of L
    std::string note;
};

MacLaneReport mac_lane_check(const FieldSpec& k, const FieldSpec& l, int bound);

// Shared helper: does each generator of `sub` lie in `sup` (at the bound)?
Status contained_in(const FieldSpec& sub, const FieldSpec& sup, int bound);

}  // namespace indep::field
