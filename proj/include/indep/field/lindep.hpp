#pragma once

#include <functional>
#include <map>
#include <optional>
#include <random>
#include <vector>

#include "indep/core/verdict.hpp"
#include "indep/field/fieldspec.hpp"
#include "indep/field/linalg.hpp"

namespace indep::field {

// Σ coeffs[i]·elems[i] = 0 with coefficients in the base field and not all zero.
struct LinearRelation {
    std::vector<RatFunc> coeffs;
};

bool check_relation(const LinearRelation& rel, const std::vector<RatFunc>& elems);

Matrix jacobian(const std::vector<RatFunc>& elems);

// Linear algebra over a subfield k = F(g) of the ambient field.
class Subfield {
public:
    explicit Subfield(FieldSpec spec);

    const FieldSpec& spec() const { return spec_; }
    bool is_prime() const { return gens_.empty(); }

    // Prime-field basis of the span of monomials in the generators of total degree ≤ d.
    const std::vector<RatFunc>& monomial_basis(int d) const;

    // The shortest prefix of elems that is linearly dependent over k, with
    // coefficients from the degree-≤d monomial span. Certain when found.
    std::optional<LinearRelation> find_dependence(const std::vector<RatFunc>& elems, int d) const;

    // Sound certificate that elems are linearly independent over k; false
    // means only that no certificate was found.
    bool certify_independent(const std::vector<RatFunc>& elems) const;

    // x ∈ k, decided through {1, x} when conclusive: returns x as
    // -c0/c1 on success.
    std::optional<RatFunc> find_in_field(const RatFunc& x, int d) const;
    bool certify_not_in_field(const RatFunc& x) const;

private:
    using Op = std::function<RatFunc(const RatFunc&)>;
    const std::vector<Exponents>& hasse_indices() const;
    const std::vector<Vec>& derivations() const;
    const std::vector<std::vector<RatFunc>>& automorphisms(bool pairs) const;

    FieldSpec spec_;
    std::vector<RatFunc> gens_;
    mutable std::map<int, std::vector<RatFunc>> basis_cache_;
    mutable std::optional<std::vector<Exponents>> hasse_;
    mutable std::optional<std::vector<Vec>> derivations_;
    mutable std::optional<std::vector<std::vector<RatFunc>>> autos_single_, autos_all_;
};

struct LinDimResult {
    Status status = Status::inconclusive;
    int dimension = 0;
    std::vector<std::size_t> basis;  // indices into the input
    // For each dropped input, a relation over basis-elements-so-far plus it.
    std::vector<std::pair<std::size_t, LinearRelation>> relations;
    int bound = 0;
};

// Dimension of span_k(elems) with k = ⟨over⟩; exact from above.
LinDimResult lin_dim(const std::vector<RatFunc>& elems, const FieldSpec& over, int bound);

}  // namespace indep::field
