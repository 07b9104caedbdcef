#pragma once

#include <optional>
#include <string>
#include <vector>

#include "indep/core/verdict.hpp"
#include "indep/field/lindep.hpp"

namespace indep::field {

class UnsupportedCharacteristic : public FieldError {
public:
    using FieldError::FieldError;
};

// P(X_1..X_s) = Σ coeff·X^exp with coefficients in the base field; the
// grlex-largest monomial has coefficient 1.
struct Annihilator {
    std::vector<std::pair<Exponents, RatFunc>> terms;

    int degree() const;
    // Value at the given elements (zero for a genuine annihilator).
    RatFunc evaluate(const std::vector<RatFunc>& xs) const;
    // dP/dX_i as an annihilator-shaped polynomial (may be zero).
    Annihilator derivative(int i) const;
    bool is_zero() const { return terms.empty(); }
    std::string render(const FieldSpec& ambient, const std::vector<std::string>& names = {}) const;
};

// Default indeterminate names: T for one, x y z for up to three, X1.. otherwise.
std::vector<std::string> indeterminates(std::size_t count);

// Nontrivial P of total degree ≤ d over ⟨over⟩ with P(elems) = 0. Holds
// without a bound when independence is certified, Holds(d) when merely no
// annihilator of degree ≤ d exists.
Verdict<Annihilator> annihilator_search(const std::vector<RatFunc>& elems, const FieldSpec& over, int d);

struct JacobianRank {
    int rank = 0;
};

// Characteristic 0 only.
Verdict<JacobianRank> alg_indep_jacobian(const std::vector<RatFunc>& elems);

// Sound certificate of algebraic independence over the prime field in any
// characteristic: full Jacobian rank, or linearly independent initial
// exponents under some monomial order.
bool certify_alg_independent(const std::vector<RatFunc>& elems);

struct CountResult {
    Status status = Status::inconclusive;
    int count = 0;
    std::vector<std::size_t> basis;  // indices into the input, greedy in declared order
    int bound = 0;
    std::string note;
};

CountResult transcendence_degree(const std::vector<RatFunc>& elems, const FieldSpec& over, int bound);

}  // namespace indep::field
