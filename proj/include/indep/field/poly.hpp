#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "indep/field/scalar.hpp"

namespace indep::field {

using Exponents = std::vector<int>;

// Graded lexicographic order: total degree first, then lexicographic with
// the first declared variable largest.
bool grlex_greater(const Exponents& a, const Exponents& b);
int total_degree(const Exponents& e);

struct Term {
    Exponents exp;
    Rational coeff;
    bool operator==(const Term&) const = default;
};

// Sparse multivariate polynomial over a prime field. Terms are kept sorted in
// decreasing grlex order with nonzero, reduced coefficients.
class Poly {
public:
    Poly() = default;
    Poly(PrimeField f, int nvars) : field_(f), nvars_(nvars) {}

    static Poly constant(PrimeField f, int nvars, const Rational& c);
    static Poly variable(PrimeField f, int nvars, int index);
    static Poly monomial(PrimeField f, Exponents exp, const Rational& c = 1);

    const PrimeField& field() const { return field_; }
    unsigned characteristic() const { return field_.characteristic(); }
    int nvars() const { return nvars_; }
    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_one() const;
    std::optional<Rational> constant_value() const;
    const Term& leading() const { return terms_.front(); }
    int total_degree() const;
    int degree_in(int var) const;
    bool involves(int var) const { return degree_in(var) > 0; }

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    Poly scaled(const Rational& c) const;
    Poly times_monomial(const Exponents& e, const Rational& c) const;
    Poly pow(unsigned k) const;

    // Quotient when `d` divides this polynomial exactly, nullopt otherwise.
    std::optional<Poly> divide_exact(const Poly& d) const;

    Poly derivative(int var) const;
    // Hasse derivative D^(α): t^e ↦ Π C(e_i, α_i) t^(e-α).
    Poly hasse(const Exponents& alpha) const;

    Exponents min_exponents() const;

    bool operator==(const Poly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }
    std::size_t hash() const;

    // Internal constructor from an already normalized term list.
    static Poly from_sorted(PrimeField f, int nvars, std::vector<Term> terms);
    // Normalizes an arbitrary term list (sorts, merges, drops zeros).
    static Poly from_terms(PrimeField f, int nvars, std::vector<Term> terms);

private:
    void check_compatible(const Poly& o) const;

    PrimeField field_;
    int nvars_ = 0;
    std::vector<Term> terms_;
};

Rational binomial(long n, long k);

}  // namespace indep::field
