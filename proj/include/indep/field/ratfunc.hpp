#pragma once

#include <optional>
#include <string>
#include <vector>

#include "indep/field/poly.hpp"

namespace indep::field {

// Element of the rational function field F(t_1..t_n), F the prime field.
// Equality is decided by cross-multiplication; the stored representation is
// only opportunistically reduced (monomial factors, monic denominator, exact
// divisibility), never GCD-canonical.
class RatFunc {
public:
    RatFunc() = default;
    RatFunc(PrimeField f, int nvars) : num_(f, nvars), den_(Poly::constant(f, nvars, 1)) {}
    explicit RatFunc(Poly num);
    RatFunc(Poly num, Poly den);

    static RatFunc constant(PrimeField f, int nvars, const Rational& c);
    static RatFunc variable(PrimeField f, int nvars, int index);

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    const PrimeField& field() const { return num_.field(); }
    unsigned characteristic() const { return num_.characteristic(); }
    int nvars() const { return num_.nvars(); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_one(); }
    bool is_constant() const;
    std::optional<Rational> constant_value() const;
    bool involves(int var) const { return num_.involves(var) || den_.involves(var); }

    RatFunc operator-() const;
    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const;
    RatFunc operator*(const RatFunc& o) const;
    RatFunc operator/(const RatFunc& o) const;
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc scaled(const Rational& c) const;
    RatFunc inverse() const;
    RatFunc pow(int k) const;

    RatFunc derivative(int var) const;
    RatFunc hasse(const Exponents& alpha) const;

    // Value at a point; nullopt when the denominator vanishes there.
    std::optional<Rational> evaluate(const std::vector<Rational>& point) const;
    // Substitutes images[i] for t_i.
    RatFunc substitute(const std::vector<RatFunc>& images) const;

    bool operator==(const RatFunc& o) const;
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

    std::string to_string(const std::vector<std::string>& names) const;

private:
    void normalize();

    Poly num_;
    Poly den_;
};

std::string to_string(const Poly& p, const std::vector<std::string>& names);

// Evaluates a polynomial with RatFunc values substituted for its variables.
RatFunc substitute(const Poly& p, const std::vector<RatFunc>& images);

}  // namespace indep::field
