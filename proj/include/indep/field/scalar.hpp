#pragma once

#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace indep::field {

using Rational = mpq_class;

class FieldError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Prime field: ℚ for characteristic 0, 𝔽_p otherwise. Residues mod p are
// kept as integer-valued rationals in [0, p).
class PrimeField {
public:
    PrimeField() = default;
    explicit PrimeField(unsigned characteristic);

    unsigned characteristic() const { return p_; }

    Rational reduce(const Rational& x) const;
    Rational from_int(long v) const { return reduce(Rational(v)); }
    Rational add(const Rational& a, const Rational& b) const { return reduce(a + b); }
    Rational sub(const Rational& a, const Rational& b) const { return reduce(a - b); }
    Rational mul(const Rational& a, const Rational& b) const { return reduce(a * b); }
    Rational neg(const Rational& a) const { return reduce(-a); }
    Rational inv(const Rational& a) const;

    bool operator==(const PrimeField&) const = default;

private:
    unsigned p_ = 0;
};

bool is_prime(unsigned n);

}  // namespace indep::field
