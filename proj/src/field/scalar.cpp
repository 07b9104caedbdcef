#include "indep/field/scalar.hpp"

namespace indep::field {

bool is_prime(unsigned n)
{
    if (n < 2) return false;
    for (unsigned d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

PrimeField::PrimeField(unsigned characteristic) : p_(characteristic)
{
    if (p_ != 0 && !is_prime(p_)) throw FieldError("characteristic " + std::to_string(p_) + " is not prime");
    if (p_ > 65521) throw FieldError("characteristic too large");
}

Rational PrimeField::reduce(const Rational& x) const
{
    if (p_ == 0) {
        Rational y = x;
        y.canonicalize();
        return y;
    }
    const mpz_class pz(p_);
    mpz_class num = x.get_num() % pz;
    if (num < 0) num += pz;
    if (x.get_den() == 1) return Rational(num);
    mpz_class den = x.get_den() % pz, den_inv;
    if (den == 0) throw FieldError("denominator divisible by the characteristic");
    mpz_invert(den_inv.get_mpz_t(), den.get_mpz_t(), pz.get_mpz_t());
    mpz_class r = (num * den_inv) % pz;
    return Rational(r);
}

Rational PrimeField::inv(const Rational& a) const
{
    if (a == 0) throw FieldError("division by zero");
    if (p_ == 0) return 1 / a;
    const mpz_class pz(p_);
    mpz_class out, v = a.get_num();
    mpz_invert(out.get_mpz_t(), v.get_mpz_t(), pz.get_mpz_t());
    return Rational(out);
}

}  // namespace indep::field
