#include "indep/field/poly.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace indep::field {

int total_degree(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0); }

bool grlex_greater(const Exponents& a, const Exponents& b)
{
    const int da = total_degree(a), db = total_degree(b);
    if (da != db) return da > db;
    return a > b;
}

namespace {

struct GrlexGreater {
    bool operator()(const Exponents& a, const Exponents& b) const { return grlex_greater(a, b); }
};

}  // namespace

Rational binomial(long n, long k)
{
    if (k < 0 || k > n) return 0;
    mpz_class out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rational(out);
}

Poly Poly::from_sorted(PrimeField f, int nvars, std::vector<Term> terms)
{
    Poly p(f, nvars);
    p.terms_ = std::move(terms);
    return p;
}

Poly Poly::from_terms(PrimeField f, int nvars, std::vector<Term> terms)
{
    std::map<Exponents, Rational, GrlexGreater> acc;
    for (auto& t : terms) {
        auto [it, inserted] = acc.try_emplace(std::move(t.exp), t.coeff);
        if (!inserted) it->second += t.coeff;
    }
    Poly p(f, nvars);
    for (auto& [e, c] : acc) {
        Rational r = f.reduce(c);
        if (r != 0) p.terms_.push_back({e, std::move(r)});
    }
    return p;
}

Poly Poly::constant(PrimeField f, int nvars, const Rational& c)
{
    Poly p(f, nvars);
    Rational r = f.reduce(c);
    if (r != 0) p.terms_.push_back({Exponents(nvars, 0), std::move(r)});
    return p;
}

Poly Poly::variable(PrimeField f, int nvars, int index)
{
    Exponents e(nvars, 0);
    e.at(index) = 1;
    return monomial(f, std::move(e));
}

Poly Poly::monomial(PrimeField f, Exponents exp, const Rational& c)
{
    const int n = static_cast<int>(exp.size());
    Poly p(f, n);
    Rational r = f.reduce(c);
    if (r != 0) p.terms_.push_back({std::move(exp), std::move(r)});
    return p;
}

bool Poly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && ::indep::field::total_degree(terms_[0].exp) == 0); }

bool Poly::is_one() const { return terms_.size() == 1 && terms_[0].coeff == 1 && ::indep::field::total_degree(terms_[0].exp) == 0; }

std::optional<Rational> Poly::constant_value() const
{
    if (terms_.empty()) return Rational(0);
    if (is_constant()) return terms_[0].coeff;
    return std::nullopt;
}

int Poly::total_degree() const { return terms_.empty() ? -1 : ::indep::field::total_degree(terms_[0].exp); }

int Poly::degree_in(int var) const
{
    int d = 0;
    for (const auto& t : terms_) d = std::max(d, t.exp[var]);
    return d;
}

void Poly::check_compatible(const Poly& o) const
{
    if (nvars_ != o.nvars_ || !(field_ == o.field_)) throw FieldError("polynomials over different rings");
}

Poly Poly::operator-() const
{
    Poly out = *this;
    for (auto& t : out.terms_) t.coeff = field_.neg(t.coeff);
    return out;
}

namespace {

std::vector<Term> merge(const PrimeField& f, const std::vector<Term>& a, const std::vector<Term>& b, bool subtract)
{
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && grlex_greater(a[i].exp, b[j].exp))) {
            out.push_back(a[i++]);
        } else if (i == a.size() || grlex_greater(b[j].exp, a[i].exp)) {
            out.push_back({b[j].exp, subtract ? f.neg(b[j].coeff) : b[j].coeff});
            ++j;
        } else {
            Rational c = subtract ? f.sub(a[i].coeff, b[j].coeff) : f.add(a[i].coeff, b[j].coeff);
            if (c != 0) out.push_back({a[i].exp, std::move(c)});
            ++i;
            ++j;
        }
    }
    return out;
}

}  // namespace

Poly Poly::operator+(const Poly& o) const
{
    check_compatible(o);
    return from_sorted(field_, nvars_, merge(field_, terms_, o.terms_, false));
}

Poly Poly::operator-(const Poly& o) const
{
    check_compatible(o);
    return from_sorted(field_, nvars_, merge(field_, terms_, o.terms_, true));
}

Poly Poly::operator*(const Poly& o) const
{
    check_compatible(o);
    if (is_zero() || o.is_zero()) return Poly(field_, nvars_);
    if (o.terms_.size() == 1) return times_monomial(o.terms_[0].exp, o.terms_[0].coeff);
    if (terms_.size() == 1) return o.times_monomial(terms_[0].exp, terms_[0].coeff);
    std::map<Exponents, Rational, GrlexGreater> acc;
    Exponents e(nvars_);
    for (const auto& s : terms_)
        for (const auto& t : o.terms_) {
            for (int k = 0; k < nvars_; ++k) e[k] = s.exp[k] + t.exp[k];
            auto [it, inserted] = acc.try_emplace(e, s.coeff * t.coeff);
            if (!inserted) it->second += s.coeff * t.coeff;
        }
    Poly out(field_, nvars_);
    out.terms_.reserve(acc.size());
    for (auto& [k, c] : acc) {
        Rational r = field_.reduce(c);
        if (r != 0) out.terms_.push_back({k, std::move(r)});
    }
    return out;
}

Poly Poly::scaled(const Rational& c) const
{
    const Rational r = field_.reduce(c);
    if (r == 0) return Poly(field_, nvars_);
    Poly out = *this;
    for (auto& t : out.terms_) t.coeff = field_.mul(t.coeff, r);
    return out;
}

Poly Poly::times_monomial(const Exponents& e, const Rational& c) const
{
    const Rational r = field_.reduce(c);
    if (r == 0) return Poly(field_, nvars_);
    Poly out = *this;
    for (auto& t : out.terms_) {
        for (int k = 0; k < nvars_; ++k) t.exp[k] += e[k];
        t.coeff = field_.mul(t.coeff, r);
    }
    return out;
}

Poly Poly::pow(unsigned k) const
{
    Poly result = constant(field_, nvars_, 1), base = *this;
    while (k) {
        if (k & 1u) result = result * base;
        k >>= 1;
        if (k) base = base * base;
    }
    return result;
}

std::optional<Poly> Poly::divide_exact(const Poly& d) const
{
    check_compatible(d);
    if (d.is_zero()) throw FieldError("division by zero polynomial");
    if (is_zero()) return Poly(field_, nvars_);
    if (d.is_constant()) return scaled(field_.inv(d.terms_[0].coeff));
    const Term& lead = d.terms_[0];
    const Rational lead_inv = field_.inv(lead.coeff);
    std::vector<Term> quotient;
    Poly rem = *this;
    Exponents e(nvars_);
    while (!rem.is_zero()) {
        const Term& r = rem.terms_[0];
        for (int k = 0; k < nvars_; ++k) {
            e[k] = r.exp[k] - lead.exp[k];
            if (e[k] < 0) return std::nullopt;
        }
        const Rational c = field_.mul(r.coeff, lead_inv);
        quotient.push_back({e, c});
        rem = rem - d.times_monomial(e, c);
    }
    return from_sorted(field_, nvars_, std::move(quotient));
}

Poly Poly::derivative(int var) const
{
    std::vector<Term> out;
    for (const auto& t : terms_) {
        if (t.exp[var] == 0) continue;
        Rational c = field_.mul(t.coeff, Rational(t.exp[var]));
        if (c == 0) continue;
        Exponents e = t.exp;
        --e[var];
        out.push_back({std::move(e), std::move(c)});
    }
    // Lowering one exponent keeps distinct monomials distinct but may reorder them.
    return from_terms(field_, nvars_, std::move(out));
}

Poly Poly::hasse(const Exponents& alpha) const
{
    std::vector<Term> out;
    for (const auto& t : terms_) {
        Rational c = t.coeff;
        Exponents e = t.exp;
        bool zero = false;
        for (int k = 0; k < nvars_ && !zero; ++k) {
            if (alpha[k] == 0) continue;
            if (e[k] < alpha[k]) {
                zero = true;
                break;
            }
            c *= binomial(e[k], alpha[k]);
            e[k] -= alpha[k];
        }
        if (zero) continue;
        c = field_.reduce(c);
        if (c != 0) out.push_back({std::move(e), std::move(c)});
    }
    return from_terms(field_, nvars_, std::move(out));
}

Exponents Poly::min_exponents() const
{
    if (terms_.empty()) return Exponents(nvars_, 0);
    Exponents m = terms_[0].exp;
    for (const auto& t : terms_)
        for (int k = 0; k < nvars_; ++k) m[k] = std::min(m[k], t.exp[k]);
    return m;
}

std::size_t Poly::hash() const
{
    std::size_t h = terms_.size();
    for (const auto& t : terms_) {
        for (int e : t.exp) h = h * 1000003u + static_cast<std::size_t>(e);
        h ^= std::hash<std::string>{}(t.coeff.get_str()) + 0x9e3779b9 + (h << 6) + (h >> 2);
    }
    return h;
}

}  // namespace indep::field
