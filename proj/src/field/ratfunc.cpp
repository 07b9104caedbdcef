#include "indep/field/ratfunc.hpp"

#include <map>

namespace indep::field {

RatFunc::RatFunc(Poly num) : num_(std::move(num)), den_(Poly::constant(num_.field(), num_.nvars(), 1)) {}

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den))
{
    if (den_.is_zero()) throw FieldError("zero denominator");
    normalize();
}

RatFunc RatFunc::constant(PrimeField f, int nvars, const Rational& c) { return RatFunc(Poly::constant(f, nvars, c)); }

RatFunc RatFunc::variable(PrimeField f, int nvars, int index) { return RatFunc(Poly::variable(f, nvars, index)); }

void RatFunc::normalize()
{
    const PrimeField& f = num_.field();
    const int n = num_.nvars();
    if (num_.is_zero()) {
        den_ = Poly::constant(f, n, 1);
        return;
    }
    Exponents mn = num_.min_exponents(), md = den_.min_exponents();
    bool shift = false;
    for (int k = 0; k < n; ++k) {
        mn[k] = std::min(mn[k], md[k]);
        shift = shift || mn[k] > 0;
    }
    if (shift) {
        for (int k = 0; k < n; ++k) mn[k] = -mn[k];
        num_ = num_.times_monomial(mn, 1);
        den_ = den_.times_monomial(mn, 1);
    }
    const Rational lead_inv = f.inv(den_.leading().coeff);
    if (lead_inv != 1) {
        num_ = num_.scaled(lead_inv);
        den_ = den_.scaled(lead_inv);
    }
    if (den_.is_constant()) return;
    if (auto q = num_.divide_exact(den_)) {
        num_ = std::move(*q);
        den_ = Poly::constant(f, n, 1);
        return;
    }
    if (num_.size() <= den_.size())
        if (auto q = den_.divide_exact(num_)) {
            const Rational li = f.inv(q->leading().coeff);
            den_ = q->scaled(li);
            num_ = Poly::constant(f, n, li);
        }
}

bool RatFunc::is_constant() const { return num_.is_constant() && den_.is_constant(); }

std::optional<Rational> RatFunc::constant_value() const
{
    if (!is_constant()) return std::nullopt;
    return field().mul(*num_.constant_value(), field().inv(*den_.constant_value()));
}

RatFunc RatFunc::operator-() const
{
    RatFunc out = *this;
    out.num_ = -out.num_;
    return out;
}

RatFunc RatFunc::operator+(const RatFunc& o) const
{
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    if (den_ == o.den_) return RatFunc(num_ + o.num_, den_);
    if (den_.is_one()) return RatFunc(num_ * o.den_ + o.num_, o.den_);
    if (o.den_.is_one()) return RatFunc(num_ + o.num_ * den_, den_);
    if (auto q = o.den_.divide_exact(den_)) return RatFunc(num_ * *q + o.num_, o.den_);
    if (auto q = den_.divide_exact(o.den_)) return RatFunc(num_ + o.num_ * *q, den_);
    return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + (-o); }

RatFunc RatFunc::operator*(const RatFunc& o) const
{
    if (is_zero() || o.is_zero()) return RatFunc(field(), nvars());
    if (den_.is_one() && o.den_.is_one()) return RatFunc(num_ * o.num_);
    Poly a = num_, b = o.num_, da = den_, db = o.den_;
    if (!db.is_one())
        if (auto q = a.divide_exact(db)) {
            a = std::move(*q);
            db = Poly::constant(field(), nvars(), 1);
        }
    if (!da.is_one())
        if (auto q = b.divide_exact(da)) {
            b = std::move(*q);
            da = Poly::constant(field(), nvars(), 1);
        }
    return RatFunc(a * b, da * db);
}

RatFunc RatFunc::inverse() const
{
    if (is_zero()) throw FieldError("inverse of zero");
    return RatFunc(den_, num_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const { return *this * o.inverse(); }

RatFunc RatFunc::scaled(const Rational& c) const
{
    RatFunc out = *this;
    out.num_ = out.num_.scaled(c);
    if (out.num_.is_zero()) out.den_ = Poly::constant(field(), nvars(), 1);
    return out;
}

RatFunc RatFunc::pow(int k) const
{
    if (k < 0) return inverse().pow(-k);
    RatFunc out(num_.pow(static_cast<unsigned>(k)));
    if (!den_.is_one()) out = RatFunc(num_.pow(static_cast<unsigned>(k)), den_.pow(static_cast<unsigned>(k)));
    return out;
}

RatFunc RatFunc::derivative(int var) const
{
    if (den_.is_one()) return RatFunc(num_.derivative(var));
    const Poly dd = den_.derivative(var);
    if (dd.is_zero()) return RatFunc(num_.derivative(var), den_);
    return RatFunc(num_.derivative(var) * den_ - num_ * dd, den_ * den_);
}

RatFunc RatFunc::hasse(const Exponents& alpha) const
{
    if (den_.is_one()) return RatFunc(num_.hasse(alpha));
    // f·d = n gives D^(β)f = (D^(β)n - Σ_{γ<β} D^(γ)f · D^(β-γ)d) / d over the box β ≤ α.
    const int n = nvars();
    std::map<Exponents, RatFunc> memo;
    auto rec = [&](auto&& self, const Exponents& beta) -> RatFunc {
        if (auto it = memo.find(beta); it != memo.end()) return it->second;
        RatFunc acc(num_.hasse(beta));
        Exponents gamma(n, 0);
        // Enumerate γ ≤ β, γ ≠ β.
        while (true) {
            if (gamma != beta) {
                Exponents rest(n);
                for (int k = 0; k < n; ++k) rest[k] = beta[k] - gamma[k];
                const Poly dr = den_.hasse(rest);
                if (!dr.is_zero()) acc -= self(self, gamma) * RatFunc(dr);
            }
            int k = 0;
            while (k < n && gamma[k] == beta[k]) gamma[k++] = 0;
            if (k == n) break;
            ++gamma[k];
        }
        RatFunc out = acc / RatFunc(den_);
        memo.emplace(beta, out);
        return out;
    };
    return rec(rec, alpha);
}

namespace {

std::optional<Rational> eval_poly(const Poly& p, const std::vector<Rational>& point)
{
    const PrimeField& f = p.field();
    Rational acc = 0;
    for (const auto& t : p.terms()) {
        Rational m = t.coeff;
        for (int k = 0; k < p.nvars(); ++k)
            for (int e = 0; e < t.exp[k]; ++e) m *= point[k];
        acc += m;
    }
    return f.reduce(acc);
}

}  // namespace

std::optional<Rational> RatFunc::evaluate(const std::vector<Rational>& point) const
{
    const Rational d = *eval_poly(den_, point);
    if (d == 0) return std::nullopt;
    return field().mul(*eval_poly(num_, point), field().inv(d));
}

RatFunc substitute(const Poly& p, const std::vector<RatFunc>& images)
{
    if (images.size() != static_cast<std::size_t>(p.nvars())) throw FieldError("substitution arity mismatch");
    if (images.empty()) return RatFunc(p);
    const PrimeField& f = images[0].field();
    const int n = images[0].nvars();
    std::map<std::pair<int, int>, RatFunc> powers;
    auto power = [&](int var, int e) -> const RatFunc& {
        auto key = std::make_pair(var, e);
        auto it = powers.find(key);
        if (it == powers.end()) it = powers.emplace(key, images[var].pow(e)).first;
        return it->second;
    };
    RatFunc acc(f, n);
    for (const auto& t : p.terms()) {
        RatFunc m = RatFunc::constant(f, n, t.coeff);
        for (int k = 0; k < p.nvars(); ++k)
            if (t.exp[k]) m *= power(k, t.exp[k]);
        acc += m;
    }
    return acc;
}

RatFunc RatFunc::substitute(const std::vector<RatFunc>& images) const
{
    if (den_.is_one()) return field::substitute(num_, images);
    return field::substitute(num_, images) / field::substitute(den_, images);
}

bool RatFunc::operator==(const RatFunc& o) const
{
    if (num_ == o.num_ && den_ == o.den_) return true;
    return num_ * o.den_ == o.num_ * den_;
}

std::string to_string(const Poly& p, const std::vector<std::string>& names)
{
    if (p.is_zero()) return "0";
    std::string out;
    const unsigned ch = p.characteristic();
    for (std::size_t i = 0; i < p.terms().size(); ++i) {
        const Term& t = p.terms()[i];
        Rational c = t.coeff;
        // In characteristic p print residues in the symmetric range.
        if (ch != 0 && c > Rational(ch / 2)) c -= ch;
        const bool negative = c < 0;
        if (negative) c = -c;
        if (i == 0) out += negative ? "-" : "";
        else out += negative ? " - " : " + ";
        std::string mono;
        for (int k = 0; k < p.nvars(); ++k) {
            if (t.exp[k] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += names.at(k);
            if (t.exp[k] > 1) mono += "^" + std::to_string(t.exp[k]);
        }
        if (mono.empty()) out += c.get_str();
        else if (c == 1) out += mono;
        else out += c.get_str() + "*" + mono;
    }
    return out;
}

std::string RatFunc::to_string(const std::vector<std::string>& names) const
{
    const std::string n = field::to_string(num_, names);
    if (den_.is_one()) return n;
    const bool simple_num = num_.size() == 1;
    int factors = 0;
    if (den_.size() == 1)
        for (int e : den_.leading().exp) factors += e > 0;
    const bool simple_den = den_.size() == 1 && den_.leading().coeff == 1 && factors == 1;
    return (simple_num ? n : "(" + n + ")") + "/" +
           (simple_den ? field::to_string(den_, names) : "(" + field::to_string(den_, names) + ")");
}

}  // namespace indep::field
