#include "indep/field/modeval.hpp"

#include <map>
#include <memory>
#include <mutex>

namespace indep::field {

namespace {

constexpr std::uint64_t kMersenne61 = (std::uint64_t{1} << 61) - 1;

std::uint64_t mulmod61(std::uint64_t a, std::uint64_t b)
{
    const unsigned __int128 z = static_cast<unsigned __int128>(a) * b;
    std::uint64_t lo = static_cast<std::uint64_t>(z & kMersenne61);
    std::uint64_t hi = static_cast<std::uint64_t>(z >> 61);
    std::uint64_t s = lo + hi;
    if (s >= kMersenne61) s -= kMersenne61;
    return s;
}

}  // namespace

EvalField::EvalField(unsigned characteristic) : p_(characteristic)
{
    if (p_ == 0) {
        q_ = kMersenne61;
        return;
    }
    q_ = p_;
    while (q_ * p_ <= 65536) {
        q_ *= p_;
        ++k_;
    }
    if (k_ == 1) return;
    // Search for a monic f of degree k such that x generates GF(q)^*.
    for (std::uint64_t tail = 1; tail < q_; ++tail) {
        std::vector<unsigned> f(k_);  // f = x^k + Σ f[i] x^i
        std::uint64_t t = tail;
        for (int i = 0; i < k_; ++i) {
            f[i] = static_cast<unsigned>(t % p_);
            t /= p_;
        }
        if (f[0] == 0) continue;
        exp_.assign(q_ - 1, 0);
        log_.assign(q_, 0);
        std::vector<unsigned> cur(k_, 0);
        cur[0] = 1;
        bool primitive = true;
        for (std::uint64_t i = 0; i < q_ - 1; ++i) {
            std::uint64_t code = 0;
            for (int j = k_ - 1; j >= 0; --j) code = code * p_ + cur[j];
            if (i > 0 && code == 1) {
                primitive = false;
                break;
            }
            exp_[i] = static_cast<std::uint32_t>(code);
            log_[code] = static_cast<std::uint32_t>(i);
            // cur *= x mod f
            const unsigned top = cur[k_ - 1];
            for (int j = k_ - 1; j > 0; --j) cur[j] = cur[j - 1];
            cur[0] = 0;
            for (int j = 0; j < k_; ++j) cur[j] = (cur[j] + (p_ - f[j]) * top) % p_;
        }
        if (primitive) return;
    }
    throw FieldError("no primitive polynomial found");
}

EvalField::Elem EvalField::add(Elem a, Elem b) const
{
    if (p_ == 0) {
        Elem s = a + b;
        return s >= kMersenne61 ? s - kMersenne61 : s;
    }
    if (k_ == 1) return (a + b) % p_;
    if (p_ == 2) return a ^ b;
    Elem out = 0, scale = 1;
    for (int i = 0; i < k_; ++i) {
        out += ((a % p_ + b % p_) % p_) * scale;
        a /= p_;
        b /= p_;
        scale *= p_;
    }
    return out;
}

EvalField::Elem EvalField::sub(Elem a, Elem b) const
{
    if (p_ == 0) return a >= b ? a - b : a + kMersenne61 - b;
    if (k_ == 1) return (a + p_ - b) % p_;
    if (p_ == 2) return a ^ b;
    Elem out = 0, scale = 1;
    for (int i = 0; i < k_; ++i) {
        out += ((a % p_ + p_ - b % p_) % p_) * scale;
        a /= p_;
        b /= p_;
        scale *= p_;
    }
    return out;
}

EvalField::Elem EvalField::mul(Elem a, Elem b) const
{
    if (p_ == 0) return mulmod61(a, b);
    if (k_ == 1) return (a * b) % p_;
    if (a == 0 || b == 0) return 0;
    return exp_[(static_cast<std::uint64_t>(log_[a]) + log_[b]) % (q_ - 1)];
}

EvalField::Elem EvalField::pow(Elem a, std::uint64_t e) const
{
    Elem out = 1;
    while (e) {
        if (e & 1) out = mul(out, a);
        a = mul(a, a);
        e >>= 1;
    }
    return out;
}

EvalField::Elem EvalField::inv(Elem a) const
{
    if (a == 0) throw FieldError("inverse of zero");
    if (p_ != 0 && k_ > 1) return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
    return pow(a, q_ - 2);
}

std::optional<EvalField::Elem> EvalField::from_rational(const Rational& r) const
{
    const std::uint64_t modulus = p_ == 0 ? kMersenne61 : p_;
    const mpz_class m(static_cast<unsigned long>(modulus));
    mpz_class n = r.get_num() % m, d = r.get_den() % m;
    if (n < 0) n += m;
    if (d == 0) return std::nullopt;
    const Elem en = n.get_ui(), ed = d.get_ui();
    if (p_ == 0) return mulmod61(en, pow(ed, kMersenne61 - 2));
    return mul(en, inv(ed));
}

EvalField::Elem EvalField::random(std::mt19937_64& rng) const
{
    return std::uniform_int_distribution<std::uint64_t>(0, q_ - 1)(rng);
}

std::optional<EvalField::Elem> EvalField::evaluate(const Poly& p, const std::vector<Elem>& point) const
{
    Elem acc = 0;
    for (const auto& t : p.terms()) {
        auto c = from_rational(t.coeff);
        if (!c) return std::nullopt;
        Elem m = *c;
        for (int k = 0; k < p.nvars(); ++k)
            if (t.exp[k]) m = mul(m, pow(point[k], static_cast<std::uint64_t>(t.exp[k])));
        acc = add(acc, m);
    }
    return acc;
}

std::optional<EvalField::Elem> EvalField::evaluate(const RatFunc& f, const std::vector<Elem>& point) const
{
    auto d = evaluate(f.den(), point);
    if (!d || *d == 0) return std::nullopt;
    auto n = evaluate(f.num(), point);
    if (!n) return std::nullopt;
    return mul(*n, inv(*d));
}

const EvalField& eval_field(unsigned characteristic)
{
    static std::mutex mu;
    static std::map<unsigned, std::unique_ptr<EvalField>> cache;
    std::lock_guard lock(mu);
    auto& slot = cache[characteristic];
    if (!slot) slot = std::make_unique<EvalField>(characteristic);
    return *slot;
}

}  // namespace indep::field
