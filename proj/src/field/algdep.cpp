#include "indep/field/algdep.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace indep::field {

int Annihilator::degree() const
{
    int d = -1;
    for (const auto& [e, c] : terms) d = std::max(d, total_degree(e));
    return d;
}

RatFunc Annihilator::evaluate(const std::vector<RatFunc>& xs) const
{
    RatFunc acc(xs.at(0).field(), xs.at(0).nvars());
    for (const auto& [e, c] : terms) {
        RatFunc m = c;
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i]) m *= xs[i].pow(e[i]);
        acc += m;
    }
    return acc;
}

Annihilator Annihilator::derivative(int i) const
{
    Annihilator out;
    for (const auto& [e, c] : terms) {
        if (e[i] == 0) continue;
        RatFunc k = c.scaled(Rational(e[i]));
        if (k.is_zero()) continue;
        Exponents f = e;
        --f[i];
        out.terms.emplace_back(std::move(f), std::move(k));
    }
    return out;
}

std::vector<std::string> indeterminates(std::size_t count)
{
    if (count == 1) return {"T"};
    static const std::vector<std::string> xyz{"x", "y", "z"};
    if (count <= 3) return {xyz.begin(), xyz.begin() + static_cast<long>(count)};
    std::vector<std::string> out;
    for (std::size_t i = 1; i <= count; ++i) out.push_back("X" + std::to_string(i));
    return out;
}

std::string Annihilator::render(const FieldSpec& ambient, const std::vector<std::string>& names_in) const
{
    if (terms.empty()) return "0";
    const auto names = names_in.empty() ? indeterminates(terms[0].first.size()) : names_in;
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms) {
        std::string mono;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (!e[i]) continue;
            if (!mono.empty()) mono += "*";
            mono += names[i];
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        std::string coeff = ambient.render(c);
        bool negative = false;
        if (c.is_constant() || (c.num().size() == 1 && c.den().size() == 1)) {
            if (!coeff.empty() && coeff[0] == '-') {
                negative = true;
                coeff = coeff.substr(1);
            }
        } else {
            coeff = "(" + coeff + ")";
        }
        out += first ? (negative ? "-" : "") : (negative ? " - " : " + ");
        first = false;
        if (mono.empty()) out += coeff;
        else if (coeff == "1") out += mono;
        else out += coeff + "*" + mono;
    }
    return out;
}

namespace {

// Exponent vectors of total degree ≤ d in increasing grlex order.
std::vector<Exponents> ascending_monomials(int s, int d)
{
    std::vector<Exponents> out;
    Exponents e(s, 0);
    std::function<void(int, int)> rec = [&](int pos, int left) {
        if (pos == s) {
            if (left == 0) out.push_back(e);
            return;
        }
        for (int v = 0; v <= left; ++v) {
            e[pos] = v;
            rec(pos + 1, left - v);
        }
    };
    for (int deg = 0; deg <= d; ++deg) rec(0, deg);
    std::stable_sort(out.begin(), out.end(), [](const Exponents& a, const Exponents& b) { return grlex_greater(b, a); });
    return out;
}

// Initial exponent of a rational function under a total order on vectors.
Exponents initial(const RatFunc& f, const std::function<bool(const Exponents&, const Exponents&)>& greater)
{
    auto lead = [&](const Poly& p) {
        Exponents best = p.terms()[0].exp;
        for (const auto& t : p.terms())
            if (greater(t.exp, best)) best = t.exp;
        return best;
    };
    Exponents a = lead(f.num()), b = lead(f.den());
    for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
    return a;
}

int rational_rank(std::vector<std::vector<Rational>> rows)
{
    int r = 0;
    const std::size_t cols = rows.empty() ? 0 : rows[0].size();
    for (std::size_t c = 0; c < cols && r < static_cast<int>(rows.size()); ++c) {
        std::size_t piv = r;
        while (piv < rows.size() && rows[piv][c] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[r], rows[piv]);
        for (std::size_t i = r + 1; i < rows.size(); ++i) {
            if (rows[i][c] == 0) continue;
            const Rational f = rows[i][c] / rows[r][c];
            for (std::size_t j = c; j < cols; ++j) rows[i][j] -= f * rows[r][j];
        }
        ++r;
    }
    return r;
}

bool valuation_certificate(const std::vector<RatFunc>& elems)
{
    const int n = elems[0].nvars();
    if (static_cast<int>(elems.size()) > n) return false;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        for (bool graded : {true, false}) {
            auto greater = [&](const Exponents& a, const Exponents& b) {
                if (graded) {
                    const int da = total_degree(a), db = total_degree(b);
                    if (da != db) return da > db;
                }
                for (int i : perm)
                    if (a[i] != b[i]) return a[i] > b[i];
                return false;
            };
            std::vector<std::vector<Rational>> rows;
            for (const auto& e : elems) {
                const Exponents v = initial(e, greater);
                rows.emplace_back(v.begin(), v.end());
            }
            if (rational_rank(rows) == static_cast<int>(elems.size())) return true;
        }
    } while (n <= 4 && std::next_permutation(perm.begin(), perm.end()));
    return false;
}

}  // namespace

bool certify_alg_independent(const std::vector<RatFunc>& elems)
{
    if (elems.empty()) return true;
    for (const auto& e : elems)
        if (e.is_constant()) return false;
    if (static_cast<int>(elems.size()) > elems[0].nvars()) return false;
    if (valuation_certificate(elems)) return true;
    std::mt19937_64 rng(17);
    return full_row_rank_certified(jacobian(elems), rng);
}

Verdict<Annihilator> annihilator_search(const std::vector<RatFunc>& elems, const FieldSpec& over, int d)
{
    if (d < 0) throw FieldError("degree bound must be nonnegative");
    for (const auto& e : elems) over.check_element(e);
    const int s = static_cast<int>(elems.size());
    if (s == 0) return Verdict<Annihilator>::holds();
    const Subfield k(over);
    const auto monos = ascending_monomials(s, d);
    std::vector<RatFunc> values;
    std::map<std::pair<int, int>, RatFunc> powers;
    for (const auto& e : monos) {
        RatFunc m = over.one();
        for (int i = 0; i < s; ++i) {
            if (!e[i]) continue;
            auto key = std::make_pair(i, e[i]);
            auto it = powers.find(key);
            if (it == powers.end()) it = powers.emplace(key, elems[i].pow(e[i])).first;
            m *= it->second;
        }
        values.push_back(std::move(m));
    }
    if (auto rel = k.find_dependence(values, d)) {
        const RatFunc lead_inv = rel->coeffs.back().inverse();
        Annihilator p;
        for (std::size_t i = rel->coeffs.size(); i-- > 0;)
            if (!rel->coeffs[i].is_zero()) p.terms.emplace_back(monos[i], rel->coeffs[i] * lead_inv);
        return Verdict<Annihilator>::fails(std::move(p), d);
    }
    bool certified = false;
    if (k.is_prime()) {
        certified = certify_alg_independent(elems);
    } else {
        // Independence over k follows from additivity of certified transcendence bases.
        const auto gens = over.nonconstant_gens();
        if (certify_alg_independent(gens)) {
            auto all = gens;
            all.insert(all.end(), elems.begin(), elems.end());
            certified = certify_alg_independent(all);
        }
    }
    if (certified) return Verdict<Annihilator>::holds();
    auto v = Verdict<Annihilator>::holds(d);
    v.note = "no annihilator of degree <= " + std::to_string(d);
    return v;
}

Verdict<JacobianRank> alg_indep_jacobian(const std::vector<RatFunc>& elems)
{
    if (elems.empty()) return Verdict<JacobianRank>::holds();
    if (elems[0].characteristic() != 0)
        throw UnsupportedCharacteristic("Jacobian criterion needs characteristic 0; use annihilator_search");
    const int r = rank(jacobian(elems));
    if (r == static_cast<int>(elems.size())) return Verdict<JacobianRank>::holds();
    return Verdict<JacobianRank>::fails({r});
}

namespace {

// Greedy transcendence basis over the prime field, extending `basis`.
// Elements that cannot be classified within the bound are reported.
struct Greedy {
    std::vector<RatFunc> basis;
    FieldSpec prime;
    int bound;
    bool unresolved = false;

    // Returns true when x was added.
    bool offer(const RatFunc& x)
    {
        if (x.is_constant()) return false;
        auto trial = basis;
        trial.push_back(x);
        if (certify_alg_independent(trial)) {
            basis = std::move(trial);
            return true;
        }
        // Characteristic-0 Jacobian rank is exact even without a certificate.
        if (x.characteristic() == 0) {
            if (rank(jacobian(trial)) == static_cast<int>(trial.size())) {
                basis = std::move(trial);
                return true;
            }
            return false;
        }
        auto search = annihilator_search(trial, prime, bound);
        if (search.is_fails()) return false;
        unresolved = true;
        basis = std::move(trial);
        return true;
    }
};

}  // namespace

CountResult transcendence_degree(const std::vector<RatFunc>& elems, const FieldSpec& over, int bound)
{
    for (const auto& e : elems) over.check_element(e);
    CountResult out;
    out.bound = bound;
    Greedy g{{}, FieldSpec::prime(over.field, over.vars), bound};
    for (const auto& x : over.nonconstant_gens()) g.offer(x);
    const std::size_t base = g.basis.size();
    for (std::size_t i = 0; i < elems.size(); ++i)
        if (g.offer(elems[i])) out.basis.push_back(i);
    out.count = static_cast<int>(g.basis.size() - base);
    out.status = g.unresolved ? Status::inconclusive : Status::holds;
    if (g.unresolved) out.note = "independence assumed where no annihilator of degree <= " + std::to_string(bound) + " exists";
    return out;
}

}  // namespace indep::field
