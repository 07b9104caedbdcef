#include "indep/field/lindep.hpp"

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <random>
#include <set>

#include "indep/field/modeval.hpp"

namespace indep::field {

bool check_relation(const LinearRelation& rel, const std::vector<RatFunc>& elems)
{
    if (rel.coeffs.empty() || rel.coeffs.size() > elems.size()) return false;
    RatFunc acc(elems[0].field(), elems[0].nvars());
    bool nontrivial = false;
    for (std::size_t i = 0; i < rel.coeffs.size(); ++i) {
        nontrivial = nontrivial || !rel.coeffs[i].is_zero();
        acc += rel.coeffs[i] * elems[i];
    }
    return nontrivial && acc.is_zero();
}

Matrix jacobian(const std::vector<RatFunc>& elems)
{
    Matrix out;
    for (const auto& e : elems) {
        Vec row;
        for (int v = 0; v < e.nvars(); ++v) row.push_back(e.derivative(v));
        out.push_back(std::move(row));
    }
    return out;
}

Subfield::Subfield(FieldSpec spec) : spec_(std::move(spec)), gens_(spec_.nonconstant_gens()) {}

namespace {

// Exponent vectors in r variables of total degree ≤ d, by degree then lex.
std::vector<Exponents> exponents_upto(int r, int d)
{
    std::vector<Exponents> out;
    for (int deg = 0; deg <= d; ++deg) {
        Exponents e(r, 0);
        std::function<void(int, int)> rec = [&](int pos, int left) {
            if (pos == r - 1 || r == 0) {
                if (r > 0) e[pos] = left;
                if (r > 0 || left == 0) out.push_back(e);
                return;
            }
            for (int v = left; v >= 0; --v) {
                e[pos] = v;
                rec(pos + 1, left - v);
            }
        };
        rec(0, deg);
    }
    return out;
}

// Echelon form over an evaluation field of rows evaluated at one point.
class RowCollector {
public:
    RowCollector(const EvalField& ef, std::vector<EvalField::Elem> point, std::size_t width)
        : ef_(ef), point_(std::move(point)), width_(width)
    {
    }

    bool add(const std::vector<RatFunc>& vals)
    {
        std::vector<EvalField::Elem> row(width_);
        for (std::size_t j = 0; j < width_; ++j) {
            auto v = ef_.evaluate(vals[j], point_);
            if (!v) return false;
            row[j] = *v;
        }
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const auto c = row[pivots_[r]];
            if (c == 0) continue;
            for (std::size_t j = 0; j < width_; ++j) row[j] = ef_.sub(row[j], ef_.mul(c, rows_[r][j]));
        }
        std::size_t piv = 0;
        while (piv < width_ && row[piv] == 0) ++piv;
        if (piv == width_) return false;
        const auto inv = ef_.inv(row[piv]);
        for (auto& x : row) x = ef_.mul(x, inv);
        rows_.push_back(std::move(row));
        pivots_.push_back(piv);
        return true;
    }

    bool full() const { return rows_.size() == width_; }

private:
    const EvalField& ef_;
    std::vector<EvalField::Elem> point_;
    std::size_t width_;
    std::vector<std::vector<EvalField::Elem>> rows_;
    std::vector<std::size_t> pivots_;
};

RatFunc apply_derivation(const Vec& a, const RatFunc& f)
{
    RatFunc acc(f.field(), f.nvars());
    for (int v = 0; v < f.nvars(); ++v)
        if (!a[v].is_zero() && f.involves(v)) acc += a[v] * f.derivative(v);
    return acc;
}

std::vector<RatFunc> apply_all(const std::vector<RatFunc>& xs, const std::function<RatFunc(const RatFunc&)>& op)
{
    std::vector<RatFunc> out;
    out.reserve(xs.size());
    for (const auto& x : xs) out.push_back(op(x));
    return out;
}

// Integer echelon basis of a lattice of exponent vectors; reduce() returns a
// canonical representative of the coset of v.
class ExponentLattice {
public:
    explicit ExponentLattice(std::vector<std::vector<long long>> gens, int n)
    {
        for (int c = 0; c < n; ++c) {
            for (;;) {
                long long best = 0;
                std::size_t at = gens.size();
                for (std::size_t i = 0; i < gens.size(); ++i)
                    if (gens[i][c] != 0 && (at == gens.size() || std::llabs(gens[i][c]) < best)) {
                        best = std::llabs(gens[i][c]);
                        at = i;
                    }
                if (at == gens.size()) break;
                bool others = false;
                for (std::size_t i = 0; i < gens.size(); ++i) {
                    if (i == at || gens[i][c] == 0) continue;
                    const long long q = gens[i][c] / gens[at][c];
                    for (int j = 0; j < n; ++j) gens[i][j] -= q * gens[at][j];
                    others = others || gens[i][c] != 0;
                }
                if (others) continue;
                auto row = gens[at];
                if (row[c] < 0)
                    for (auto& x : row) x = -x;
                pivots_.emplace_back(c, std::move(row));
                gens.erase(gens.begin() + static_cast<long>(at));
                break;
            }
        }
    }

    std::vector<long long> reduce(std::vector<long long> v) const
    {
        for (const auto& [c, row] : pivots_) {
            long long q = v[c] / row[c];
            if (v[c] - q * row[c] < 0) --q;
            for (std::size_t j = 0; j < v.size(); ++j) v[j] -= q * row[j];
        }
        return v;
    }

private:
    std::vector<std::pair<int, std::vector<long long>>> pivots_;
};

std::optional<std::vector<long long>> monomial_exponent(const RatFunc& f)
{
    if (f.num().size() != 1 || f.den().size() != 1) return std::nullopt;
    const auto& a = f.num().leading().exp;
    const auto& b = f.den().leading().exp;
    std::vector<long long> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

// Over a field generated by monomials with exponent lattice Λ, elements whose
// terms each lie in a single class of Z^n/Λ, with pairwise distinct classes,
// are linearly independent: clearing denominators leaves a relation among
// Laurent polynomials supported in disjoint classes.
bool grading_certificate(const std::vector<RatFunc>& gens, const std::vector<RatFunc>& elems, int n)
{
    std::vector<std::vector<long long>> lattice;
    for (const auto& g : gens) {
        auto e = monomial_exponent(g);
        if (!e) return false;
        lattice.push_back(std::move(*e));
    }
    const ExponentLattice lat(std::move(lattice), n);
    std::set<std::vector<long long>> seen;
    for (const auto& e : elems) {
        if (e.den().size() != 1) return false;
        const auto& d = e.den().leading().exp;
        std::optional<std::vector<long long>> cls;
        for (const auto& t : e.num().terms()) {
            std::vector<long long> v(n);
            for (int i = 0; i < n; ++i) v[i] = t.exp[i] - d[i];
            v = lat.reduce(std::move(v));
            if (cls && *cls != v) return false;
            cls = std::move(v);
        }
        if (!cls || !seen.insert(*cls).second) return false;
    }
    return true;
}

}  // namespace

const std::vector<RatFunc>& Subfield::monomial_basis(int d) const
{
    auto it = basis_cache_.find(d);
    if (it != basis_cache_.end()) return it->second;
    std::vector<RatFunc> out;
    PrimeSpan span(spec_.field, spec_.nvars());
    const int r = static_cast<int>(gens_.size());
    std::map<std::pair<int, int>, RatFunc> powers;
    for (const auto& e : exponents_upto(r, d)) {
        RatFunc m = spec_.one();
        for (int i = 0; i < r; ++i) {
            if (!e[i]) continue;
            auto key = std::make_pair(i, e[i]);
            auto p = powers.find(key);
            if (p == powers.end()) p = powers.emplace(key, gens_[i].pow(e[i])).first;
            m *= p->second;
        }
        if (!span.add(m)) out.push_back(std::move(m));
    }
    return basis_cache_.emplace(d, std::move(out)).first->second;
}

std::optional<LinearRelation> Subfield::find_dependence(const std::vector<RatFunc>& elems, int d) const
{
    const auto& basis = is_prime() ? monomial_basis(0) : monomial_basis(d);
    PrimeSpan span(spec_.field, spec_.nvars());
    std::vector<std::pair<std::size_t, std::size_t>> accepted;
    for (std::size_t i = 0; i < elems.size(); ++i) {
        if (elems[i].is_zero()) {
            LinearRelation rel{std::vector<RatFunc>(i + 1, spec_.zero())};
            rel.coeffs[i] = spec_.one();
            return rel;
        }
        for (std::size_t j = 0; j < basis.size(); ++j) {
            auto dep = span.add(basis[j] * elems[i]);
            if (!dep) {
                accepted.emplace_back(i, j);
                continue;
            }
            LinearRelation rel{std::vector<RatFunc>(i + 1, spec_.zero())};
            rel.coeffs[i] = basis[j];
            for (std::size_t a = 0; a < accepted.size(); ++a) {
                const Rational& lam = (*dep)[a];
                if (lam == 0) continue;
                const auto [ia, ja] = accepted[a];
                rel.coeffs[ia] -= basis[ja].scaled(lam);
            }
            return rel;
        }
    }
    return std::nullopt;
}

const std::vector<Exponents>& Subfield::hasse_indices() const
{
    if (hasse_) return *hasse_;
    hasse_.emplace();
    if (spec_.characteristic() == 0) return *hasse_;
    const int n = spec_.nvars();
    constexpr int kMaxOrder = 12;
    constexpr std::size_t kMaxIndices = 300;
    std::map<Exponents, bool> allowed;
    allowed[Exponents(n, 0)] = true;
    std::vector<Exponents> level{Exponents(n, 0)};
    for (int order = 1; order <= kMaxOrder && !level.empty(); ++order) {
        std::vector<Exponents> next;
        for (const auto& base : level)
            for (int v = 0; v < n; ++v) {
                Exponents a = base;
                ++a[v];
                if (allowed.count(a)) continue;
                bool ok = true;
                for (int w = 0; w < n && ok; ++w) {
                    if (a[w] == 0) continue;
                    Exponents below = a;
                    --below[w];
                    auto it = allowed.find(below);
                    ok = it != allowed.end() && it->second;
                }
                for (std::size_t g = 0; g < gens_.size() && ok; ++g) ok = gens_[g].hasse(a).is_zero();
                allowed[a] = ok;
                if (ok) {
                    next.push_back(a);
                    hasse_->push_back(a);
                    if (hasse_->size() >= kMaxIndices) return *hasse_;
                }
            }
        level = std::move(next);
    }
    return *hasse_;
}

const std::vector<Vec>& Subfield::derivations() const
{
    if (derivations_) return *derivations_;
    const int n = spec_.nvars();
    std::vector<Vec> ker;
    if (gens_.empty()) {
        for (int v = 0; v < n; ++v) {
            Vec a(n, spec_.zero());
            a[v] = spec_.one();
            ker.push_back(std::move(a));
        }
    } else {
        ker = kernel(jacobian(gens_), n, spec_.field, n);
    }
    // Polynomial coefficients keep repeated application cheap.
    for (auto& a : ker) {
        Poly common = Poly::constant(spec_.field, n, 1);
        for (const auto& c : a)
            if (!c.is_zero() && !c.is_polynomial() && !common.divide_exact(c.den())) common = common * c.den();
        if (!common.is_one())
            for (auto& c : a) c *= RatFunc(common);
    }
    derivations_ = std::move(ker);
    return *derivations_;
}

const std::vector<std::vector<RatFunc>>& Subfield::automorphisms(bool pairs) const
{
    if (!autos_single_) {
        const int n = spec_.nvars();
        const unsigned p = spec_.characteristic();
        std::vector<std::vector<RatFunc>> cands;
        const auto vars = spec_.ambient_vars();
        auto with = [&](int i, const RatFunc& img) {
            auto s = vars;
            s[i] = img;
            cands.push_back(std::move(s));
        };
        for (int i = 0; i < n; ++i) {
            const RatFunc t = vars[i];
            if (p != 2) with(i, -t);
            with(i, t.inverse());
            if (p != 2) with(i, -t.inverse());
            if (p != 0) with(i, t + spec_.one());
            if (p != 0 && p <= 7)
                for (unsigned c = 2; c < p; ++c) with(i, t.scaled(Rational(c)));
        }
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                auto s = vars;
                std::swap(s[i], s[j]);
                cands.push_back(s);
                if (p != 2) {
                    s[i] = -s[i];
                    s[j] = -s[j];
                    cands.push_back(s);
                }
            }
        if (p != 2 && n <= 4)
            for (unsigned mask = 3; mask < (1u << n); ++mask) {
                if ((mask & (mask - 1)) == 0) continue;
                auto s = vars;
                for (int i = 0; i < n; ++i)
                    if (mask >> i & 1) s[i] = -s[i];
                cands.push_back(std::move(s));
            }
        auto fixes = [&](const std::vector<RatFunc>& s) {
            for (const auto& g : gens_)
                if (g.substitute(s) != g) return false;
            return true;
        };
        autos_single_.emplace();
        autos_all_.emplace();
        for (auto& s : cands)
            if (fixes(s)) autos_single_->push_back(s);
        *autos_all_ = *autos_single_;
        // Compositions of two candidates, fixing k only jointly.
        for (std::size_t a = 0; a < cands.size(); ++a)
            for (std::size_t b = 0; b < cands.size(); ++b) {
                if (a == b) continue;
                std::vector<RatFunc> s;
                for (const auto& img : cands[b]) s.push_back(img.substitute(cands[a]));
                if (s == vars) continue;
                if (fixes(s)) autos_all_->push_back(std::move(s));
                if (autos_all_->size() > 64) break;
            }
    }
    return pairs ? *autos_all_ : *autos_single_;
}

bool Subfield::certify_independent(const std::vector<RatFunc>& elems) const
{
    const std::size_t m = elems.size();
    if (m == 0) return true;
    for (const auto& e : elems)
        if (e.is_zero()) return false;
    if (is_prime()) {
        PrimeSpan span(spec_.field, spec_.nvars());
        for (const auto& e : elems)
            if (span.add(e)) return false;
        return true;
    }
    if (m == 1) return true;
    if (grading_certificate(gens_, elems, spec_.nvars())) return true;

    const EvalField& ef = eval_field(spec_.characteristic());
    std::mt19937_64 rng(0x243f6a88 + m);
    std::vector<EvalField::Elem> point(spec_.nvars());
    for (auto& x : point) x = ef.random(rng);
    RowCollector rc(ef, point, m);
    const std::size_t budget = 40 * m + 40;
    std::size_t tried = 0;

    auto run_from = [&](const std::vector<RatFunc>& base) {
        ++tried;
        rc.add(base);
        if (rc.full()) return true;
        for (const auto& alpha : hasse_indices()) {
            if (tried++ > budget) return false;
            rc.add(apply_all(base, [&](const RatFunc& f) { return f.hasse(alpha); }));
            if (rc.full()) return true;
        }
        const auto& ders = derivations();
        std::vector<std::vector<RatFunc>> frontier{base};
        for (std::size_t len = 1; len < m && !frontier.empty(); ++len) {
            std::vector<std::vector<RatFunc>> next;
            for (const auto& vals : frontier)
                for (const auto& a : ders) {
                    if (tried++ > budget) return false;
                    auto w = apply_all(vals, [&](const RatFunc& f) { return apply_derivation(a, f); });
                    if (rc.add(w)) {
                        if (rc.full()) return true;
                        next.push_back(std::move(w));
                    }
                }
            frontier = std::move(next);
        }
        return false;
    };

    if (run_from(elems)) return true;
    for (bool pairs : {false, true}) {
        const auto& autos = automorphisms(pairs);
        const std::size_t start = pairs ? automorphisms(false).size() : 0;
        for (std::size_t s = start; s < autos.size(); ++s) {
            tried = 0;
            if (run_from(apply_all(elems, [&](const RatFunc& f) { return f.substitute(autos[s]); }))) return true;
        }
    }
    return false;
}

std::optional<RatFunc> Subfield::find_in_field(const RatFunc& x, int d) const
{
    if (x.is_constant()) return x;
    auto rel = find_dependence({spec_.one(), x}, d);
    if (!rel || rel->coeffs.size() != 2) return std::nullopt;
    return -(rel->coeffs[0] / rel->coeffs[1]);
}

bool Subfield::certify_not_in_field(const RatFunc& x) const { return certify_independent({spec_.one(), x}); }

LinDimResult lin_dim(const std::vector<RatFunc>& elems, const FieldSpec& over, int bound)
{
    if (bound < 1) throw FieldError("bound must be at least 1");
    if (elems.empty()) throw FieldError("lin_dim needs at least one element");
    for (const auto& e : elems) over.check_element(e);
    const Subfield k(over);
    LinDimResult out;
    out.bound = bound;
    if (k.certify_independent(elems)) {
        out.status = Status::holds;
        out.dimension = static_cast<int>(elems.size());
        for (std::size_t i = 0; i < elems.size(); ++i) out.basis.push_back(i);
        return out;
    }
    std::vector<RatFunc> chosen;
    for (std::size_t i = 0; i < elems.size(); ++i) {
        auto trial = chosen;
        trial.push_back(elems[i]);
        if (auto rel = k.find_dependence(trial, bound); rel && rel->coeffs.size() == trial.size()) {
            out.relations.emplace_back(i, std::move(*rel));
            continue;
        }
        chosen.push_back(elems[i]);
        out.basis.push_back(i);
    }
    out.dimension = static_cast<int>(chosen.size());
    out.status = k.certify_independent(chosen) ? Status::holds : Status::inconclusive;
    return out;
}

}  // namespace indep::field
