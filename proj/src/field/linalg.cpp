#include "indep/field/linalg.hpp"

#include <algorithm>

#include "indep/field/modeval.hpp"

namespace indep::field {

namespace {

std::size_t weight(const RatFunc& f) { return f.num().size() + f.den().size(); }

// Row with denominators cleared by multiplying through by their product.
std::vector<Poly> clear_row(const Vec& row)
{
    Poly common;
    bool first = true;
    for (const auto& e : row) {
        if (e.is_zero() || e.is_polynomial()) continue;
        if (first) {
            common = e.den();
            first = false;
        } else if (!common.divide_exact(e.den())) {
            common = common * e.den();
        }
    }
    std::vector<Poly> out;
    out.reserve(row.size());
    for (const auto& e : row) {
        if (first || e.is_zero()) out.push_back(e.num());
        else out.push_back(e.num() * *common.divide_exact(e.den()));
    }
    return out;
}

int bareiss_rank(std::vector<std::vector<Poly>> a)
{
    const std::size_t rows = a.size();
    if (rows == 0) return 0;
    const std::size_t cols = a[0].size();
    const Poly& sample = a[0].empty() ? Poly() : a[0][0];
    Poly prev = Poly::constant(sample.field(), sample.nvars(), 1);
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t best = rows;
        for (std::size_t i = r; i < rows; ++i)
            if (!a[i][c].is_zero() && (best == rows || a[i][c].size() < a[best][c].size())) best = i;
        if (best == rows) continue;
        std::swap(a[r], a[best]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                Poly v = a[r][c] * a[i][j] - a[i][c] * a[r][j];
                auto q = v.divide_exact(prev);
                if (!q) throw FieldError("inexact Bareiss step");
                a[i][j] = std::move(*q);
            }
            a[i][c] = Poly(sample.field(), sample.nvars());
        }
        prev = a[r][c];
        ++r;
    }
    return static_cast<int>(r);
}

int eval_rank(const Matrix& m, const EvalField& ef, const std::vector<EvalField::Elem>& point, bool& ok)
{
    ok = true;
    const std::size_t rows = m.size();
    if (rows == 0) return 0;
    const std::size_t cols = m[0].size();
    std::vector<std::vector<EvalField::Elem>> a(rows, std::vector<EvalField::Elem>(cols));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) {
            auto v = ef.evaluate(m[i][j], point);
            if (!v) {
                ok = false;
                return 0;
            }
            a[i][j] = *v;
        }
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && a[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[r], a[piv]);
        const auto inv = ef.inv(a[r][c]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (a[i][c] == 0) continue;
            const auto f = ef.mul(a[i][c], inv);
            for (std::size_t j = c; j < cols; ++j) a[i][j] = ef.sub(a[i][j], ef.mul(f, a[r][j]));
        }
        ++r;
    }
    return static_cast<int>(r);
}

int nvars_of(const Matrix& m)
{
    for (const auto& row : m)
        for (const auto& e : row) return e.nvars();
    return 0;
}

}  // namespace

int rank_lower_bound(const Matrix& m, std::mt19937_64& rng, int points)
{
    if (m.empty() || m[0].empty()) return 0;
    const EvalField& ef = eval_field(m[0][0].characteristic());
    const int n = nvars_of(m);
    int best = 0;
    for (int t = 0; t < points; ++t) {
        std::vector<EvalField::Elem> pt(n);
        for (auto& x : pt) x = ef.random(rng);
        bool ok = false;
        best = std::max(best, eval_rank(m, ef, pt, ok));
        if (best == static_cast<int>(std::min(m.size(), m[0].size()))) break;
    }
    return best;
}

bool full_row_rank_certified(const Matrix& m, std::mt19937_64& rng, int points)
{
    if (m.empty()) return true;
    if (m[0].size() < m.size()) return false;
    return rank_lower_bound(m, rng, points) == static_cast<int>(m.size());
}

int rank(const Matrix& m)
{
    if (m.empty() || m[0].empty()) return 0;
    std::mt19937_64 rng(0x5eed);
    const int lb = rank_lower_bound(m, rng, 2);
    if (lb == static_cast<int>(std::min(m.size(), m[0].size()))) return lb;
    std::vector<std::vector<Poly>> a;
    a.reserve(m.size());
    for (const auto& row : m) a.push_back(clear_row(row));
    return bareiss_rank(std::move(a));
}

namespace {

// Reduced row echelon form over the ambient field; returns pivot columns.
std::vector<std::size_t> rref(Matrix& a, std::size_t cols)
{
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
        std::size_t best = a.size();
        for (std::size_t i = r; i < a.size(); ++i)
            if (!a[i][c].is_zero() && (best == a.size() || weight(a[i][c]) < weight(a[best][c]))) best = i;
        if (best == a.size()) continue;
        std::swap(a[r], a[best]);
        const RatFunc inv = a[r][c].inverse();
        for (std::size_t j = c; j < a[r].size(); ++j)
            if (!a[r][j].is_zero()) a[r][j] = a[r][j] * inv;
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (i == r || a[i][c].is_zero()) continue;
            const RatFunc f = a[i][c];
            for (std::size_t j = c; j < a[i].size(); ++j)
                if (!a[r][j].is_zero()) a[i][j] -= f * a[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

std::vector<Vec> kernel(const Matrix& m, int cols, PrimeField f, int nvars)
{
    std::vector<Vec> out;
    Matrix a = m;
    const auto pivots = rref(a, static_cast<std::size_t>(cols));
    const RatFunc zero(f, nvars);
    const RatFunc one = RatFunc::constant(f, nvars, 1);
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivots) is_pivot[c] = true;
    for (int free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        Vec v(cols, zero);
        v[free] = one;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a[r][free];
        out.push_back(std::move(v));
    }
    return out;
}

std::optional<Vec> solve_columns(const std::vector<Vec>& columns, const Vec& target)
{
    const std::size_t rows = target.size();
    const std::size_t n = columns.size();
    if (rows == 0) return Vec(n);
    const RatFunc zero(target[0].field(), target[0].nvars());
    Matrix a(rows, Vec(n + 1, zero));
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < n; ++j) a[i][j] = columns[j][i];
        a[i][n] = target[i];
    }
    const auto pivots = rref(a, n + 1);
    Vec x(n, zero);
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        if (pivots[r] == n) return std::nullopt;
        x[pivots[r]] = a[r][n];
    }
    return x;
}

PrimeSpan::PrimeSpan(PrimeField f, int nvars) : field_(f), nvars_(nvars), den_(Poly::constant(f, nvars, 1)) {}

Poly PrimeSpan::numerator_over_common(const RatFunc& v, Poly& den, std::vector<Row>& rows) const
{
    const Poly& d = v.den();
    if (d == den) return v.num();
    if (auto q = den.divide_exact(d)) return v.num() * *q;
    if (auto q = d.divide_exact(den)) {
        for (auto& r : rows) r.poly = r.poly * *q;
        den = d;
        return v.num();
    }
    for (auto& r : rows) r.poly = r.poly * d;
    Poly n = v.num() * den;
    den = den * d;
    return n;
}

void PrimeSpan::rebuild_leads()
{
    leads_.clear();
    for (std::size_t i = 0; i < rows_.size(); ++i) leads_.emplace(rows_[i].poly.leading().exp, i);
}

std::optional<std::vector<Rational>> PrimeSpan::reduce(Poly n, const std::vector<Row>& rows,
                                                       const std::map<Exponents, std::size_t>& leads,
                                                       std::vector<Rational>* combo_out) const
{
    // combo accumulates λ with n_original = n_current + Σ λ_i accepted_i.
    std::vector<Rational> combo(rows.size(), Rational(0));
    while (!n.is_zero()) {
        auto it = leads.find(n.leading().exp);
        if (it == leads.end()) {
            if (combo_out) *combo_out = std::move(combo);
            return std::nullopt;
        }
        const Row& row = rows[it->second];
        const Rational c = field_.mul(n.leading().coeff, field_.inv(row.poly.leading().coeff));
        n = n - row.poly.scaled(c);
        for (std::size_t i = 0; i < row.combo.size(); ++i)
            if (row.combo[i] != 0) combo[i] = field_.add(combo[i], field_.mul(c, row.combo[i]));
    }
    return combo;
}

std::optional<std::vector<Rational>> PrimeSpan::express(const RatFunc& v) const
{
    if (v.is_zero()) return std::vector<Rational>(rows_.size(), Rational(0));
    Poly den = den_;
    std::vector<Row> rows = rows_;
    const Poly n = numerator_over_common(v, den, rows);
    if (den == den_) return reduce(n, rows_, leads_, nullptr);
    std::map<Exponents, std::size_t> leads;
    for (std::size_t i = 0; i < rows.size(); ++i) leads.emplace(rows[i].poly.leading().exp, i);
    return reduce(n, rows, leads, nullptr);
}

std::optional<std::vector<Rational>> PrimeSpan::add(const RatFunc& v)
{
    if (v.is_zero()) return std::vector<Rational>(rows_.size(), Rational(0));
    const Poly before = den_;
    Poly n = numerator_over_common(v, den_, rows_);
    if (!(den_ == before)) rebuild_leads();
    // Work on a copy so the accepted row can be stored reduced.
    Poly work = n;
    std::vector<Rational> lambda(rows_.size(), Rational(0));
    while (!work.is_zero()) {
        auto it = leads_.find(work.leading().exp);
        if (it == leads_.end()) break;
        const Row& row = rows_[it->second];
        const Rational c = field_.mul(work.leading().coeff, field_.inv(row.poly.leading().coeff));
        work = work - row.poly.scaled(c);
        for (std::size_t i = 0; i < row.combo.size(); ++i)
            if (row.combo[i] != 0) lambda[i] = field_.add(lambda[i], field_.mul(c, row.combo[i]));
    }
    if (work.is_zero()) return lambda;
    // New row: work = v - Σ λ_i accepted_i.
    const std::size_t idx = rows_.size();
    for (auto& r : rows_) r.combo.push_back(Rational(0));
    std::vector<Rational> c(idx + 1, Rational(0));
    for (std::size_t i = 0; i < idx; ++i) c[i] = field_.neg(lambda[i]);
    c[idx] = 1;
    leads_.emplace(work.leading().exp, idx);
    rows_.push_back({std::move(work), std::move(c)});
    return std::nullopt;
}

}  // namespace indep::field
