#pragma once

#include <map>
#include <optional>
#include <random>
#include <vector>

#include "indep/field/ratfunc.hpp"

namespace indep::field {

using Vec = std::vector<RatFunc>;
using Matrix = std::vector<Vec>;

// Exact rank over the ambient rational function field.
int rank(const Matrix& m);

// Lower bound on the rank from evaluations at random points. When it equals
// the number of rows the rows are certainly independent.
int rank_lower_bound(const Matrix& m, std::mt19937_64& rng, int points = 2);
bool full_row_rank_certified(const Matrix& m, std::mt19937_64& rng, int points = 3);

// Basis of {x : m·x = 0} over the ambient field.
std::vector<Vec> kernel(const Matrix& m, int cols, PrimeField f, int nvars);
// Some x with Σ x_i·columns[i] = target, if one exists.
std::optional<Vec> solve_columns(const std::vector<Vec>& columns, const Vec& target);

// Incremental linear algebra over the prime field for elements of the
// ambient field. Accepted vectors are stored in echelon form by leading
// monomial over a shared denominator.
class PrimeSpan {
public:
    PrimeSpan(PrimeField f, int nvars);

    // If v lies in the span of the accepted vectors, returns coefficients
    // λ with v = Σ λ_i·accepted_i and leaves the span unchanged; otherwise
    // accepts v and returns nullopt.
    std::optional<std::vector<Rational>> add(const RatFunc& v);
    // Membership test without accepting.
    std::optional<std::vector<Rational>> express(const RatFunc& v) const;
    std::size_t rank() const { return rows_.size(); }

private:
    struct Row {
        Poly poly;
        std::vector<Rational> combo;
    };
    Poly numerator_over_common(const RatFunc& v, Poly& den, std::vector<Row>& rows) const;
    std::optional<std::vector<Rational>> reduce(Poly n, const std::vector<Row>& rows,
                                                const std::map<Exponents, std::size_t>& leads,
                                                std::vector<Rational>* combo_out) const;
    void rebuild_leads();

    PrimeField field_;
    int nvars_;
    Poly den_;
    std::vector<Row> rows_;
    std::map<Exponents, std::size_t> leads_;
};

}  // namespace indep::field
