#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "indep/field/ratfunc.hpp"

namespace indep::field {

// A finite field used to evaluate rational functions at random points: the
// prime 2^61 - 1 for characteristic 0, and GF(p^k) with p^k near 2^16 for
// characteristic p. Rank computed after evaluation never exceeds the true rank.
class EvalField {
public:
    using Elem = std::uint64_t;

    explicit EvalField(unsigned characteristic);

    unsigned characteristic() const { return p_; }
    std::uint64_t order() const { return q_; }

    Elem add(Elem a, Elem b) const;
    Elem sub(Elem a, Elem b) const;
    Elem mul(Elem a, Elem b) const;
    Elem inv(Elem a) const;
    Elem pow(Elem a, std::uint64_t e) const;
    // Image of a prime-field element; nullopt when a denominator vanishes mod P.
    std::optional<Elem> from_rational(const Rational& r) const;
    Elem random(std::mt19937_64& rng) const;

    std::optional<Elem> evaluate(const Poly& p, const std::vector<Elem>& point) const;
    std::optional<Elem> evaluate(const RatFunc& f, const std::vector<Elem>& point) const;

private:
    unsigned p_;
    int k_ = 1;
    std::uint64_t q_;
    std::vector<std::uint32_t> exp_, log_;
};

// Shared per characteristic; construction of the GF(p^k) tables is not free.
const EvalField& eval_field(unsigned characteristic);

}  // namespace indep::field
