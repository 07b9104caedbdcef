#include <doctest.h>

#include <random>

#include "indep/field/expr.hpp"
#include "indep/field/linalg.hpp"
#include "indep/field/modeval.hpp"

using namespace indep::field;

namespace {

const std::vector<std::string> names3{"t1", "t2", "t3"};

RatFunc q3(const std::string& s) { return parse_expr(s, names3, PrimeField(0)); }
RatFunc f2(const std::string& s) { return parse_expr(s, names3, PrimeField(2)); }
RatFunc f3(const std::string& s) { return parse_expr(s, names3, PrimeField(3)); }

std::vector<Rational> random_point(std::mt19937& rng)
{
    std::uniform_int_distribution<int> d(-50, 50);
    std::vector<Rational> x{Rational(d(rng), 1), Rational(d(rng), 7), Rational(d(rng), 1)};
    for (auto& v : x) v.canonicalize();
    return x;
}

// Random polynomial with small coefficients and degree ≤ 3.
Poly random_poly(std::mt19937& rng, PrimeField f)
{
    std::uniform_int_distribution<int> e(0, 2), c(-3, 3), len(1, 4);
    std::vector<Term> ts;
    for (int i = len(rng); i > 0; --i) ts.push_back({{e(rng), e(rng), e(rng)}, Rational(c(rng))});
    Poly p = Poly::from_terms(f, 3, ts);
    if (p.is_zero()) p = Poly::constant(f, 3, 1);
    return p;
}

// Direct evaluation of a polynomial, independent of RatFunc.
Rational eval(const Poly& p, const std::vector<Rational>& x)
{
    Rational acc = 0;
    for (const auto& t : p.terms()) {
        Rational m = t.coeff;
        for (int k = 0; k < 3; ++k)
            for (int i = 0; i < t.exp[k]; ++i) m *= x[k];
        acc += m;
    }
    return acc;
}

}  // namespace

TEST_CASE("prime field arithmetic")
{
    PrimeField f5(5);
    CHECK(f5.reduce(Rational(7)) == 2);
    CHECK(f5.reduce(Rational(-1)) == 4);
    CHECK(f5.reduce(Rational(1, 2)) == 3);
    CHECK(f5.mul(f5.inv(3), 3) == 1);
    CHECK_THROWS_AS(PrimeField(4), FieldError);
    CHECK_THROWS_AS(f5.inv(0), FieldError);
    CHECK(PrimeField(0).reduce(Rational(2, 4)) == Rational(1, 2));
}

TEST_CASE("poly ring operations agree with evaluation")
{
    std::mt19937 rng(7);
    PrimeField q(0);
    for (int trial = 0; trial < 200; ++trial) {
        const Poly a = random_poly(rng, q), b = random_poly(rng, q);
        const auto x = random_point(rng);
        CHECK(eval(a + b, x) == eval(a, x) + eval(b, x));
        CHECK(eval(a - b, x) == eval(a, x) - eval(b, x));
        CHECK(eval(a * b, x) == eval(a, x) * eval(b, x));
        const auto quotient = (a * b).divide_exact(b);
        REQUIRE(quotient);
        CHECK(*quotient == a);
    }
}

TEST_CASE("grlex order and leading terms")
{
    const RatFunc p = q3("t2^2 + t1*t3 + t1^2 - 3");
    const auto& ts = p.num().terms();
    REQUIRE(ts.size() == 4);
    CHECK(ts[0].exp == Exponents{2, 0, 0});
    CHECK(ts[1].exp == Exponents{1, 0, 1});
    CHECK(ts[2].exp == Exponents{0, 2, 0});
    CHECK(ts[3].exp == Exponents{0, 0, 0});
    CHECK(grlex_greater({0, 0, 3}, {2, 0, 0}));
}

TEST_CASE("exact division detects non-divisibility")
{
    CHECK_FALSE(q3("t1^2 + 1").num().divide_exact(q3("t1 + 1").num()));
    CHECK(q3("t1^2 - 1").num().divide_exact(q3("t1 + 1").num()));
}

TEST_CASE("rational functions")
{
    CHECK(q3("(t1^2 - 1)/(t1 - 1)") == q3("t1 + 1"));
    CHECK(q3("(t1^2 - 1)/(t1 - 1)").is_polynomial());
    CHECK(q3("1/t1 + 1/t2") == q3("(t1 + t2)/(t1*t2)"));
    CHECK(q3("t1/t2 * t2/t1") == q3("1"));
    CHECK(q3("t1^-2") == q3("1/t1^2"));
    CHECK(q3("(t1+t2)^3 - t1^3 - t2^3") == q3("3*t1^2*t2 + 3*t1*t2^2"));
    CHECK(f2("(t1+t2)^2") == f2("t1^2 + t2^2"));
    CHECK(f3("(t1+t2)^3") == f3("t1^3 + t2^3"));
    CHECK(f2("t1 + t1") == f2("0"));
    CHECK(q3("2/4") == q3("1/2"));

    std::mt19937 rng(11);
    PrimeField q(0);
    for (int trial = 0; trial < 100; ++trial) {
        const RatFunc a(random_poly(rng, q), random_poly(rng, q));
        const RatFunc b(random_poly(rng, q), random_poly(rng, q));
        const auto x = random_point(rng);
        const auto va = a.evaluate(x), vb = b.evaluate(x);
        if (!va || !vb) continue;
        CHECK(*(a + b).evaluate(x) == *va + *vb);
        CHECK(*(a * b).evaluate(x) == *va * *vb);
        if (*vb != 0 && !b.is_zero()) CHECK(*(a / b).evaluate(x) == *va / *vb);
    }
}

TEST_CASE("expression parser diagnostics")
{
    CHECK_THROWS_AS(q3("t4 + 1"), ExprError);
    CHECK_THROWS_AS(q3("t1 +"), ExprError);
    CHECK_THROWS_AS(q3("(t1"), ExprError);
    CHECK_THROWS_AS(q3("t1/0"), ExprError);
    try {
        q3("t1 + $");
        FAIL("expected error");
    } catch (const ExprError& e) {
        CHECK(e.offset() == 5);
    }
}

TEST_CASE("rendering round-trips")
{
    for (const char* s : {"t1^2 - 2*t2 - t3", "t1*t2/t3", "(t1 + 1)/(t2*t3)", "-t1 + 1/2", "1/(t1 - t2)"}) {
        const RatFunc v = q3(s);
        CHECK(q3(v.to_string(names3)) == v);
    }
    CHECK(f3("2*t1").to_string(names3) == "-t1");
}

TEST_CASE("derivatives")
{
    std::mt19937 rng(3);
    PrimeField q(0);
    // Leibniz and quotient rules against the product-rule expansion.
    for (int trial = 0; trial < 50; ++trial) {
        const RatFunc a(random_poly(rng, q), random_poly(rng, q));
        const RatFunc b(random_poly(rng, q));
        for (int v = 0; v < 3; ++v) {
            CHECK((a * b).derivative(v) == a.derivative(v) * b + a * b.derivative(v));
            CHECK((a + b).derivative(v) == a.derivative(v) + b.derivative(v));
        }
    }
    // p-th powers are constants for every derivation.
    for (PrimeField f : {PrimeField(2), PrimeField(3), PrimeField(5)}) {
        for (int trial = 0; trial < 20; ++trial) {
            const RatFunc a(random_poly(rng, f), random_poly(rng, f));
            const RatFunc ap = a.pow(static_cast<int>(f.characteristic()));
            for (int v = 0; v < 3; ++v) CHECK(ap.derivative(v).is_zero());
        }
    }
}

TEST_CASE("hasse derivatives")
{
    // D^(2) t^5 = C(5,2) t^3, surviving in characteristic 2 where d² vanishes.
    CHECK(f2("t1^2").hasse({2, 0, 0}) == f2("1"));
    CHECK(f2("t1^2").derivative(0).is_zero());
    CHECK(q3("t1^5").hasse({2, 0, 0}) == q3("10*t1^3"));
    // Over ℚ, D^(α) of a rational function is the ordinary derivative over α!.
    std::mt19937 rng(5);
    PrimeField q(0);
    for (int trial = 0; trial < 20; ++trial) {
        const RatFunc a(random_poly(rng, q), random_poly(rng, q));
        CHECK(a.hasse({2, 1, 0}) == a.derivative(0).derivative(0).derivative(1).scaled(Rational(1, 2)));
    }
    // Taylor-coefficient identity in characteristic 3 for a quotient.
    const RatFunc r = f3("t1^4/(t1 + t2)");
    const RatFunc s = f3("t1 + t2");
    // D^(3)(r·s) = Σ D^(i) r · D^(3-i) s, and D^(≥2) s = 0.
    CHECK((r * s).hasse({3, 0, 0}) == r.hasse({3, 0, 0}) * s + r.hasse({2, 0, 0}));
}

TEST_CASE("substitution")
{
    const RatFunc p = q3("t1^2 + t2");
    CHECK(p.substitute({q3("t1 + 1"), q3("1/t3"), q3("t3")}) == q3("(t1+1)^2 + 1/t3"));
}

TEST_CASE("evaluation fields")
{
    for (unsigned p : {0u, 2u, 3u, 5u, 7u, 65521u}) {
        const EvalField& ef = eval_field(p);
        std::mt19937_64 rng(p);
        for (int i = 0; i < 200; ++i) {
            const auto a = ef.random(rng), b = ef.random(rng), c = ef.random(rng);
            CHECK(ef.mul(a, ef.add(b, c)) == ef.add(ef.mul(a, b), ef.mul(a, c)));
            CHECK(ef.add(ef.sub(a, b), b) == a);
            if (a != 0) CHECK(ef.mul(a, ef.inv(a)) == 1);
        }
        if (p != 0) {
            // Frobenius is additive.
            const auto a = ef.random(rng), b = ef.random(rng);
            CHECK(ef.pow(ef.add(a, b), p) == ef.add(ef.pow(a, p), ef.pow(b, p)));
        }
    }
}

TEST_CASE("rank, kernel and solve")
{
    // Jacobian of (t1*t2, t1 + t2, t1^2 + t2^2) has rank 2.
    const Matrix j{{q3("t2"), q3("t1"), q3("0")}, {q3("1"), q3("1"), q3("0")}, {q3("2*t1"), q3("2*t2"), q3("0")}};
    CHECK(rank(j) == 2);
    CHECK(rank({{f2("t2^2"), f2("0")}, {f2("1"), f2("0")}}) == 1);
    CHECK(rank({{f2("t1"), f2("t2")}, {f2("t2"), f2("t1")}}) == 2);
    CHECK(rank({{f2("t1+t2"), f2("t1*t2")}, {f2("t1^2+t2^2"), f2("t1^2*t2 + t1*t2^2")}}) == 1);
    const auto ker = kernel(j, 3, PrimeField(0), 3);
    REQUIRE(ker.size() == 1);
    for (const auto& row : j) {
        RatFunc acc = q3("0");
        for (int c = 0; c < 3; ++c) acc += row[c] * ker[0][c];
        CHECK(acc.is_zero());
    }
    auto x = solve_columns({{q3("1"), q3("t1")}, {q3("t2"), q3("0")}}, {q3("t1 + t2"), q3("t1^2")});
    REQUIRE(x);
    CHECK((*x)[0] == q3("t1"));
    CHECK((*x)[1] == q3("1"));
    CHECK_FALSE(solve_columns({{q3("1"), q3("1")}}, {q3("1"), q3("2")}));
}

TEST_CASE("prime-field span")
{
    PrimeSpan span(PrimeField(0), 3);
    CHECK_FALSE(span.add(q3("1/t1")));
    CHECK_FALSE(span.add(q3("1/t2")));
    CHECK_FALSE(span.add(q3("t1")));
    auto dep = span.add(q3("(2*t1 + 3*t2)/(t1*t2) - t1"));
    REQUIRE(dep);
    CHECK(*dep == std::vector<Rational>{Rational(3), Rational(2), Rational(-1)});
    CHECK(span.rank() == 3);
    PrimeSpan s2(PrimeField(2), 3);
    CHECK_FALSE(s2.add(f2("t1^2 + t2^2")));
    CHECK_FALSE(s2.add(f2("t1 + t2")));
    auto d2 = s2.add(f2("(t1 + t2)^2"));
    REQUIRE(d2);
    CHECK(*d2 == std::vector<Rational>{Rational(1), Rational(0)});
}
