#include <doctest.h>

#include "indep/field/pchar.hpp"

using namespace indep;
using namespace indep::field;

namespace {

const std::vector<std::string> vars2{"t1", "t2"};

FieldSpec over(unsigned p, std::vector<std::string> gens = {}, std::vector<std::string> vars = vars2)
{
    FieldSpec s = FieldSpec::prime(PrimeField(p), vars);
    for (const auto& g : gens) s.gens.push_back(s.parse(g));
    return s;
}

std::vector<RatFunc> elems(const FieldSpec& s, std::vector<std::string> xs)
{
    std::vector<RatFunc> out;
    for (const auto& x : xs) out.push_back(s.parse(x));
    return out;
}

FieldSpec full(unsigned p, std::vector<std::string> vars = vars2) { return FieldSpec::ambient(PrimeField(p), vars); }

}  // namespace

TEST_CASE("p-th power coordinates")
{
    const auto k = over(3);
    for (const char* s : {"t1", "t1^5*t2 + 2", "(t1 + t2^4)/(t1*t2 + 1)", "1/t2^2"}) {
        const RatFunc y = k.parse(s);
        RatFunc back = k.zero();
        for (const auto& [j, c] : p_coordinates(y)) back += c.pow(3) * RatFunc(Poly::monomial(k.field, j));
        CHECK(back == y);
    }
}

TEST_CASE("DiffMatrix kills p-th powers")
{
    const auto k = over(5);
    const auto d = DiffMatrix::of(elems(k, {"(t1 + t2^2)^5", "t1^5/t2^10"}));
    for (const auto& row : d.rows)
        for (const auto& e : row) CHECK(e.is_zero());
}

TEST_CASE("p_independent examples")
{
    const auto f2 = over(2);
    const auto k = full(2);
    CHECK(p_independent(elems(f2, {"t1", "t2"}), f2, k).is_holds());
    const auto v = p_independent(elems(f2, {"t1", "t1^2"}), f2, k);
    REQUIRE(v.is_fails());
    CHECK(v.witness->index == 1);
    const auto w = p_independent(elems(f2, {"t1*t2^2"}), over(2, {"t1"}), k);
    REQUIRE(w.is_fails());
    CHECK_THROWS_AS(p_independent(elems(over(0), {"t1"}), over(0), full(0)), UnsupportedCharacteristic);
}

TEST_CASE("membership_oracle examples")
{
    const auto f2 = over(2);
    auto v = membership_oracle(f2.parse("t1^2"), f2, {}, 4);
    REQUIRE(v.is_fails());
    CHECK(v.witness->value() == f2.parse("t1^2"));
    v = membership_oracle(f2.parse("t1"), f2, elems(f2, {"t2"}), 4);
    CHECK(v.is_holds());
    v = membership_oracle(f2.parse("t1*t2^2"), over(2, {"t1"}), {}, 4);
    REQUIRE(v.is_fails());
    REQUIRE(v.witness->terms.size() == 1);
    CHECK(v.witness->terms[0].first == f2.parse("t2"));
    CHECK(v.witness->terms[0].second == f2.parse("t1"));
}

TEST_CASE("p_basis examples")
{
    CHECK(p_basis(over(3), elems(over(3), {"t1", "t2", "t1^2"}), full(3)) == elems(over(3), {"t1", "t2"}));
    CHECK(p_basis(over(2), elems(over(2), {"t1^2", "t1^4"}), full(2)).empty());
    CHECK(p_basis(over(2), elems(over(2), {"t1", "t1*t2^2"}), full(2)) == elems(over(2), {"t1"}));
}

TEST_CASE("imperfection_degree")
{
    for (unsigned p : {2u, 3u, 5u})
        for (int e = 0; e <= 3; ++e) {
            std::vector<std::string> vars;
            for (int i = 1; i <= e; ++i) vars.push_back("t" + std::to_string(i));
            const auto r = imperfection_degree(full(p, vars));
            CHECK(r.degree == e);
            int pe = 1;
            for (int i = 0; i < e; ++i) pe *= static_cast<int>(p);
            CHECK(r.basis_size == pe);
        }
    CHECK_THROWS_AS(imperfection_degree(over(2, {"t1"})), PreconditionError);
}

TEST_CASE("separable_extension examples")
{
    const auto one = full(2, {"t1"});
    CHECK(separable_extension(over(2, {"t1^2"}, {"t1"}), one).is_fails());
    CHECK(separable_extension(over(2, {"t1"}), full(2)).is_holds());
    CHECK(separable_extension(over(2), full(2)).is_holds());
    CHECK(separable_extension(over(2, {"t1^2", "t1"}), full(2)).is_holds());
    CHECK(separable_extension(over(3, {"t1^3 + t2^3", "t2"}), full(3)).is_fails());
}

TEST_CASE("mac_lane_check examples")
{
    {
        const auto r = mac_lane_check(over(2, {"t1"}), over(2, {"t1", "t2"}), 4);
        CHECK(r.status == Status::holds);
        CHECK(r.p_basis == elems(over(2), {"t2"}));
    }
    {
        const auto r = mac_lane_check(over(2, {"t1*t2"}), over(2, {"t1", "t2"}), 4);
        CHECK(r.status == Status::holds);
        CHECK(r.p_basis == elems(over(2), {"t1"}));
        REQUIRE(r.residual.size() == 1);
        CHECK(r.residual[0].first == over(2).parse("t2"));
        CHECK(r.residual[0].second.degree() == 1);
    }
    CHECK_THROWS_AS(mac_lane_check(over(2, {"t1^2"}, {"t1"}), over(2, {"t1"}, {"t1"}), 4), PreconditionError);
}
