#include <doctest.h>

#include "indep/field/lindep.hpp"

using namespace indep;
using namespace indep::field;

namespace {

const std::vector<std::string> vars3{"t1", "t2", "t3"};

FieldSpec over(unsigned p, std::vector<std::string> gens)
{
    FieldSpec s = FieldSpec::prime(PrimeField(p), vars3);
    for (const auto& g : gens) s.gens.push_back(s.parse(g));
    return s;
}

std::vector<RatFunc> elems(const FieldSpec& s, std::vector<std::string> xs)
{
    std::vector<RatFunc> out;
    for (const auto& x : xs) out.push_back(s.parse(x));
    return out;
}

}  // namespace

TEST_CASE("lin_dim examples")
{
    {
        const auto k = over(0, {});
        const auto r = lin_dim(elems(k, {"1", "t1"}), k, 4);
        CHECK(r.status == Status::holds);
        CHECK(r.dimension == 2);
    }
    {
        const auto k = over(0, {"t1^2"});
        const auto es = elems(k, {"1", "t1", "t1^2"});
        const auto r = lin_dim(es, k, 4);
        CHECK(r.status == Status::holds);
        CHECK(r.dimension == 2);
        REQUIRE(r.relations.size() == 1);
        CHECK(r.relations[0].first == 2);
        // The relation is over {1, t1, t1^2}: t1^2·1 - 1·t1^2.
        CHECK(check_relation(r.relations[0].second, es));
    }
    {
        // t2 = (t1 + t2)·1 - t1, so the span has dimension 2.
        const auto k = over(0, {"t1 + t2"});
        const auto es = elems(k, {"1", "t1", "t2"});
        const auto r = lin_dim(es, k, 4);
        CHECK(r.status == Status::holds);
        CHECK(r.dimension == 2);
        REQUIRE(r.relations.size() == 1);
        CHECK(check_relation(r.relations[0].second, es));
        const auto& c = r.relations[0].second.coeffs;
        CHECK(c[2] / c[0] == k.parse("-1/(t1 + t2)"));
    }
    CHECK_THROWS_AS(lin_dim(elems(over(0, {}), {"1"}), over(0, {}), 0), FieldError);
}

TEST_CASE("dependence over prime fields matches hand relations")
{
    const auto k = over(0, {});
    const Subfield q(k);
    auto rel = q.find_dependence(elems(k, {"t1", "1/t2", "(t1*t2 - 3)/t2"}), 4);
    REQUIRE(rel);
    CHECK(rel->coeffs.size() == 3);
    CHECK(check_relation(*rel, elems(k, {"t1", "1/t2", "(t1*t2 - 3)/t2"})));
    CHECK_FALSE(q.find_dependence(elems(k, {"t1", "t2", "t1*t2"}), 4));
    CHECK(q.certify_independent(elems(k, {"t1", "t2", "t1*t2"})));
}

TEST_CASE("independence certificates")
{
    // Derivations killing the base: ∂1 - ∂2 for ℚ(t1 + t2).
    CHECK(Subfield(over(0, {"t1 + t2"})).certify_independent(elems(over(0, {}), {"1", "t1"})));
    // The automorphism t1 ↦ -t1 fixes ℚ(t1^2).
    CHECK(Subfield(over(0, {"t1^2"})).certify_independent(elems(over(0, {}), {"1", "t1"})));
    // Symmetric functions: the swap t1 ↔ t2.
    CHECK(Subfield(over(0, {"t1 + t2", "t1*t2"})).certify_independent(elems(over(0, {}), {"1", "t1"})));
    // Hasse derivative D^(1) kills t1^2 in characteristic 2.
    CHECK(Subfield(over(2, {"t1^2"})).certify_independent(elems(over(2, {}), {"1", "t1"})));
    // Wronskian in t1 over ℚ(t2).
    CHECK(Subfield(over(0, {"t2"})).certify_independent(elems(over(0, {}), {"1", "t1", "t1^2", "t1^3", "t1^4"})));
    // Certificates are never issued for dependent tuples.
    CHECK_FALSE(Subfield(over(0, {"t1^2"})).certify_independent(elems(over(0, {}), {"1", "t1", "t1^2"})));
    CHECK_FALSE(Subfield(over(3, {"t1^3"})).certify_independent(elems(over(3, {}), {"t1^3", "1"})));
}

TEST_CASE("field membership")
{
    const auto k = over(0, {"t1 + t2", "t1*t2"});
    const Subfield s(k);
    auto x = s.find_in_field(k.parse("t1^2 + t2^2"), 2);
    REQUIRE(x);
    CHECK(*x == k.parse("t1^2 + t2^2"));
    CHECK_FALSE(s.find_in_field(k.parse("t1"), 4));
    CHECK(s.certify_not_in_field(k.parse("t1")));
}

TEST_CASE("exponent classes certify independence over monomial bases")
{
    // No derivation or substitution fixes t1^3 over Q; the classes mod 3Z do.
    const auto k = over(0, {"t1^3", "t2"});
    CHECK(Subfield(k).certify_independent(elems(k, {"1", "t1", "t1^2"})));
    const auto r = lin_dim(elems(k, {"1", "t1", "t1^2", "t1^3"}), k, 3);
    CHECK(r.status == Status::holds);
    CHECK(r.dimension == 3);
    // Lattice generated by (2, 1) and (0, 3): t1^2*t2 sits in the class of 1.
    const auto k2 = over(5, {"t1^2*t2", "t2^3"});
    CHECK_FALSE(Subfield(k2).certify_independent(elems(k2, {"1", "t1^2*t2"})));
    CHECK(Subfield(k2).certify_independent(elems(k2, {"1", "t1", "t2", "t1*t2"})));
    CHECK(Subfield(k2).certify_independent(elems(k2, {"1/t1", "t2^2/t1"})));
    CHECK(lin_dim(elems(k2, {"t1^4*t2^2 + 1", "t1^2*t2"}), k2, 2).dimension == 1);

    // Soundness sweep: a certificate never coexists with a found dependence.
    const std::vector<std::string> pool{"1", "t1", "t2", "t1^2", "t1*t2", "t2^2", "t1^3", "t1^2*t2", "1/t1", "t3"};
    const std::vector<std::vector<std::string>> bases{{"t1^2"}, {"t1^3", "t2"}, {"t1*t2"}, {"t1^2*t2", "t2^3"}};
    int certified = 0;
    for (unsigned p : {0u, 2u, 3u})
        for (const auto& b : bases) {
            const Subfield sf(over(p, b));
            for (std::size_t i = 0; i < pool.size(); ++i)
                for (std::size_t j = i + 1; j < pool.size(); ++j)
                    for (std::size_t l = j + 1; l < pool.size(); ++l) {
                        const auto xs = elems(sf.spec(), {pool[i], pool[j], pool[l]});
                        if (!sf.certify_independent(xs)) continue;
                        ++certified;
                        CHECK_FALSE(sf.find_dependence(xs, 3));
                    }
        }
    CHECK(certified > 100);
}
