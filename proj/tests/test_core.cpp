#include <doctest.h>

#include "indep/core/axioms.hpp"
#include "indep/core/report_json.hpp"

using namespace indep;

namespace {

// A ⫝_C B iff A ⊆ B: asymmetric on purpose.
class SubsetRelation : public Relation {
public:
    explicit SubsetRelation(int n) : n_(n) {}
    int universe_size() const override { return n_; }
    Status status(PointSet a, PointSet b, PointSet) const override
    {
        return a.subset_of(b) ? Status::holds : Status::fails;
    }

private:
    int n_;
};

// Disjointness over the base: (A∖C) ∩ (B∖C) = ∅.
class DisjointRelation : public Relation {
public:
    explicit DisjointRelation(int n) : n_(n) {}
    int universe_size() const override { return n_; }
    Status status(PointSet a, PointSet b, PointSet c) const override
    {
        return (a.minus(c) & b.minus(c)).empty() ? Status::holds : Status::fails;
    }
    std::optional<PointSet> closure(PointSet x) const override { return x; }

private:
    int n_;
};

// Holds when |A ∪ B| is even; subsets of an independent pair need not be.
class ParityRelation : public Relation {
public:
    explicit ParityRelation(int n) : n_(n) {}
    int universe_size() const override { return n_; }
    Status status(PointSet a, PointSet b, PointSet) const override
    {
        return (a | b).size() % 2 == 0 ? Status::holds : Status::fails;
    }

private:
    int n_;
};

template <class R>
InstanceFamily family_of(int max_n, bool autos)
{
    InstanceFamily fam;
    fam.name = "toy";
    fam.size = static_cast<std::size_t>(max_n) + 1;
    fam.provides_automorphisms = autos;
    fam.make = [](std::size_t i) {
        Instance inst;
        inst.relation = std::make_shared<R>(static_cast<int>(i));
        inst.label = "n=" + std::to_string(i);
        if (i >= 2) {
            Permutation swap(i);
            for (std::size_t k = 0; k < i; ++k) swap[k] = static_cast<int>(k);
            std::swap(swap[0], swap[1]);
            inst.automorphisms.push_back(swap);
        }
        return inst;
    };
    return fam;
}

}  // namespace

TEST_CASE("subsets are ordered by size then lexicographically")
{
    auto subs = subsets_by_size(PointSet::first(3), 2);
    std::vector<std::uint64_t> bits;
    for (auto s : subs) bits.push_back(s.bits());
    CHECK(bits == std::vector<std::uint64_t>{0b000, 0b001, 0b010, 0b100, 0b011, 0b101, 0b110});
    CHECK(all_subsets(PointSet(0b101)).size() == 4);
    CHECK(all_subsets(PointSet()).size() == 1);
}

TEST_CASE("evaluate applies the C∪A, C∪B convention")
{
    SubsetRelation rel(4);
    // {0} ⊆ {1}? no; but C = {0} makes A∪C = {0} ⊆ B∪C = {0,1}.
    CHECK(evaluate(rel, {PointSet(0b01), PointSet(0b10), PointSet()}).is_fails());
    CHECK(evaluate(rel, {PointSet(0b01), PointSet(0b10), PointSet(0b01)}).is_holds());
    CHECK_THROWS_AS(evaluate(rel, {PointSet::single(7), PointSet(), PointSet()}), DomainError);
}

TEST_CASE("symmetry violation is found and re-verifies")
{
    auto fam = family_of<SubsetRelation>(3, false);
    auto report = verify_axiom(Axiom::symmetry, fam);
    CHECK_FALSE(report.held());
    REQUIRE_FALSE(report.counterexamples.empty());
    CHECK(report.counterexamples.front().structure == "n=1");
    auto serial = verify_axiom_serial(Axiom::symmetry, fam);
    CHECK(serial.violations == report.violations);
    CHECK(serial.instances_checked == report.instances_checked);
    REQUIRE(serial.counterexamples.size() == report.counterexamples.size());
    for (std::size_t i = 0; i < serial.counterexamples.size(); ++i)
        CHECK(serial.counterexamples[i].sets == report.counterexamples[i].sets);
}

TEST_CASE("disjointness satisfies every finitely checkable axiom")
{
    auto fam = family_of<DisjointRelation>(4, true);
    for (Axiom ax : all_axioms()) {
        CAPTURE(to_string(ax));
        auto report = verify_axiom(ax, fam);
        CHECK(report.held());
        CHECK(report.instances_checked > 0);
    }
}

TEST_CASE("invariance needs automorphisms")
{
    auto fam = family_of<DisjointRelation>(2, false);
    CHECK_THROWS_AS(verify_axiom(Axiom::invariance, fam), ConfigurationError);
}

TEST_CASE("basedness needs a closure")
{
    auto fam = family_of<SubsetRelation>(2, false);
    CHECK_THROWS_AS(verify_axiom(Axiom::basedness, fam), ConfigurationError);
}

TEST_CASE("enlarging the family keeps earlier counterexamples")
{
    auto small = verify_axiom(Axiom::symmetry, family_of<SubsetRelation>(2, false));
    auto large = verify_axiom(Axiom::symmetry, family_of<SubsetRelation>(4, false));
    CHECK(large.violations >= small.violations);
    for (std::size_t i = 0; i < small.counterexamples.size(); ++i)
        CHECK(large.counterexamples[i].sets == small.counterexamples[i].sets);
}

TEST_CASE("report json shape")
{
    auto report = verify_axiom(Axiom::symmetry, family_of<DisjointRelation>(2, false));
    auto j = to_json(report);
    CHECK(j["axiom"] == "Symmetry");
    CHECK(j["checked"].get<std::size_t>() == report.instances_checked);
    CHECK(j["counterexamples"].is_array());
    CHECK(j["counterexamples"].empty());
    CHECK(parse_axiom("BaseMonotonicity") == Axiom::base_monotonicity);
    CHECK_FALSE(parse_axiom("Extension"));
}

TEST_CASE("finite character violations match a brute-force count")
{
    auto fam = family_of<ParityRelation>(4, false);
    std::size_t expected = 0;
    for (std::size_t n = 0; n < fam.size; ++n) {
        const auto inst = fam.make(n);
        const auto small = subsets_by_size(PointSet::first(static_cast<int>(n)), 3);
        for (PointSet a : small)
            for (PointSet b : small)
                for (PointSet c : small) {
                    const Status whole = normalized_status(*inst.relation, a, b, c);
                    Status parts = Status::holds;
                    for (PointSet x : all_subsets(a))
                        for (PointSet y : all_subsets(b)) parts = conjoin(parts, normalized_status(*inst.relation, x, y, c));
                    if (whole != parts) ++expected;
                }
    }
    const auto report = verify_axiom(Axiom::finite_character, fam);
    CHECK(expected > 0);
    CHECK(report.violations == expected);
    CHECK(verify_axiom_serial(Axiom::finite_character, fam).violations == expected);
}
