#pragma once

#include <memory>
#include <mutex>

#include "indep/core/axioms.hpp"
#include "indep/theories/jet.hpp"
#include "indep/theories/scf.hpp"

namespace indep::theories {

// Closure under δ and r (r(x) = x^(1/p) when δx = 0, else 0), applied to
// generators. Reaching the truncation horizon or a missing p-th root marks
// the result inconclusive, or throws HorizonError when `strict` is set.
ClosureResult dcfp_dcl(const std::vector<RatFunc>& a, const JetDiffField& k, int iterations, int bound,
                       bool strict = false);

// Linear disjointness of the dcfp_dcl closures over the closure of C. It
// characterizes non-forking only over models; elsewhere it over-approximates.
Verdict<field::DisjointWitness> dcfp_indep_ld(const std::vector<RatFunc>& a, const std::vector<RatFunc>& b,
                                              const std::vector<RatFunc>& c, const JetDiffField& k, int bound,
                                              int iterations = 4);

// Independence relation on a finite pool of elements for the axiom harness.
class PoolRelation : public Relation {
public:
    enum class Kind { dcfp, scf };

    PoolRelation(Kind kind, std::shared_ptr<const JetDiffField> field, std::vector<RatFunc> pool, int bound);
    PoolRelation(FieldSpec ambient, std::vector<RatFunc> pool, int bound);

    int universe_size() const override { return static_cast<int>(pool_.size()); }
    Status status(PointSet a, PointSet b, PointSet c) const override;
    std::string explain_failure(PointSet a, PointSet b, PointSet c) const override;
    int search_bound() const override { return bound_; }
    std::string point_name(int i) const override;
    std::string describe() const override;

private:
    std::vector<RatFunc> pick(PointSet s) const;

    Kind kind_;
    std::shared_ptr<const JetDiffField> field_;
    FieldSpec ambient_;
    std::vector<RatFunc> pool_;
    int bound_;
    mutable std::mutex mu_;
    mutable std::map<std::tuple<std::uint64_t, std::uint64_t, std::uint64_t>, Status> cache_;
};

struct PoolFamily {
    std::string name;
    std::vector<std::shared_ptr<const PoolRelation>> instances;
};

InstanceFamily as_family(const PoolFamily& f);

AxiomReport bm_search(const PoolFamily& family, const Limits& limits = {});

// Degree-1 pools over one jet chain x of order 2 in characteristic 2.
PoolFamily linear_chain_family(int bound = 2);
// Pools mixing a jet chain with a constant chain carrying a square root.
PoolFamily fractional_constant_family(int bound = 2);

}  // namespace indep::theories
