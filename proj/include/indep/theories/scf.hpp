#pragma once

#include "indep/field/disjoint.hpp"

namespace indep::theories {

using field::FieldSpec;
using field::RatFunc;

struct ClosureResult {
    FieldSpec field;
    Status status = Status::inconclusive;  // holds when the closure is certified
    int iterations = 0;
    std::string note;
};

// Smallest subfield containing `a` that is separable in the ambient field,
// reached by adjoining p-th-power coordinates of p-dependent basis elements.
ClosureResult scf_dcl_lambda(const std::vector<RatFunc>& a, const FieldSpec& ambient, int iterations, int bound);

struct ScfWitness {
    int clause = 0;  // 1: linear disjointness, 2: separability of the compositum
    std::optional<field::DisjointWitness> disjoint;
    std::optional<field::SeparabilityWitness> separability;
};

Verdict<ScfWitness> scf_indep(const std::vector<RatFunc>& a, const std::vector<RatFunc>& b,
                              const std::vector<RatFunc>& c, const FieldSpec& ambient, int bound,
                              int iterations = 8);

}  // namespace indep::theories
