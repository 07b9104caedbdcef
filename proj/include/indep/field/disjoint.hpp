#pragma once

#include <optional>
#include <vector>

#include "indep/field/pchar.hpp"

namespace indep::field {

// Elements of ⟨L⟩ that are independent over ⟨k⟩ but dependent over ⟨M⟩.
struct DisjointWitness {
    std::vector<RatFunc> tuple;
    LinearRelation relation;  // coefficients in ⟨M⟩
};

Verdict<DisjointWitness> linearly_disjoint(const FieldSpec& l, const FieldSpec& m, const FieldSpec& k, int bound);

// Monomials in the generators of `f` of total degree ≤ bound, grlex ascending.
std::vector<RatFunc> generator_monomials(const FieldSpec& f, int bound);

struct RegularWitness {
    RatFunc element;
    std::optional<Annihilator> annihilator;  // over k; absent for a separability failure
};

Verdict<RegularWitness> regular_upto(const FieldSpec& k, const FieldSpec& l, int bound);

}  // namespace indep::field
