#pragma once

#include "indep/field/disjoint.hpp"
#include "indep/theories/jet.hpp"

namespace indep::theories {

struct DependenceWitness {
    std::vector<RatFunc> tuple;                          // transcendence bases of both closures
    std::optional<field::Annihilator> annihilator;       // relation among the tuple over k, if found
};

// Independence of δ-closures over a relatively algebraically closed base,
// decided by additivity of transcendence degrees.
Verdict<DependenceWitness> dcf0_indep(const DiffFieldSpec& l, const DiffFieldSpec& m, const DiffFieldSpec& k, int order,
                                      int bound);

// Holds when the table extends to a derivation of the generated field,
// checked on the algebraic relations among the generators found at the bound.
Status table_consistent(const DerivationTable& t, const FieldSpec& ambient, int bound);

struct Amalgamation {
    Status status = Status::inconclusive;
    std::optional<DerivationTable> table;
    std::optional<field::DisjointWitness> refusal;
    std::string note;
};

Amalgamation amalgamate_derivations(const DiffFieldSpec& l, const DerivationTable& dl, const DiffFieldSpec& m,
                                    const DerivationTable& dm, const DiffFieldSpec& k, int bound);

// Does `t` agree with `whole` on every generator of `t`?
bool restricts_to(const DerivationTable& whole, const DerivationTable& t);

}  // namespace indep::theories
