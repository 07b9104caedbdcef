#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "indep/core/relation.hpp"

namespace indep {

enum class Axiom {
    invariance,
    symmetry,
    monotonicity,
    base_monotonicity,
    transitivity,
    finite_character,
    basedness,
};

std::string_view to_string(Axiom a);
std::optional<Axiom> parse_axiom(std::string_view name);
std::vector<Axiom> all_axioms();

// Point permutation: perm[i] is the image of point i.
using Permutation = std::vector<int>;

PointSet apply(const Permutation& perm, PointSet s);

struct Instance {
    std::shared_ptr<const Relation> relation;
    std::vector<Permutation> automorphisms;
    std::string label;
};

struct InstanceFamily {
    std::string name;
    std::size_t size = 0;
    std::function<Instance(std::size_t)> make;
    bool provides_automorphisms = false;
};

struct Limits {
    int max_set_size = 3;                    // bound on |A|, |B|, |C|; D is unbounded
    std::optional<std::size_t> max_structures;
    std::size_t max_recorded = 32;           // counterexample records kept per report
};

struct Counterexample {
    std::size_t structure_index = 0;
    std::string structure;
    std::string sets;      // e.g. "A={a} B={b} C={} D={a,b}"
    std::string detail;
};

struct AxiomReport {
    Axiom axiom = Axiom::symmetry;
    std::size_t instances_checked = 0;
    std::size_t inconclusive = 0;
    std::size_t violations = 0;
    std::vector<Counterexample> counterexamples;

    bool held() const { return violations == 0; }
};

// Exhaustively instantiates the axiom's quantifiers over the family. The
// structures are processed in parallel; the report lists counterexamples in
// enumeration order regardless of scheduling.
AxiomReport verify_axiom(Axiom axiom, const InstanceFamily& family, const Limits& limits = {});

// Single-threaded reference used to cross-check verify_axiom.
AxiomReport verify_axiom_serial(Axiom axiom, const InstanceFamily& family, const Limits& limits = {});

// Checks one structure; exposed for callers that build their own loops.
AxiomReport check_instance(Axiom axiom, const Instance& inst, std::size_t index, const Limits& limits);

}  // namespace indep
