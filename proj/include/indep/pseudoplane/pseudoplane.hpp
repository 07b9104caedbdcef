#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "indep/core/verdict.hpp"
#include "indep/pseudoplane/forest.hpp"

namespace indep::pseudoplane {

using ReducedPath = std::vector<int>;

// Unique reduced path from u to v, or nullopt when they lie in different
// components. reduced_path(f, u, u) == {u}.
std::optional<ReducedPath> reduced_path(const Forest& f, int u, int v);

bool is_reduced_path(const Forest& f, const ReducedPath& p);

// Path closure: X together with every vertex on a reduced path between two
// members of X. acl(∅) = ∅.
VertexSet acl(const Forest& f, const VertexSet& x);

bool is_nice(const Forest& f, const VertexSet& x);

struct PathWitness {
    int x = -1;
    int y = -1;
    ReducedPath path;
};

// A ⫝_C B: every connected pair x ∈ acl(C∪A), y ∈ acl(C∪B) has a point of
// acl(C) on its path. A shared closure point outside acl(C) is a length-0
// path and fails.
Verdict<PathWitness> indep_ps(const Forest& f, const VertexSet& a, const VertexSet& b, const VertexSet& c);

struct Isomorphism {
    std::map<int, int> map;  // vertex of acl(B∪A) -> vertex of acl(B∪A')
    std::string reason;      // set when no isomorphism exists
};

// tp(A/B) = tp(A'/B) for enumerated tuples A, A': an isomorphism of
// acl(B∪A) onto acl(B∪A') fixing acl(B) pointwise with A[i] ↦ A'[i].
// Throws DomainError when |A| != |A'|.
Verdict<Isomorphism> same_type_over(const Forest& f, const std::vector<int>& a, const std::vector<int>& a2,
                                    const VertexSet& b);

// Pads each vertex to at least min_degree neighbours with fresh leaves
// labeled "<parent>#k", for `depth` generations of added vertices.
Forest saturate(const Forest& f, int min_degree, int depth, std::size_t max_vertices = 100000);

// Graph automorphisms of f (including the identity), as permutations.
std::vector<std::vector<int>> automorphisms(const Forest& f);

}  // namespace indep::pseudoplane
