#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "indep/core/axioms.hpp"
#include "indep/core/relation.hpp"
#include "indep/pseudoplane/forest.hpp"

namespace indep::pseudoplane {

// Bitmask form of a forest with at most 64 vertices: every reduced path is
// stored as a vertex mask, closures of all subsets are tabulated when the
// forest is small enough.
class PathKernel {
public:
    explicit PathKernel(const Forest& f);

    int size() const { return n_; }
    // Vertex mask of the reduced path from u to v; 0 when disconnected.
    std::uint64_t path(int u, int v) const { return paths_[u * n_ + v]; }
    PointSet acl(PointSet x) const;
    Status indep(PointSet a, PointSet b, PointSet c) const;
    // First offending pair (x, y) of a failing triple.
    std::pair<int, int> offending_pair(PointSet a, PointSet b, PointSet c) const;

private:
    PointSet acl_uncached(PointSet x) const;

    int n_ = 0;
    std::vector<std::uint64_t> paths_;
    std::vector<std::uint64_t> acl_table_;  // indexed by subset mask, when n_ <= table_limit
    std::vector<std::uint64_t> bad_;        // bad_[x << n | c]: y reachable from x avoiding c
    static constexpr int table_limit = 12;
};

// Lemma-style path criterion exposed through the generic relation interface.
class PseudoplaneRelation : public Relation {
public:
    explicit PseudoplaneRelation(Forest f);

    int universe_size() const override { return forest_.size(); }
    Status status(PointSet a, PointSet b, PointSet c) const override { return kernel_.indep(a, b, c); }
    std::string explain_failure(PointSet a, PointSet b, PointSet c) const override;
    std::optional<PointSet> closure(PointSet x) const override { return kernel_.acl(x); }
    std::string point_name(int i) const override { return forest_.label(i); }
    std::string describe() const override { return forest_.to_text(); }

    const Forest& forest() const { return forest_; }
    const PathKernel& kernel() const { return kernel_; }

private:
    Forest forest_;
    PathKernel kernel_;
};

// Path criterion evaluated through the set-based reference operations; slow,
// used to cross-check the bitmask kernel.
class ReferencePseudoplaneRelation : public Relation {
public:
    explicit ReferencePseudoplaneRelation(Forest f) : forest_(std::move(f)) {}

    int universe_size() const override { return forest_.size(); }
    Status status(PointSet a, PointSet b, PointSet c) const override;
    std::optional<PointSet> closure(PointSet x) const override;
    std::string point_name(int i) const override { return forest_.label(i); }

private:
    Forest forest_;
};

VertexSet to_vertex_set(PointSet s);
PointSet to_point_set(const VertexSet& s);

// Labeled forest on vertices a, b, c, ... whose edge set is the given bitmask
// over the lexicographically ordered vertex pairs.
Forest forest_from_code(int n, std::uint64_t edge_code);

// Every labeled forest on at most max_vertices vertices, by vertex count and
// then by edge code. Entries are (vertex count, edge code).
std::vector<std::pair<int, std::uint64_t>> labeled_forest_codes(int max_vertices);

InstanceFamily forest_family(int max_vertices, bool with_automorphisms, bool reference_kernel = false);

}  // namespace indep::pseudoplane
