#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "indep/core/relation.hpp"

namespace indep::pseudoplane {

using VertexSet = std::set<int>;

class ForestError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Finite simple acyclic graph with labeled vertices; a finite fragment of a
// free pseudoplane.
class Forest {
public:
    Forest() = default;

    // Text form: `vertices: a b x; edges: a-x, x-b;` (whitespace-insensitive).
    static Forest parse(std::string_view text);

    int add_vertex(std::string label);
    // Rejects loops, duplicate edges and edges closing a cycle.
    void add_edge(int u, int v);
    void add_edge(std::string_view u, std::string_view v);

    int size() const { return static_cast<int>(labels_.size()); }
    const std::string& label(int v) const { return labels_.at(v); }
    std::optional<int> find(std::string_view label) const;
    int index(std::string_view label) const;  // throws DomainError
    VertexSet indices(const std::vector<std::string>& labels) const;

    const std::vector<int>& neighbors(int v) const { return adj_.at(v); }
    int degree(int v) const { return static_cast<int>(adj_.at(v).size()); }
    bool adjacent(int u, int v) const;
    std::vector<std::pair<int, int>> edges() const;
    std::size_t edge_count() const;

    // Canonical text form, parseable by Forest::parse.
    std::string to_text() const;
    std::string render(const VertexSet& s) const;

    bool operator==(const Forest& o) const { return labels_ == o.labels_ && edges() == o.edges(); }

private:
    int root(int v) const;

    std::vector<std::string> labels_;
    std::vector<std::vector<int>> adj_;
    mutable std::vector<int> component_;  // union-find parents
};

bool valid_label(std::string_view s);

}  // namespace indep::pseudoplane
