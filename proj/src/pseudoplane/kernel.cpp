#include "indep/pseudoplane/kernel.hpp"

#include <bit>
#include <numeric>

#include "indep/pseudoplane/pseudoplane.hpp"

namespace indep::pseudoplane {

PathKernel::PathKernel(const Forest& f) : n_(f.size())
{
    if (n_ > 64) throw DomainError("PathKernel supports at most 64 vertices");
    paths_.assign(static_cast<std::size_t>(n_) * n_, 0);
    for (int u = 0; u < n_; ++u) {
        // DFS from u, carrying the mask of the tree path.
        std::vector<int> stack{u};
        paths_[u * n_ + u] = std::uint64_t{1} << u;
        while (!stack.empty()) {
            const int w = stack.back();
            stack.pop_back();
            for (int x : f.neighbors(w))
                if (paths_[u * n_ + x] == 0) {
                    paths_[u * n_ + x] = paths_[u * n_ + w] | (std::uint64_t{1} << x);
                    stack.push_back(x);
                }
        }
    }
    if (n_ <= table_limit) {
        const std::size_t subsets = std::size_t{1} << n_;
        acl_table_.resize(subsets);
        for (std::size_t m = 0; m < subsets; ++m) acl_table_[m] = acl_uncached(PointSet(m)).bits();
        bad_.resize(static_cast<std::size_t>(n_) << n_);
        for (int x = 0; x < n_; ++x)
            for (std::size_t c = 0; c < subsets; ++c) {
                std::uint64_t bad = 0;
                for (int y = 0; y < n_; ++y) {
                    const std::uint64_t p = paths_[x * n_ + y];
                    if (p && (p & c) == 0) bad |= std::uint64_t{1} << y;
                }
                bad_[(static_cast<std::size_t>(x) << n_) | c] = bad;
            }
    }
}

PointSet PathKernel::acl_uncached(PointSet x) const
{
    std::uint64_t out = x.bits();
    const std::vector<int> pts = x.points();
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j) out |= paths_[pts[i] * n_ + pts[j]];
    return PointSet(out);
}

PointSet PathKernel::acl(PointSet x) const
{
    if (!acl_table_.empty()) return PointSet(acl_table_[x.bits()]);
    return acl_uncached(x);
}

Status PathKernel::indep(PointSet a, PointSet b, PointSet c) const
{
    const PointSet ca = acl(a | c), cb = acl(b | c), cc = acl(c);
    if (!bad_.empty()) {
        for (std::uint64_t m = ca.bits(); m; m &= m - 1) {
            const int x = std::countr_zero(m);
            if (bad_[(static_cast<std::size_t>(x) << n_) | cc.bits()] & cb.bits()) return Status::fails;
        }
        return Status::holds;
    }
    for (std::uint64_t m = ca.bits(); m; m &= m - 1) {
        const int x = std::countr_zero(m);
        for (std::uint64_t k = cb.bits(); k; k &= k - 1) {
            const std::uint64_t p = paths_[x * n_ + std::countr_zero(k)];
            if (p && (p & cc.bits()) == 0) return Status::fails;
        }
    }
    return Status::holds;
}

std::pair<int, int> PathKernel::offending_pair(PointSet a, PointSet b, PointSet c) const
{
    const PointSet ca = acl(a | c), cb = acl(b | c), cc = acl(c);
    for (int x : ca.points())
        for (int y : cb.points()) {
            const std::uint64_t p = paths_[x * n_ + y];
            if (p && (p & cc.bits()) == 0) return {x, y};
        }
    return {-1, -1};
}

PseudoplaneRelation::PseudoplaneRelation(Forest f) : forest_(std::move(f)), kernel_(forest_) {}

std::string PseudoplaneRelation::explain_failure(PointSet a, PointSet b, PointSet c) const
{
    auto [x, y] = kernel_.offending_pair(a, b, c);
    if (x < 0) return {};
    return "path " + forest_.label(x) + ".." + forest_.label(y) + " misses acl(C)";
}

VertexSet to_vertex_set(PointSet s)
{
    VertexSet out;
    s.for_each([&](int i) { out.insert(i); });
    return out;
}

PointSet to_point_set(const VertexSet& s)
{
    PointSet out;
    for (int v : s) out.insert(v);
    return out;
}

Status ReferencePseudoplaneRelation::status(PointSet a, PointSet b, PointSet c) const
{
    return indep_ps(forest_, to_vertex_set(a), to_vertex_set(b), to_vertex_set(c)).status;
}

std::optional<PointSet> ReferencePseudoplaneRelation::closure(PointSet x) const
{
    return to_point_set(pseudoplane::acl(forest_, to_vertex_set(x)));
}

Forest forest_from_code(int n, std::uint64_t edge_code)
{
    Forest f;
    for (int i = 0; i < n; ++i) f.add_vertex(std::string(1, static_cast<char>('a' + i)));
    int bit = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++bit)
            if ((edge_code >> bit) & 1u) f.add_edge(u, v);
    return f;
}

std::vector<std::pair<int, std::uint64_t>> labeled_forest_codes(int max_vertices)
{
    std::vector<std::pair<int, std::uint64_t>> out;
    for (int n = 0; n <= max_vertices; ++n) {
        std::vector<std::pair<int, int>> pairs;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
        const std::uint64_t total = std::uint64_t{1} << pairs.size();
        std::vector<int> parent(n);
        for (std::uint64_t code = 0; code < total; ++code) {
            if (static_cast<std::size_t>(std::popcount(code)) >= static_cast<std::size_t>(std::max(n, 1))) continue;
            std::iota(parent.begin(), parent.end(), 0);
            auto root = [&](int x) {
                while (parent[x] != x) x = parent[x] = parent[parent[x]];
                return x;
            };
            bool acyclic = true;
            for (std::size_t i = 0; i < pairs.size() && acyclic; ++i) {
                if (!((code >> i) & 1u)) continue;
                const int ru = root(pairs[i].first), rv = root(pairs[i].second);
                if (ru == rv) acyclic = false;
                else parent[ru] = rv;
            }
            if (acyclic) out.emplace_back(n, code);
        }
    }
    return out;
}

InstanceFamily forest_family(int max_vertices, bool with_automorphisms, bool reference_kernel)
{
    auto codes = std::make_shared<std::vector<std::pair<int, std::uint64_t>>>(labeled_forest_codes(max_vertices));
    InstanceFamily fam;
    fam.name = "labeled forests on <= " + std::to_string(max_vertices) + " vertices";
    fam.size = codes->size();
    fam.provides_automorphisms = with_automorphisms;
    fam.make = [codes, with_automorphisms, reference_kernel](std::size_t i) {
        auto [n, code] = (*codes)[i];
        Forest f = forest_from_code(n, code);
        Instance inst;
        inst.label = f.to_text();
        if (with_automorphisms)
            for (auto& p : automorphisms(f)) {
                bool identity = true;
                for (std::size_t k = 0; k < p.size(); ++k) identity = identity && p[k] == static_cast<int>(k);
                if (!identity) inst.automorphisms.push_back(std::move(p));
            }
        if (reference_kernel) inst.relation = std::make_shared<ReferencePseudoplaneRelation>(std::move(f));
        else inst.relation = std::make_shared<PseudoplaneRelation>(std::move(f));
        return inst;
    };
    return fam;
}

}  // namespace indep::pseudoplane
