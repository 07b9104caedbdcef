#include "indep/pseudoplane/pseudoplane.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace indep::pseudoplane {

namespace {

void check_vertex(const Forest& f, int v)
{
    if (v < 0 || v >= f.size()) throw DomainError("unknown vertex index " + std::to_string(v));
}

void check_set(const Forest& f, const VertexSet& s)
{
    for (int v : s) check_vertex(f, v);
}

}  // namespace

std::optional<ReducedPath> reduced_path(const Forest& f, int u, int v)
{
    check_vertex(f, u);
    check_vertex(f, v);
    std::vector<int> parent(f.size(), -1);
    parent[u] = u;
    std::deque<int> queue{u};
    while (!queue.empty() && parent[v] < 0) {
        const int w = queue.front();
        queue.pop_front();
        for (int n : f.neighbors(w))
            if (parent[n] < 0) {
                parent[n] = w;
                queue.push_back(n);
            }
    }
    if (parent[v] < 0) return std::nullopt;
    ReducedPath path{v};
    while (path.back() != u) path.push_back(parent[path.back()]);
    std::reverse(path.begin(), path.end());
    return path;
}

bool is_reduced_path(const Forest& f, const ReducedPath& p)
{
    if (p.empty()) return false;
    for (std::size_t i = 0; i + 1 < p.size(); ++i)
        if (!f.adjacent(p[i], p[i + 1])) return false;
    for (std::size_t i = 0; i + 2 < p.size(); ++i)
        if (p[i] == p[i + 2]) return false;
    return true;
}

VertexSet acl(const Forest& f, const VertexSet& x)
{
    check_set(f, x);
    VertexSet out = x;
    for (auto i = x.begin(); i != x.end(); ++i)
        for (auto j = std::next(i); j != x.end(); ++j)
            if (auto p = reduced_path(f, *i, *j)) out.insert(p->begin(), p->end());
    return out;
}

bool is_nice(const Forest& f, const VertexSet& x) { return acl(f, x) == x; }

Verdict<PathWitness> indep_ps(const Forest& f, const VertexSet& a, const VertexSet& b, const VertexSet& c)
{
    VertexSet ca = a, cb = b;
    ca.insert(c.begin(), c.end());
    cb.insert(c.begin(), c.end());
    const VertexSet acl_a = acl(f, ca), acl_b = acl(f, cb), acl_c = acl(f, c);
    for (int x : acl_a)
        for (int y : acl_b) {
            auto p = reduced_path(f, x, y);
            if (!p) continue;
            const bool meets = std::any_of(p->begin(), p->end(), [&](int v) { return acl_c.count(v) > 0; });
            if (!meets) return Verdict<PathWitness>::fails({x, y, *p});
        }
    return Verdict<PathWitness>::holds();
}

namespace {

struct IsoSearch {
    const Forest& f;
    std::vector<int> domain;    // unmapped vertices of the source closure
    VertexSet source, target;
    std::map<int, int> fwd, bwd;

    bool consistent(int u, int v) const
    {
        // Adjacency to already-mapped vertices must be preserved both ways.
        for (auto [s, t] : fwd)
            if (f.adjacent(u, s) != f.adjacent(v, t)) return false;
        return true;
    }

    bool extend(std::size_t k)
    {
        if (k == domain.size()) return true;
        const int u = domain[k];
        for (int v : target) {
            if (bwd.count(v) || !consistent(u, v)) continue;
            fwd[u] = v;
            bwd[v] = u;
            if (extend(k + 1)) return true;
            fwd.erase(u);
            bwd.erase(v);
        }
        return false;
    }
};

}  // namespace

Verdict<Isomorphism> same_type_over(const Forest& f, const std::vector<int>& a, const std::vector<int>& a2,
                                    const VertexSet& b)
{
    if (a.size() != a2.size()) throw DomainError("tuples of different arity");
    for (int v : a) check_vertex(f, v);
    for (int v : a2) check_vertex(f, v);
    check_set(f, b);

    auto fail = [](std::string why) {
        Isomorphism iso;
        iso.reason = std::move(why);
        return Verdict<Isomorphism>::fails(std::move(iso));
    };

    VertexSet src = b, dst = b;
    src.insert(a.begin(), a.end());
    dst.insert(a2.begin(), a2.end());
    const VertexSet base = acl(f, b);
    IsoSearch search{f, {}, acl(f, src), acl(f, dst), {}, {}};
    if (search.source.size() != search.target.size())
        return fail("closures have sizes " + std::to_string(search.source.size()) + " and " +
                    std::to_string(search.target.size()));

    auto fix = [&](int u, int v) {
        auto it = search.fwd.find(u);
        if (it != search.fwd.end()) return it->second == v;
        auto jt = search.bwd.find(v);
        if (jt != search.bwd.end()) return false;
        if (!search.consistent(u, v)) return false;
        search.fwd[u] = v;
        search.bwd[v] = u;
        return true;
    };
    for (int v : base)
        if (!fix(v, v)) return fail("base vertex " + f.label(v) + " cannot be fixed");
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!fix(a[i], a2[i])) return fail("cannot send " + f.label(a[i]) + " to " + f.label(a2[i]));

    for (int v : search.source)
        if (!search.fwd.count(v)) search.domain.push_back(v);
    if (!search.extend(0)) return fail("no isomorphism of closures over the base");

    auto v = Verdict<Isomorphism>::holds();
    v.witness = Isomorphism{search.fwd, {}};
    return v;
}

Forest saturate(const Forest& f, int min_degree, int depth, std::size_t max_vertices)
{
    if (min_degree < 1) throw DomainError("min_degree must be at least 1");
    Forest out = f;
    std::vector<int> layer(f.size());
    std::iota(layer.begin(), layer.end(), 0);
    for (int level = 0; level < depth && !layer.empty(); ++level) {
        std::vector<int> next;
        for (int v : layer) {
            int k = 1;
            while (out.degree(v) < min_degree) {
                std::string label;
                do label = out.label(v) + "#" + std::to_string(k++);
                while (out.find(label));
                if (static_cast<std::size_t>(out.size()) >= max_vertices)
                    throw std::length_error("saturate exceeded " + std::to_string(max_vertices) + " vertices");
                const int w = out.add_vertex(label);
                out.add_edge(v, w);
                next.push_back(w);
            }
        }
        layer = std::move(next);
    }
    return out;
}

std::vector<std::vector<int>> automorphisms(const Forest& f)
{
    const int n = f.size();
    std::vector<std::vector<int>> out;
    std::vector<int> perm(n);
    // Backtracking over images in index order, pruned by degree and adjacency.
    std::vector<bool> used(n, false);
    auto rec = [&](auto&& self, int k) -> void {
        if (k == n) {
            out.push_back(perm);
            return;
        }
        for (int v = 0; v < n; ++v) {
            if (used[v] || f.degree(v) != f.degree(k)) continue;
            bool ok = true;
            for (int j = 0; j < k && ok; ++j) ok = f.adjacent(k, j) == f.adjacent(v, perm[j]);
            if (!ok) continue;
            used[v] = true;
            perm[k] = v;
            self(self, k + 1);
            used[v] = false;
        }
    };
    rec(rec, 0);
    return out;
}

}  // namespace indep::pseudoplane
