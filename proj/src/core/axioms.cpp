#include "indep/core/axioms.hpp"

#include <algorithm>
#include <array>
#include <exception>
#include <unordered_map>

#include <omp.h>

namespace indep {

std::string_view to_string(Axiom a)
{
    switch (a) {
    case Axiom::invariance: return "Invariance";
    case Axiom::symmetry: return "Symmetry";
    case Axiom::monotonicity: return "Monotonicity";
    case Axiom::base_monotonicity: return "BaseMonotonicity";
    case Axiom::transitivity: return "Transitivity";
    case Axiom::finite_character: return "FiniteCharacter";
    case Axiom::basedness: return "Basedness";
    }
    return "?";
}

std::vector<Axiom> all_axioms()
{
    return {Axiom::invariance,   Axiom::symmetry,         Axiom::monotonicity, Axiom::base_monotonicity,
            Axiom::transitivity, Axiom::finite_character, Axiom::basedness};
}

std::optional<Axiom> parse_axiom(std::string_view name)
{
    for (Axiom a : all_axioms())
        if (to_string(a) == name) return a;
    return std::nullopt;
}

PointSet apply(const Permutation& perm, PointSet s)
{
    PointSet out;
    s.for_each([&](int i) { out.insert(perm[i]); });
    return out;
}

namespace {

struct Checker {
    Axiom axiom;
    const Instance& inst;
    std::size_t index;
    const Limits& limits;
    AxiomReport report;

    const Relation& rel() const { return *inst.relation; }

    Status st(PointSet a, PointSet b, PointSet c) const { return normalized_status(rel(), a, b, c); }

    // Re-derives the statuses through evaluate() before a record is kept.
    Status reverify(PointSet a, PointSet b, PointSet c) const { return evaluate(rel(), {a, b, c}).status; }

    void tally(Status premise, Status conclusion, bool violated)
    {
        ++report.instances_checked;
        if (premise == Status::inconclusive || conclusion == Status::inconclusive) ++report.inconclusive;
        (void)violated;
    }

    void record(std::string sets, std::string detail)
    {
        ++report.violations;
        if (report.counterexamples.size() < limits.max_recorded)
            report.counterexamples.push_back({index, inst.label, std::move(sets), std::move(detail)});
    }

    std::string fmt(std::initializer_list<std::pair<const char*, PointSet>> named) const
    {
        std::string out;
        for (const auto& [n, s] : named) {
            if (!out.empty()) out += ' ';
            out += n;
            out += '=';
            out += render_set(rel(), s);
        }
        return out;
    }

    void run()
    {
        report.axiom = axiom;
        const PointSet universe = PointSet::first(rel().universe_size());
        const std::vector<PointSet> small = subsets_by_size(universe, limits.max_set_size);

        switch (axiom) {
        case Axiom::symmetry:
            for (PointSet a : small)
                for (PointSet b : small)
                    for (PointSet c : small) {
                        const Status s1 = st(a, b, c);
                        if (s1 != Status::holds) {
                            tally(s1, Status::holds, false);
                            continue;
                        }
                        const Status s2 = st(b, a, c);
                        tally(s1, s2, s2 == Status::fails);
                        if (s2 == Status::fails && reverify(a, b, c) == Status::holds &&
                            reverify(b, a, c) == Status::fails)
                            record(fmt({{"A", a}, {"B", b}, {"C", c}}), "A ⫝_C B but not B ⫝_C A");
                    }
            break;
        case Axiom::monotonicity:
        case Axiom::base_monotonicity:
        case Axiom::transitivity:
            for (PointSet c : small)
                for (PointSet b : small) {
                    if (!c.subset_of(b)) continue;
                    for (PointSet rest : all_subsets(universe.minus(b))) {
                        const PointSet d = b | rest;
                        for (PointSet a : small) chain(a, b, c, d);
                    }
                }
            break;
        case Axiom::finite_character: {
            // parts(a, b) = conjunction of st(x, y) over x ⊆ a, y ⊆ b, filled in by
            // removing one point at a time; `small` lists sets by size.
            const std::size_t m = small.size();
            std::unordered_map<std::uint64_t, std::size_t> pos;
            for (std::size_t i = 0; i < m; ++i) pos.emplace(small[i].bits(), i);
            std::vector<std::vector<std::size_t>> drops(m);
            for (std::size_t i = 0; i < m; ++i)
                small[i].for_each([&](int p) { drops[i].push_back(pos.at(small[i].bits() & ~(std::uint64_t{1} << p))); });
            std::vector<Status> whole(m * m), parts(m * m);
            for (PointSet c : small) {
                for (std::size_t i = 0; i < m; ++i)
                    for (std::size_t j = 0; j < m; ++j) {
                        const Status w = st(small[i], small[j], c);
                        Status p = w;
                        for (std::size_t i2 : drops[i]) p = conjoin(p, parts[i2 * m + j]);
                        for (std::size_t j2 : drops[j]) p = conjoin(p, parts[i * m + j2]);
                        whole[i * m + j] = w;
                        parts[i * m + j] = p;
                    }
                for (std::size_t i = 0; i < m; ++i)
                    for (std::size_t j = 0; j < m; ++j) {
                        const Status w = whole[i * m + j], p = parts[i * m + j];
                        tally(w, p, w != p);
                        if (w == Status::inconclusive || p == Status::inconclusive || w == p) continue;
                        if (reverify(small[i], small[j], c) == w)
                            record(fmt({{"A", small[i]}, {"B", small[j]}, {"C", c}}),
                                   std::string("whole ") + std::string(to_string(w)) + ", tuples " +
                                       std::string(to_string(p)));
                    }
            }
            break;
        }
        case Axiom::basedness:
            for (PointSet a : small)
                for (PointSet b : small) {
                    const auto cl = rel().closure(b);
                    if (!cl) throw ConfigurationError("Basedness needs a closure operator");
                    const Status s = st(a | b, *cl, b);
                    tally(Status::holds, s, s == Status::fails);
                    if (s == Status::fails && reverify(a | b, *cl, b) == Status::fails)
                        record(fmt({{"A", a}, {"B", b}}), "A∪B not independent from cl(B) over B");
                }
            break;
        case Axiom::invariance:
            for (const Permutation& sigma : inst.automorphisms)
                for (PointSet a : small)
                    for (PointSet b : small)
                        for (PointSet c : small) {
                            const Status s1 = st(a, b, c);
                            const Status s2 = st(apply(sigma, a), apply(sigma, b), apply(sigma, c));
                            tally(s1, s2, s1 != s2);
                            if (s1 == Status::inconclusive || s2 == Status::inconclusive || s1 == s2) continue;
                            if (reverify(a, b, c) == s1 &&
                                reverify(apply(sigma, a), apply(sigma, b), apply(sigma, c)) == s2) {
                                std::string perm;
                                for (std::size_t i = 0; i < sigma.size(); ++i)
                                    perm += (i ? " " : "") + rel().point_name(static_cast<int>(i)) + "->" +
                                            rel().point_name(sigma[i]);
                                record(fmt({{"A", a}, {"B", b}, {"C", c}}), "verdict changes under " + perm);
                            }
                        }
            break;
        }
    }

    // C ⊆ B ⊆ D quantifier block shared by the three chain axioms.
    void chain(PointSet a, PointSet b, PointSet c, PointSet d)
    {
        switch (axiom) {
        case Axiom::monotonicity: {
            const Status pre = st(a, d, c);
            if (pre != Status::holds) return tally(pre, Status::holds, false);
            const Status post = st(a, b, c);
            tally(pre, post, post == Status::fails);
            if (post == Status::fails && reverify(a, d, c) == Status::holds && reverify(a, b, c) == Status::fails)
                record(fmt({{"A", a}, {"B", b}, {"C", c}, {"D", d}}), "A ⫝_C D but not A ⫝_C B");
            return;
        }
        case Axiom::base_monotonicity: {
            const Status pre = st(a, d, c);
            if (pre != Status::holds) return tally(pre, Status::holds, false);
            const Status post = st(a | b, d, b);
            tally(pre, post, post == Status::fails);
            if (post == Status::fails && reverify(a, d, c) == Status::holds &&
                reverify(a | b, d, b) == Status::fails)
                record(fmt({{"A", a}, {"B", b}, {"C", c}, {"D", d}}), "A ⫝_C D but not A∪B ⫝_B D");
            return;
        }
        case Axiom::transitivity: {
            const Status p1 = st(a, b, c);
            if (p1 != Status::holds) return tally(p1, Status::holds, false);
            const Status p2 = st(a | b, d, b);
            if (p2 != Status::holds) return tally(p2, Status::holds, false);
            const Status post = st(a, d, c);
            tally(Status::holds, post, post == Status::fails);
            if (post == Status::fails && reverify(a, b, c) == Status::holds &&
                reverify(a | b, d, b) == Status::holds && reverify(a, d, c) == Status::fails)
                record(fmt({{"A", a}, {"B", b}, {"C", c}, {"D", d}}),
                       "A ⫝_C B and A∪B ⫝_B D but not A ⫝_C D");
            return;
        }
        default: return;
        }
    }
};

std::size_t structure_count(const InstanceFamily& family, const Limits& limits)
{
    return limits.max_structures ? std::min(*limits.max_structures, family.size) : family.size;
}

void require_config(Axiom axiom, const InstanceFamily& family)
{
    if (axiom == Axiom::invariance && !family.provides_automorphisms)
        throw ConfigurationError("Invariance requires an automorphism enumerator");
}

void merge(AxiomReport& into, AxiomReport&& part, std::size_t max_recorded)
{
    into.instances_checked += part.instances_checked;
    into.inconclusive += part.inconclusive;
    into.violations += part.violations;
    for (auto& ce : part.counterexamples) {
        if (into.counterexamples.size() >= max_recorded) break;
        into.counterexamples.push_back(std::move(ce));
    }
}

}  // namespace

AxiomReport check_instance(Axiom axiom, const Instance& inst, std::size_t index, const Limits& limits)
{
    Checker ck{axiom, inst, index, limits, {}};
    ck.run();
    return std::move(ck.report);
}

AxiomReport verify_axiom_serial(Axiom axiom, const InstanceFamily& family, const Limits& limits)
{
    require_config(axiom, family);
    AxiomReport report;
    report.axiom = axiom;
    const std::size_t n = structure_count(family, limits);
    for (std::size_t i = 0; i < n; ++i) merge(report, check_instance(axiom, family.make(i), i, limits), limits.max_recorded);
    return report;
}

AxiomReport verify_axiom(Axiom axiom, const InstanceFamily& family, const Limits& limits)
{
    require_config(axiom, family);
    const std::size_t n = structure_count(family, limits);
    std::vector<AxiomReport> parts(n);
    std::exception_ptr error;

#pragma omp parallel for schedule(dynamic, 4)
    for (std::size_t i = 0; i < n; ++i) {
        try {
            parts[i] = check_instance(axiom, family.make(i), i, limits);
        } catch (...) {
#pragma omp critical
            if (!error) error = std::current_exception();
        }
    }
    if (error) std::rethrow_exception(error);

    AxiomReport report;
    report.axiom = axiom;
    for (auto& p : parts) merge(report, std::move(p), limits.max_recorded);
    return report;
}

}  // namespace indep
