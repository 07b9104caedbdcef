// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iterator>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "indep/cli/parser.hpp"
#include "indep/cli/runner.hpp"
#include "indep/core/axioms.hpp"
#include "indep/field/algdep.hpp"
#include "indep/field/disjoint.hpp"
#include "indep/field/lindep.hpp"
#include "indep/field/pchar.hpp"
#include "indep/pseudoplane/kernel.hpp"
#include "indep/pseudoplane/pseudoplane.hpp"
#include "indep/theories/dcf0.hpp"
#include "indep/theories/scf.hpp"

using namespace indep;
using field::FieldSpec;
using field::PrimeField;
using field::RatFunc;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string fmt(const char* f, auto... xs)
{
    char buf[512];
    std::snprintf(buf, sizeof buf, f, xs...);
    return buf;
}

std::vector<RatFunc> parse_all(const FieldSpec& k, const std::vector<std::string>& xs)
{
    std::vector<RatFunc> out;
    for (const auto& x : xs) out.push_back(k.parse(x));
    return out;
}

FieldSpec sub(const FieldSpec& amb, const std::vector<std::string>& gens)
{
    return FieldSpec::generated(amb.field, amb.vars, parse_all(amb, gens));
}

// Random polynomial text in the given variables: up to `terms` terms of total degree ≤ deg.
std::string random_poly(std::mt19937_64& rng, const std::vector<std::string>& vars, int deg, int terms, int coef)
{
    std::uniform_int_distribution<int> nterms(1, terms), c(-coef, coef), e(0, deg);
    std::string out;
    const int n = nterms(rng);
    for (int t = 0; t < n; ++t) {
        int cc = c(rng);
        if (cc == 0) cc = 1;
        std::string term = std::to_string(cc);
        int left = e(rng);
        for (const auto& v : vars) {
            if (left == 0) break;
            std::uniform_int_distribution<int> take(0, left);
            const int k = take(rng);
            if (k) term += "*" + v + "^" + std::to_string(k);
            left -= k;
        }
        out += (t ? " + " : "") + term;
    }
    return out;
}

// 1. Pseudoplane axiom suite on labeled forests with at most six vertices.
Outcome pseudoplane_axioms()
{
    const auto t0 = Clock::now();
    const auto fam = pseudoplane::forest_family(6, true);
    std::size_t checked = 0, bad = 0;
    for (Axiom a : all_axioms()) {
        const auto r = verify_axiom(a, fam);
        checked += r.instances_checked;
        bad += r.violations + r.inconclusive;
    }
    const double secs = since(t0);
    return {bad == 0 && secs < 120.0,
            fmt("%zu forests, %zu instances, %zu violations/inconclusive, %.1f s", fam.size, checked, bad, secs)};
}

// 2. Triviality: the relation is decided by singletons of the closures.
Outcome triviality()
{
    std::size_t triples = 0, bad = 0, forests = 0;
    for (auto [n, code] : pseudoplane::labeled_forest_codes(6)) {
        const auto f = pseudoplane::forest_from_code(n, code);
        const pseudoplane::PathKernel kern(f);
        const auto small = subsets_by_size(PointSet::first(n), 3);
        ++forests;
        for (PointSet c : small) {
            // ok[x]: the y with {x} ⫝_C {y}, from the set-based reference.
            std::vector<std::uint64_t> ok(n, 0);
            const auto cv = pseudoplane::to_vertex_set(c);
            for (int x = 0; x < n; ++x)
                for (int y = 0; y < n; ++y)
                    if (pseudoplane::indep_ps(f, {x}, {y}, cv).is_holds()) ok[x] |= std::uint64_t{1} << y;
            for (PointSet a : small) {
                const PointSet ca = kern.acl(a | c);
                for (PointSet b : small) {
                    const PointSet cb = kern.acl(b | c);
                    bool pairs = true;
                    ca.for_each([&](int x) { pairs = pairs && (cb.bits() & ~ok[x]) == 0; });
                    const bool whole = kern.indep(a | c, b | c, c) == Status::holds;
                    ++triples;
                    if (whole != pairs) ++bad;
                }
            }
        }
    }
    return {bad == 0, fmt("%zu forests, %zu triples, %zu disagreements", forests, triples, bad)};
}

// 3. acl is extensive, monotone, idempotent and path-closed.
Outcome acl_laws()
{
    std::size_t forests = 0, sets = 0, bad = 0;
    for (auto [n, code] : pseudoplane::labeled_forest_codes(7)) {
        const auto f = pseudoplane::forest_from_code(n, code);
        const pseudoplane::PathKernel kern(f);
        ++forests;
        const std::uint64_t full = (std::uint64_t{1} << n) - 1;
        std::vector<std::uint64_t> path(n * n, 0);
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                if (const auto p = pseudoplane::reduced_path(f, u, v))
                    for (int w : *p) path[u * n + v] |= std::uint64_t{1} << w;
        std::vector<std::uint64_t> cl(full + 1);
        for (std::uint64_t m = 0; m <= full; ++m) {
            const auto x = pseudoplane::to_vertex_set(PointSet(m));
            const auto c = pseudoplane::acl(f, x);
            cl[m] = pseudoplane::to_point_set(c).bits();
            ++sets;
            bool ok = (m & ~cl[m]) == 0;                       // extensive
            ok = ok && pseudoplane::acl(f, c) == c;            // idempotent
            ok = ok && kern.acl(PointSet(m)).bits() == cl[m];  // kernel agrees
            for (int u : c)  // nice: paths between members stay inside
                for (int v : c) ok = ok && (path[u * n + v] & ~cl[m]) == 0;
            if (!ok) ++bad;
        }
        for (std::uint64_t y = 0; y <= full; ++y)  // monotone over X ⊆ Y
            for (std::uint64_t x = y;; x = (x - 1) & y) {
                if ((cl[x] & ~cl[y]) != 0) ++bad;
                if (x == 0) break;
            }
    }
    return {bad == 0, fmt("%zu forests, %zu subsets, %zu violations", forests, sets, bad)};
}

// 4. Jacobian rank against the annihilator search in characteristic 0.
Outcome jacobian_vs_annihilator()
{
    const auto t0 = Clock::now();
    std::mt19937_64 rng(4);
    const std::vector<std::string> all{"t1", "t2", "t3"};
    std::size_t conclusive = 0, bad = 0, total = 0, dependent = 0, independent = 0;
    for (int i = 0; i < 90; ++i) {
        const int n = 1 + i % 3;
        const std::vector<std::string> vars(all.begin(), all.begin() + n);
        const auto amb = FieldSpec::ambient(PrimeField(0), vars);
        std::vector<std::string> tuple;
        if (i < 45) {
            const int s = 1 + (i / 3) % n;
            for (int j = 0; j < s; ++j) tuple.push_back(random_poly(rng, vars, 3, 3, 3));
        } else {
            const std::string f = random_poly(rng, vars, 1, 2, 2), g = random_poly(rng, vars, 1, 2, 2);
            switch (i % 5) {
            case 0: tuple = {f, "(" + f + ")^2"}; break;
            case 1: tuple = {f, g, "(" + f + ")*(" + g + ")"}; break;
            case 2: tuple = {f, g, "(" + f + ") + 2*(" + g + ")"}; break;
            case 3: tuple = {f, "(" + f + ")^3 - (" + f + ")"}; break;
            default: tuple = {f, g, "(" + f + ")^2 - (" + g + ")"}; break;
            }
        }
        const auto elems = parse_all(amb, tuple);
        ++total;
        const auto jac = field::alg_indep_jacobian(elems);
        const auto ann = field::annihilator_search(elems, FieldSpec::prime(amb.field, vars), 3);
        if (ann.is_fails() && !ann.witness->evaluate(elems).is_zero()) ++bad;
        if (jac.is_holds() && ann.is_fails()) ++bad;
        // The search side is conclusive on a found annihilator, or on no annihilator
        // up to degree 3 plus independent leading exponents (distinct monomials in
        // the elements then have distinct leading terms).
        Status search = Status::inconclusive;
        if (ann.is_fails()) {
            search = Status::fails;
        } else if (ann.is_holds()) {
            field::Matrix lead;
            for (const auto& e : elems) {
                field::Vec row;
                for (int v = 0; v < n; ++v)
                    row.push_back(RatFunc::constant(amb.field, n, e.num().leading().exp[v] - e.den().leading().exp[v]));
                lead.push_back(std::move(row));
            }
            if (!elems.empty() && field::rank(lead) == static_cast<int>(elems.size())) search = Status::holds;
        }
        if (search == Status::inconclusive) continue;
        ++conclusive;
        (search == Status::fails ? dependent : independent)++;
        if (jac.status != search) ++bad;
    }
    const double secs = since(t0);
    return {bad == 0 && conclusive >= 50 && dependent > 0 && independent > 0 && secs < 60.0,
            fmt("%zu tuples, %zu conclusive (%zu dependent, %zu independent), %zu disagreements, %.1f s", total,
                conclusive, dependent, independent, bad, secs)};
}

// 5. Linear disjointness implies additivity of transcendence degree.
Outcome disjointness_additivity()
{
    struct Case {
        unsigned p;
        std::vector<std::string> k, l, m;
    };
    std::vector<Case> corpus;
    const std::vector<std::vector<std::string>> bases{{}, {"t1"}, {"t1^2"}, {"t1*t2"}};
    const std::vector<std::vector<std::string>> extra{{"t2"},           {"t3"},      {"t2^2"},  {"t1+t2"}, {"t2*t3"},
                                                      {"t2", "t3"},     {"t1^2+t3"}, {"t1", "t2"}, {"t3^2"}};
    for (unsigned p : {0u, 2u, 3u})
        for (const auto& k : bases)
            for (std::size_t i = 0; i < extra.size(); ++i)
                for (std::size_t j = i; j < extra.size(); j += 2) {
                    Case c{p, k, k, k};
                    c.l.insert(c.l.end(), extra[i].begin(), extra[i].end());
                    c.m.insert(c.m.end(), extra[j].begin(), extra[j].end());
                    corpus.push_back(c);
                }
    std::size_t holds = 0, checked = 0, bad = 0, asym = 0;
    for (const auto& c : corpus) {
        const auto amb = FieldSpec::ambient(PrimeField(c.p), {"t1", "t2", "t3"});
        const auto k = sub(amb, c.k), l = sub(amb, c.l), m = sub(amb, c.m);
        const auto v = field::linearly_disjoint(l, m, k, 3);
        const auto w = field::linearly_disjoint(m, l, k, 3);
        if (!v.is_inconclusive() && !w.is_inconclusive() && v.status != w.status) ++asym;
        if (!v.is_holds()) continue;
        ++holds;
        auto both = l.gens;
        both.insert(both.end(), m.gens.begin(), m.gens.end());
        const auto tl = field::transcendence_degree(l.gens, k, 3), tm = field::transcendence_degree(m.gens, k, 3),
                   tlm = field::transcendence_degree(both, k, 3);
        if (tl.status != Status::holds || tm.status != Status::holds || tlm.status != Status::holds) continue;
        ++checked;
        if (tlm.count != tl.count + tm.count) ++bad;
    }
    return {bad == 0 && asym == 0 && checked > 0 && checked == holds,
            fmt("%zu triples, %zu Holds, %zu with conclusive degrees, %zu violations, %zu asymmetric", corpus.size(),
                holds, checked, bad, asym)};
}

// 6. Imperfection degree of rational function fields.
Outcome imperfection()
{
    std::size_t cases = 0, bad = 0;
    for (unsigned p : {2u, 3u, 5u})
        for (int e = 0; e <= 3; ++e) {
            std::vector<std::string> vars;
            for (int i = 1; i <= e; ++i) vars.push_back("t" + std::to_string(i));
            const auto amb = FieldSpec::ambient(PrimeField(p), vars);
            const auto r = field::imperfection_degree(amb);
            ++cases;
            bool ok = r.degree == e;
            int size = 1;
            for (int i = 0; i < e; ++i) size *= static_cast<int>(p);
            ok = ok && r.basis_size == size;
            // The p^e monomials t^j, 0 ≤ j_i < p, are a basis of K over K^p.
            std::vector<RatFunc> monos{amb.one()}, pth;
            for (int i = 0; i < e; ++i) {
                std::vector<RatFunc> next;
                for (const auto& mono : monos)
                    for (unsigned j = 0; j < p; ++j) next.push_back(mono * amb.var(i).pow(static_cast<int>(j)));
                monos = std::move(next);
                pth.push_back(amb.var(i).pow(static_cast<int>(p)));
            }
            const auto kp = FieldSpec::generated(amb.field, vars, pth);
            const auto ld = field::lin_dim(monos, kp, 1);
            ok = ok && ld.status == Status::holds && ld.dimension == size;
            // Adding any further element makes the family dependent over K^p.
            if (e > 0) {
                auto more = monos;
                more.push_back(amb.var(0) + amb.one());
                const auto ld2 = field::lin_dim(more, kp, 1);
                ok = ok && ld2.dimension == size;
            }
            if (!ok) ++bad;
        }
    return {bad == 0, fmt("%zu fields, %zu mismatches", cases, bad)};
}

// 7. Mac Lane: separating transcendence bases with separability certificates.
Outcome mac_lane()
{
    struct Case {
        unsigned p;
        std::vector<std::string> vars, k, l;
    };
    const std::vector<std::string> v2{"t1", "t2"}, v3{"t1", "t2", "t3"};
    const std::vector<Case> corpus{
        {2, v2, {"t1*t2"}, {"t1", "t2"}},
        {2, v2, {}, {"t1"}},
        {2, v2, {"t1"}, {"t1", "t2"}},
        {2, v2, {"t1+t2"}, {"t1", "t2"}},
        {3, v2, {"t1*t2"}, {"t1", "t2"}},
        {3, v3, {"t1"}, {"t1", "t2", "t3"}},
        {2, v2, {"t1"}, {"t1", "t2^2+t2"}},
        {5, v2, {"t1^2"}, {"t1"}},
        {3, v2, {"t1^2+t2"}, {"t1", "t2"}},
        {2, v3, {"t1*t2", "t3"}, {"t1", "t2", "t3"}},
        {2, v2, {}, {"t1*t2"}},
        {3, v2, {}, {"t1", "t2^2"}},
    };
    std::size_t ok_cases = 0, bad = 0;
    std::string first_bad;
    for (const auto& c : corpus) {
        const auto amb = FieldSpec::ambient(PrimeField(c.p), c.vars);
        const auto k = sub(amb, c.k), l = sub(amb, c.l);
        bool ok = false;
        try {
            const auto rep = field::mac_lane_check(k, l, 4);
            ok = rep.status == Status::holds && rep.independence.is_holds();
            // Independently: the p-basis has full transcendence degree over k.
            const auto td = field::transcendence_degree(rep.p_basis, k, 4);
            ok = ok && td.status == Status::holds && td.count == static_cast<int>(rep.p_basis.size());
            // Every generator of L is in the p-basis or certified separable algebraic over k(A).
            for (const auto& g : l.gens) {
                const bool in_basis = std::find(rep.p_basis.begin(), rep.p_basis.end(), g) != rep.p_basis.end();
                bool cert = false;
                for (const auto& [h, ann] : rep.residual)
                    if (h == g)
                        cert = ann.evaluate({g}).is_zero() && !ann.derivative(0).evaluate({g}).is_zero();
                ok = ok && (in_basis || cert);
            }
        } catch (const std::exception& e) {
            ok = false;
        }
        if (ok)
            ++ok_cases;
        else {
            ++bad;
            if (first_bad.empty()) first_bad = " first failure: L=" + l.render(l.gens) + " over k=" + k.render(k.gens);
        }
    }
    bool rejected = false;
    {
        const auto amb = FieldSpec::ambient(PrimeField(2), {"t1"});
        try {
            field::mac_lane_check(sub(amb, {"t1^2"}), amb, 4);
        } catch (const field::PreconditionError&) {
            rejected = true;
        }
    }
    return {bad == 0 && ok_cases >= 10 && rejected,
            fmt("%zu extensions certified, %zu failed, inseparable F2(t1^2) < F2(t1) %s", ok_cases, bad,
                rejected ? "rejected" : "NOT rejected") +
                first_bad};
}

// 8. p-independence against the membership oracle.
Outcome pindep_vs_membership()
{
    std::mt19937_64 rng(8);
    std::size_t conclusive = 0, bad = 0, total = 0;
    for (int i = 0; i < 90; ++i) {
        const unsigned p = i % 2 ? 3 : 2;
        const int n = 2 + (i / 2) % 2;
        std::vector<std::string> vars;
        for (int j = 1; j <= n; ++j) vars.push_back("t" + std::to_string(j));
        const auto amb = FieldSpec::ambient(PrimeField(p), vars);
        const int size = 1 + static_cast<int>(rng() % 3);
        std::vector<std::string> b;
        for (int j = 0; j < size; ++j) b.push_back(random_poly(rng, vars, 3, 2, 1));
        const std::vector<std::string> base = i % 3 == 0 ? std::vector<std::string>{"t1"} : std::vector<std::string>{};
        const auto k = sub(amb, base);
        const auto elems = parse_all(amb, b);
        ++total;
        const auto v = field::p_independent(elems, k, amb);
        // Oracle: b_i ∈ K^p[k, b_0..b_{i-1}] for the first dependent i.
        std::optional<std::size_t> first;
        bool all_conclusive = true;
        for (std::size_t j = 0; j < elems.size() && !first; ++j) {
            const std::vector<RatFunc> prefix(elems.begin(), elems.begin() + j);
            const int bound = static_cast<int>((p - 1) * (k.nonconstant_gens().size() + prefix.size()));
            const auto m = field::membership_oracle(elems[j], k, prefix, std::max(bound, 1));
            if (m.is_inconclusive()) {
                all_conclusive = false;
                break;
            }
            if (m.is_fails()) {
                if (!(m.witness->value() == elems[j])) ++bad;
                first = j;
            }
        }
        if (!all_conclusive) continue;
        ++conclusive;
        if (first ? !(v.is_fails() && v.witness->index == *first) : !v.is_holds()) ++bad;
    }
    return {bad == 0 && conclusive >= 50, fmt("%zu cases, %zu conclusive, %zu disagreements", total, conclusive, bad)};
}

// 9. DCF0: derivation rules, amalgamation, independence examples.
Outcome dcf0()
{
    using namespace theories;
    const JetDiffField k(0, {{"x", 4}, {"y", 4}});
    const auto& amb = k.ambient();
    std::mt19937_64 rng(9);
    const std::vector<std::string> low{"x0", "x1", "x2", "y0", "y1", "y2"};
    // Chain-rule oracle: δf = Σ ∂f/∂x_i · x_{i+1} over the two chains.
    auto chain_rule = [&](const RatFunc& f) {
        RatFunc out = amb.zero();
        for (int c = 0; c < 2; ++c)
            for (int i = 0; i < 4; ++i) out = out + f.derivative(5 * c + i) * amb.var(5 * c + i + 1);
        return out;
    };
    std::size_t checks = 0, bad = 0;
    for (int i = 0; i < 300; ++i) {
        const RatFunc f = k.parse(random_poly(rng, low, 2, 3, 3));
        RatFunc g = k.parse(random_poly(rng, low, 2, 3, 3));
        if (g.is_zero()) g = amb.one();
        const RatFunc df = k.derive(f), dg = k.derive(g);
        checks += 4;
        if (!(k.derive(f + g) == df + dg)) ++bad;
        if (!(k.derive(f * g) == df * g + f * dg)) ++bad;
        if (!(k.derive(f / g) == (df * g - f * dg) / (g * g))) ++bad;
        if (!(df == chain_rule(f))) ++bad;
    }
    const std::size_t derive_bad = bad;

    const DiffFieldSpec q{&k, {}, true};
    const DiffFieldSpec lx{&k, {k.parse("x0")}, false}, mx1{&k, {k.parse("x1")}, false}, my{&k, {k.parse("y0")}, false};
    const auto tl = DerivationTable::of(k, lx.gens), tm = DerivationTable::of(k, my.gens);
    bool amal = true;
    {
        const auto a = amalgamate_derivations(lx, tl, my, tm, q, 4);
        amal = amal && a.status == Status::holds && a.table && restricts_to(*a.table, tl) && restricts_to(*a.table, tm);
        const auto a2 = amalgamate_derivations(lx, tl, q, DerivationTable{}, q, 4);
        amal = amal && a2.status == Status::holds && a2.table && a2.table->entries.size() == tl.entries.size() &&
               restricts_to(*a2.table, tl);
        const DerivationTable other{{{k.parse("x0"), k.parse("x0")}}};
        const auto a3 = amalgamate_derivations(lx, tl, lx, other, q, 4);
        amal = amal && a3.status == Status::fails && a3.refusal &&
               a3.refusal->tuple == std::vector<RatFunc>{amb.one(), k.parse("x0")};
    }

    bool examples = true;
    {
        const auto v = dcf0_indep(lx, mx1, q, 1, 4);
        examples = examples && v.is_fails() && v.witness->annihilator &&
                   v.witness->annihilator->evaluate(v.witness->tuple).is_zero();
        examples = examples && dcf0_indep(lx, my, q, 1, 4).is_holds();
        examples = examples && dcf0_indep(q, lx, q, 1, 4).is_holds();
    }
    std::size_t pairs = 0, asym = 0;
    const std::vector<std::string> gens{"x0", "x1", "y0", "x0+y0", "x0*y1", "x2^2"};
    for (const auto& a : gens)
        for (const auto& b : gens) {
            const DiffFieldSpec l{&k, {k.parse(a)}, false}, m{&k, {k.parse(b)}, false};
            const auto v = dcf0_indep(l, m, q, 1, 3), w = dcf0_indep(m, l, q, 1, 3);
            if (v.is_inconclusive() || w.is_inconclusive()) continue;
            ++pairs;
            if (v.status != w.status) ++asym;
        }
    return {derive_bad == 0 && checks >= 1000 && amal && examples && asym == 0,
            fmt("%zu derive checks, %zu failed; amalgamation %s; examples %s; %zu conclusive pairs, %zu asymmetric",
                checks, derive_bad, amal ? "ok" : "WRONG", examples ? "ok" : "WRONG", pairs, asym)};
}

// 10. SCF: the separability clause is not implied by linear disjointness.
Outcome scf()
{
    using namespace theories;
    const auto k = FieldSpec::ambient(PrimeField(2), {"t1", "t2"});
    const auto p = [&](const std::string& s) { return parse_all(k, {s}); };
    const auto v1 = scf_indep(p("t1"), p("t2"), {}, k, 4);
    const auto v2 = scf_indep(p("t1"), p("t1^2 + t1"), {}, k, 4);
    const auto v3 = scf_indep(p("t1*t2^2"), p("t1"), {}, k, 4);
    const bool ok1 = v1.is_holds();
    const bool ok2 = v2.is_fails() && v2.witness->clause == 1 && v2.witness->disjoint;
    const bool ok3 = v3.is_fails() && v3.witness->clause == 2 && v3.witness->separability;
    // On the third example the closures are linearly disjoint.
    const FieldSpec none = FieldSpec::prime(k.field, k.vars);
    const bool ld3 = field::linearly_disjoint(none.adjoin(p("t1*t2^2")), none.adjoin(p("t1")), none, 4).is_holds();
    return {ok1 && ok2 && ok3 && ld3, fmt("Holds %s, Fails(i) %s, Fails(ii) %s, disjoint closures in (ii) %s",
                                          ok1 ? "ok" : "WRONG", ok2 ? "ok" : "WRONG", ok3 ? "ok" : "WRONG",
                                          ld3 ? "ok" : "WRONG")};
}

// 11. Weight core: ldim of a fixed tuple drops at every dependent step.
Outcome weight_core()
{
    struct Chain {
        unsigned p;
        std::vector<std::string> u;
        std::vector<std::string> steps;
    };
    const std::vector<Chain> chains{
        {0, {"1", "t1", "t2", "t3"}, {"t1", "t2", "t3"}},
        {0, {"1", "t1", "t2", "t1*t2"}, {"t3", "t1", "t3^2", "t2"}},
        {0, {"1", "t1", "t1^2", "t1^3"}, {"t2", "t1^3", "t1^2", "t1"}},
        {0, {"t1", "t2", "t1+t2", "t3"}, {"t1^2", "t1", "t2+t3", "t2"}},
        {2, {"1", "t1", "t2", "t1*t2"}, {"t1^2", "t2^2", "t1", "t2"}},
        {2, {"1", "t1", "t1^2", "t1^3"}, {"t1^4", "t1^2", "t1"}},
        {3, {"1", "t1", "t2"}, {"t1^3", "t2^3", "t1+t2", "t1"}},
        {0, {"1", "t1*t2", "t2*t3", "t1*t3"}, {"t1*t2*t3", "t1^2", "t2", "t3"}},
    };
    std::size_t steps = 0, dependent = 0, bad = 0;
    for (const auto& c : chains) {
        const auto amb = FieldSpec::ambient(PrimeField(c.p), {"t1", "t2", "t3"});
        const auto u = parse_all(amb, c.u);
        FieldSpec m = FieldSpec::prime(amb.field, amb.vars);
        auto prev = field::lin_dim(u, m, 3);
        if (prev.status != Status::holds) ++bad;
        std::size_t dep_here = 0;
        for (const auto& s : c.steps) {
            const FieldSpec next = m.adjoin(parse_all(amb, {s}));
            // A step is dependent when the current basis of u acquires a relation over the new field.
            std::vector<RatFunc> basis;
            for (auto i : prev.basis) basis.push_back(u[i]);
            const field::Subfield sf(next);
            const auto rel = sf.find_dependence(basis, 3);
            const auto cur = field::lin_dim(u, next, 3);
            ++steps;
            if (cur.status != Status::holds) ++bad;
            if (rel) {
                ++dependent;
                ++dep_here;
                if (!(cur.dimension < prev.dimension)) ++bad;
            } else if (sf.certify_independent(basis) && cur.dimension != prev.dimension) {
                ++bad;
            }
            prev = cur;
            m = next;
        }
        if (dep_here > u.size()) ++bad;
    }
    return {bad == 0 && dependent > 0,
            fmt("%zu chains, %zu steps, %zu dependent, %zu violations", chains.size(), steps, dependent, bad)};
}

std::string slurp(const std::string& path)
{
    std::ifstream in(path);
    return {std::istreambuf_iterator<char>(in), {}};
}

// 12. CLI golden file and witness round trip.
Outcome cli_golden()
{
    using namespace indep::cli;
    const std::string dir = INDEP_GOLDEN_DIR;
    const Script s = parse(slurp(dir + "/fixture.idp"));
    std::set<std::string> kinds;
    for (const Query* q : s.queries()) kinds.insert(q->kind);
    const bool covers = kinds.size() == query_kinds().size();
    const bool identity = parse(render(s)) == s;
    const RunConfig cfg;
    const auto results = Runner(s, cfg).run();
    const bool golden = report(results, Format::json, cfg) == slurp(dir + "/fixture.json");
    std::string decls;
    for (const Decl* d : s.decls()) decls += render(*d) + "\n";
    std::size_t fails = 0, replay_bad = 0;
    for (const auto& r : results) {
        if (r.status != "fails") continue;
        ++fails;
        if (!r.replay) {
            ++replay_bad;
            continue;
        }
        const Script again = parse(decls + *r.replay);
        const auto rr = Runner(again, cfg).run();
        if (rr.size() != 1 || rr[0].status != "fails") ++replay_bad;
    }
    return {covers && identity && golden && replay_bad == 0,
            fmt("%zu/%zu kinds, render identity %s, golden %s, %zu Fails replayed, %zu mismatches", kinds.size(),
                query_kinds().size(), identity ? "ok" : "WRONG", golden ? "match" : "MISMATCH", fails, replay_bad)};
}

}  // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"pseudoplane axiom suite (forests <= 6)", pseudoplane_axioms},
        {"pseudoplane triviality", triviality},
        {"acl closure laws (forests <= 7)", acl_laws},
        {"char-0 Jacobian vs annihilator search", jacobian_vs_annihilator},
        {"linear disjointness implies additivity", disjointness_additivity},
        {"imperfection degree", imperfection},
        {"Mac Lane separating bases", mac_lane},
        {"p-independence vs membership oracle", pindep_vs_membership},
        {"DCF0 derivation, amalgamation, independence", dcf0},
        {"SCF independence clauses", scf},
        {"weight core chains", weight_core},
        {"CLI golden file and replay", cli_golden},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto t0 = Clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        if (!o.pass) ++failed;
        std::printf("%s %2zu %-44s %s [%.1f s]\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                    o.detail.c_str(), since(t0));
        std::fflush(stdout);
    }
    return failed == 0 ? 0 : 1;
}
