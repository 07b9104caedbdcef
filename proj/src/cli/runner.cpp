#include "indep/cli/runner.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <iterator>
#include <set>

#include "indep/core/axioms.hpp"
#include "indep/core/report_json.hpp"
#include "indep/field/algdep.hpp"
#include "indep/field/disjoint.hpp"
#include "indep/field/lindep.hpp"
#include "indep/field/pchar.hpp"
#include "indep/pseudoplane/kernel.hpp"
#include "indep/pseudoplane/pseudoplane.hpp"
#include "indep/theories/dcf0.hpp"
#include "indep/theories/dcfp.hpp"
#include "indep/theories/scf.hpp"

namespace indep::cli {

using field::FieldSpec;
using field::RatFunc;
using json = nlohmann::ordered_json;

namespace {

std::string strip(const std::string& s)
{
    std::string out;
    for (char c : s)
        if (c != ' ') out += c;
    return out;
}

Value set_of(std::vector<std::string> items)
{
    Value v;
    v.type = Value::Type::set;
    v.items = std::move(items);
    return v;
}

Value number(int n)
{
    Value v;
    v.type = Value::Type::number;
    v.text = std::to_string(n);
    return v;
}

}  // namespace

RatFunc Target::parse(const std::string& text) const
{
    if (jet) return jet->parse(text);
    return ambient->parse(text);
}

std::vector<RatFunc> Target::parse(const std::vector<std::string>& items) const
{
    std::vector<RatFunc> out;
    for (const auto& s : items) out.push_back(parse(s));
    return out;
}

FieldSpec Target::spec(std::vector<RatFunc> gens) const
{
    if (jet) return jet->spec(std::move(gens));
    return FieldSpec::generated(ambient->field, ambient->vars, std::move(gens));
}

std::string Target::render(const RatFunc& f) const { return strip(ambient->render(f)); }

Target build_target(const Decl& d)
{
    Target t;
    switch (d.kind) {
    case Decl::Kind::forest: {
        pseudoplane::Forest f;
        for (const auto& v : d.vertices) f.add_vertex(v);
        for (const auto& [a, b] : d.edges) f.add_edge(a, b);
        t.type = TargetType::forest;
        t.forest = std::move(f);
        break;
    }
    case Decl::Kind::field:
        t.type = TargetType::field;
        t.ambient = FieldSpec::ambient(field::PrimeField(d.characteristic.value_or(0)), d.vars);
        break;
    case Decl::Kind::theory: {
        const unsigned p = d.characteristic.value_or(0);
        if (d.theory == "scf") {
            t.type = TargetType::scf;
            t.ambient = FieldSpec::ambient(field::PrimeField(p), d.vars);
            break;
        }
        t.type = d.theory == "dcf0" ? TargetType::dcf0 : TargetType::dcfp;
        std::vector<theories::JetDiffField::Chain> chains;
        for (const auto& [n, o] : d.chains) chains.push_back({n, o});
        std::vector<theories::JetDiffField::Constant> consts;
        for (const auto& [n, l] : d.constants) consts.push_back({n, l});
        t.jet = std::make_shared<theories::JetDiffField>(p, chains, consts);
        t.ambient = t.jet->ambient();
        break;
    }
    }
    return t;
}

Runner::Runner(const Script& script, RunConfig config) : script_(script), config_(config)
{
    for (const Decl* d : script_.decls()) targets_.emplace(d->name, build_target(*d));
}

std::vector<QueryResult> Runner::run() const
{
    const auto qs = script_.queries();
    std::vector<QueryResult> out(qs.size());
    const long n = static_cast<long>(qs.size());
    if (config_.parallel) {
#pragma omp parallel for schedule(dynamic)
        for (long i = 0; i < n; ++i) out[i] = run_query(*qs[i], static_cast<std::size_t>(i));
    } else {
        for (long i = 0; i < n; ++i) out[i] = run_query(*qs[i], static_cast<std::size_t>(i));
    }
    return out;
}

QueryResult Runner::run_query(const Query& q, std::size_t index) const
{
    QueryResult r;
    r.index = index;
    r.query = render(q);
    r.kind = q.kind;
    const auto start = std::chrono::steady_clock::now();
    try {
        evaluate(q, r);
    } catch (const std::exception& e) {
        r.status = "error";
        r.detail = json::object();
        r.replay.reset();
        r.error = e.what();
    }
    if (config_.timing)
        r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return r;
}

namespace {

// Evaluation context for one query.
struct Ctx {
    const Query& q;
    const Target* target;
    const RunConfig& cfg;
    QueryResult& r;

    bool has(const std::string& key) const { return q.find(key) != nullptr; }
    const std::vector<std::string>& items(const std::string& key) const
    {
        static const std::vector<std::string> none;
        const Param* p = q.find(key);
        return p ? p->value.items : none;
    }
    int num(const std::string& key, int dflt) const
    {
        const Param* p = q.find(key);
        return p ? std::stoi(p->value.text) : dflt;
    }
    std::string word(const std::string& key, const std::string& dflt) const
    {
        const Param* p = q.find(key);
        return p ? p->value.text : dflt;
    }
    int bound() const { return num("bound", cfg.bound); }

    std::vector<RatFunc> elems(const std::string& key) const { return target->parse(items(key)); }
    FieldSpec spec(const std::string& key) const { return target->spec(elems(key)); }
    const FieldSpec& ambient() const { return *target->ambient; }
    const pseudoplane::Forest& forest() const { return *target->forest; }

    pseudoplane::VertexSet vertices(const std::string& key) const { return forest().indices(items(key)); }
    std::vector<int> tuple(const std::string& key) const
    {
        std::vector<int> out;
        for (const auto& l : items(key)) out.push_back(forest().index(l));
        return out;
    }

    std::vector<std::string> texts(const std::vector<RatFunc>& fs) const
    {
        std::vector<std::string> out;
        for (const auto& f : fs) out.push_back(target->render(f));
        return out;
    }
    std::string set_text(const std::vector<RatFunc>& fs) const { return render(set_of(texts(fs))); }
    std::vector<std::string> labels(const pseudoplane::VertexSet& s) const
    {
        std::vector<std::string> out;
        for (int v : s) out.push_back(forest().label(v));
        return out;
    }
    std::vector<std::string> labels(const std::vector<int>& s) const
    {
        std::vector<std::string> out;
        for (int v : s) out.push_back(forest().label(v));
        return out;
    }

    void status(Status s) { r.status = std::string(to_string(s)); }
    template <class W>
    void verdict(const Verdict<W>& v)
    {
        status(v.status);
        r.bound = v.bound;
        r.note = v.note;
    }

    // The query itself with some parameters replaced, or a new one.
    std::string replay_with(std::vector<Param> overrides) const
    {
        Query out = q;
        for (auto& o : overrides) {
            auto it = std::find_if(out.params.begin(), out.params.end(), [&](const Param& p) { return p.key == o.key; });
            if (it != out.params.end())
                it->value = o.value;
            else
                out.params.push_back(o);
        }
        return render(out);
    }
    std::string replay_as(const std::string& kind, std::vector<Param> params) const
    {
        Query out;
        out.kind = kind;
        out.target = q.target;
        out.params = std::move(params);
        return render(out);
    }

    json relation(const field::LinearRelation& rel) const { return texts(rel.coeffs); }
};

json table_json(const Ctx& c, const theories::DerivationTable& t)
{
    json out = json::array();
    for (const auto& [g, v] : t.entries) out.push_back(c.target->render(g) + "->" + c.target->render(v));
    return out;
}

theories::DerivationTable table_param(const Ctx& c, const std::string& key, const std::vector<RatFunc>& gens)
{
    if (!c.has(key)) return theories::DerivationTable::of(*c.target->jet, gens);
    theories::DerivationTable t;
    for (const auto& item : c.items(key)) {
        auto pos = item.find("->");
        if (pos == std::string::npos) throw DomainError("derivation entry '" + item + "' lacks '->'");
        t.entries.emplace_back(c.target->parse(item.substr(0, pos)), c.target->parse(item.substr(pos + 2)));
    }
    return t;
}

void forest_query(Ctx& c)
{
    using namespace pseudoplane;
    const std::string& k = c.q.kind;
    if (k == "indep") {
        const auto v = indep_ps(c.forest(), c.vertices("A"), c.vertices("B"), c.vertices("C"));
        c.verdict(v);
        if (v.is_fails()) {
            const auto& w = *v.witness;
            c.r.detail["x"] = c.forest().label(w.x);
            c.r.detail["y"] = c.forest().label(w.y);
            c.r.detail["path"] = c.labels(w.path);
            c.r.replay = c.replay_with({{"A", set_of({c.forest().label(w.x)})}, {"B", set_of({c.forest().label(w.y)})}});
        }
    } else if (k == "path") {
        const auto p = reduced_path(c.forest(), c.forest().index(c.word("x", "")), c.forest().index(c.word("y", "")));
        c.r.status = "ok";
        c.r.detail["path"] = p ? json(c.labels(*p)) : json(nullptr);
    } else if (k == "acl") {
        c.r.status = "ok";
        c.r.detail["closure"] = render(set_of(c.labels(acl(c.forest(), c.vertices("A")))));
    } else if (k == "nice") {
        const auto a = c.vertices("A");
        const auto cl = acl(c.forest(), a);
        VertexSet extra;
        std::set_difference(cl.begin(), cl.end(), a.begin(), a.end(), std::inserter(extra, extra.end()));
        c.status(extra.empty() ? Status::holds : Status::fails);
        if (!extra.empty()) {
            c.r.detail["missing"] = render(set_of(c.labels(extra)));
            c.r.replay = c.replay_with({});
        }
    } else if (k == "sametype") {
        const auto v = same_type_over(c.forest(), c.tuple("A"), c.tuple("A2"), c.vertices("B"));
        c.verdict(v);
        if (v.is_fails()) {
            c.r.detail["reason"] = v.witness->reason;
            c.r.replay = c.replay_with({});
        } else if (v.witness) {
            json m = json::object();
            for (auto [from, to] : v.witness->map) m[c.forest().label(from)] = c.forest().label(to);
            c.r.detail["map"] = std::move(m);
        }
    } else if (k == "saturate") {
        const Forest s = saturate(c.forest(), c.num("degree", 2), c.num("depth", 1));
        c.r.status = "ok";
        c.r.detail["vertices"] = s.size();
        c.r.detail["forest"] = s.to_text();
    }
}

void field_query(Ctx& c)
{
    const std::string& k = c.q.kind;
    const int bound = c.bound();
    if (k == "lin_dim") {
        const auto elems = c.elems("elems");
        const auto res = field::lin_dim(elems, c.spec("over"), bound);
        c.status(res.status);
        c.r.bound = res.bound;
        c.r.detail["dimension"] = res.dimension;
        std::vector<RatFunc> basis;
        for (auto i : res.basis) basis.push_back(elems[i]);
        c.r.detail["basis"] = c.set_text(basis);
        json rels = json::array();
        for (const auto& [i, rel] : res.relations) {
            json e;
            e["element"] = c.target->render(elems[i]);
            e["coefficients"] = c.relation(rel);
            rels.push_back(std::move(e));
        }
        c.r.detail["relations"] = std::move(rels);
    } else if (k == "ld") {
        const auto v = field::linearly_disjoint(c.spec("L"), c.spec("M"), c.spec("k"), bound);
        c.verdict(v);
        if (v.is_fails()) {
            c.r.detail["tuple"] = c.set_text(v.witness->tuple);
            c.r.detail["coefficients"] = c.relation(v.witness->relation);
            auto gens = c.texts(v.witness->tuple);
            for (const auto& g : c.items("k")) gens.push_back(g);
            c.r.replay = c.replay_with({{"L", set_of(gens)}});
        }
    } else if (k == "annihilator") {
        const auto over = c.spec("over");
        const auto v = field::annihilator_search(c.elems("elems"), over, c.num("degree", bound));
        c.verdict(v);
        if (v.is_holds()) c.r.detail["certified"] = !v.bound.has_value();
        if (v.is_fails()) {
            c.r.detail["annihilator"] = strip(v.witness->render(over));
            c.r.detail["degree"] = v.witness->degree();
            c.r.replay = c.replay_with({{"degree", number(v.witness->degree())}});
        }
    } else if (k == "jacobian") {
        const auto elems = c.elems("elems");
        const auto v = field::alg_indep_jacobian(elems);
        c.verdict(v);
        c.r.detail["rank"] = v.witness ? v.witness->rank : static_cast<int>(elems.size());
        if (v.is_fails()) c.r.replay = c.replay_with({});
    } else if (k == "trdeg") {
        const auto elems = c.elems("elems");
        const auto res = field::transcendence_degree(elems, c.spec("over"), bound);
        c.status(res.status);
        c.r.bound = res.bound;
        c.r.note = res.note;
        c.r.detail["count"] = res.count;
        std::vector<RatFunc> basis;
        for (auto i : res.basis) basis.push_back(elems[i]);
        c.r.detail["basis"] = c.set_text(basis);
    } else if (k == "pindep") {
        const auto b = c.elems("B");
        const auto v = field::p_independent(b, c.spec("over"), c.ambient());
        c.verdict(v);
        if (v.is_fails()) {
            c.r.detail["index"] = v.witness->index;
            c.r.detail["element"] = c.target->render(v.witness->element);
            std::vector<std::string> prefix(c.items("B").begin(), c.items("B").begin() + v.witness->index + 1);
            c.r.replay = c.replay_with({{"B", set_of(prefix)}});
        }
    } else if (k == "member") {
        const auto x = c.elems("x");
        if (x.size() != 1) throw DomainError("member takes exactly one element x");
        const auto v = field::membership_oracle(x[0], c.spec("k"), c.elems("S"), bound);
        c.verdict(v);
        if (v.is_fails()) {
            json terms = json::array();
            for (const auto& [coef, mono] : v.witness->terms)
                terms.push_back("(" + c.target->render(coef) + ")^p*" + c.target->render(mono));
            c.r.detail["representation"] = std::move(terms);
            c.r.replay = c.replay_with({});
        }
    } else if (k == "pbasis") {
        c.r.status = "ok";
        c.r.detail["basis"] = c.set_text(field::p_basis(c.spec("over"), c.elems("candidates"), c.ambient()));
    } else if (k == "imperfection") {
        const auto res = field::imperfection_degree(c.ambient());
        c.r.status = "ok";
        c.r.detail["degree"] = res.degree;
        c.r.detail["basis_size"] = res.basis_size;
    } else if (k == "separable") {
        const auto v = field::separable_extension(c.spec("k"), c.ambient(), bound);
        c.verdict(v);
        if (v.is_fails()) {
            c.r.detail["element"] = c.target->render(v.witness->element);
            c.r.detail["others"] = c.set_text(v.witness->others);
            auto b = c.texts(v.witness->others);
            b.push_back(c.target->render(v.witness->element));
            c.r.replay = c.replay_as("pindep", {{"B", set_of(b)}});
        }
    } else if (k == "maclane") {
        const auto kk = c.spec("k");
        const auto rep = field::mac_lane_check(kk, c.spec("L"), bound);
        c.status(rep.status);
        c.r.bound = bound;
        c.r.note = rep.note;
        c.r.detail["p_basis"] = c.set_text(rep.p_basis);
        json res = json::array();
        for (const auto& [g, ann] : rep.residual) {
            json e;
            e["element"] = c.target->render(g);
            e["annihilator"] = strip(ann.render(kk.adjoin(rep.p_basis)));
            res.push_back(std::move(e));
        }
        c.r.detail["residual"] = std::move(res);
        if (rep.status == Status::fails) c.r.replay = c.replay_with({});
    } else if (k == "regular") {
        const auto v = field::regular_upto(c.spec("k"), c.spec("L"), bound);
        c.verdict(v);
        if (v.is_fails()) {
            const auto& w = *v.witness;
            c.r.detail["element"] = c.target->render(w.element);
            if (w.annihilator) {
                c.r.detail["annihilator"] = strip(w.annihilator->render(c.spec("k")));
                c.r.replay = c.replay_as("annihilator", {{"elems", set_of({c.target->render(w.element)})},
                                                         {"over", set_of(c.items("k"))},
                                                         {"degree", number(w.annihilator->degree())}});
            } else {
                c.r.replay = c.replay_with({});
            }
        }
    }
}

void theory_query(Ctx& c)
{
    const std::string& k = c.q.kind;
    const int bound = c.bound();
    const int iterations = c.num("iterations", c.cfg.iterations);
    const auto* jet = c.target->jet.get();
    if (k == "derive") {
        const auto f = c.elems("f");
        if (f.size() != 1) throw DomainError("derive takes exactly one element f");
        c.r.status = "ok";
        c.r.detail["derivative"] = c.target->render(jet->derive(f[0]));
    } else if (k == "diffgen") {
        c.r.status = "ok";
        c.r.detail["generators"] = c.set_text(theories::diff_generated(*jet, c.elems("A"), c.num("order", c.cfg.order)));
    } else if (k == "dcf0") {
        theories::DiffFieldSpec l{jet, c.elems("L")}, m{jet, c.elems("M")}, kk{jet, c.elems("k"), c.has("rac")};
        const auto v = theories::dcf0_indep(l, m, kk, c.num("order", c.cfg.order), bound);
        c.verdict(v);
        if (v.is_fails()) {
            c.r.detail["tuple"] = c.set_text(v.witness->tuple);
            if (v.witness->annihilator) c.r.detail["annihilator"] = strip(v.witness->annihilator->render(kk.spec()));
            c.r.replay = c.replay_with({});
        }
    } else if (k == "amalgamate") {
        theories::DiffFieldSpec l{jet, c.elems("L")}, m{jet, c.elems("M")}, kk{jet, c.elems("k")};
        const auto dl = table_param(c, "dL", l.gens), dm = table_param(c, "dM", m.gens);
        const auto a = theories::amalgamate_derivations(l, dl, m, dm, kk, bound);
        c.status(a.status);
        c.r.bound = bound;
        c.r.note = a.note;
        if (a.table) c.r.detail["table"] = table_json(c, *a.table);
        if (a.refusal) {
            c.r.detail["tuple"] = c.set_text(a.refusal->tuple);
            c.r.detail["coefficients"] = c.relation(a.refusal->relation);
        }
        if (a.status == Status::fails)
            c.r.replay = c.replay_as("ld", {{"L", set_of(c.items("L"))},
                                            {"M", set_of(c.items("M"))},
                                            {"k", set_of(c.items("k"))},
                                            {"bound", number(bound)}});
    } else if (k == "scf_dcl" || k == "dcfp_dcl") {
        const auto res = k == "scf_dcl" ? theories::scf_dcl_lambda(c.elems("A"), c.ambient(), iterations, bound)
                                        : theories::dcfp_dcl(c.elems("A"), *jet, iterations, bound, c.has("strict"));
        c.status(res.status);
        c.r.bound = bound;
        c.r.note = res.note;
        c.r.detail["generators"] = c.set_text(res.field.gens);
        c.r.detail["iterations"] = res.iterations;
    } else if (k == "scf_indep") {
        const auto v = theories::scf_indep(c.elems("A"), c.elems("B"), c.elems("C"), c.ambient(), bound, iterations);
        c.verdict(v);
        if (v.is_fails()) {
            const auto& w = *v.witness;
            c.r.detail["clause"] = w.clause;
            if (w.disjoint) {
                c.r.detail["tuple"] = c.set_text(w.disjoint->tuple);
                c.r.detail["coefficients"] = c.relation(w.disjoint->relation);
                c.r.replay = c.replay_with({});
            }
            if (w.separability) {
                c.r.detail["element"] = c.target->render(w.separability->element);
                c.r.detail["others"] = c.set_text(w.separability->others);
                auto b = c.texts(w.separability->others);
                b.push_back(c.target->render(w.separability->element));
                c.r.replay = c.replay_as("pindep", {{"B", set_of(b)}});
            }
        }
    } else if (k == "dcfp_indep") {
        const auto v = theories::dcfp_indep_ld(c.elems("A"), c.elems("B"), c.elems("C"), *jet, bound, iterations);
        c.verdict(v);
        if (v.is_fails()) {
            c.r.detail["tuple"] = c.set_text(v.witness->tuple);
            c.r.detail["coefficients"] = c.relation(v.witness->relation);
            c.r.replay = c.replay_with({});
        }
    } else if (k == "bm") {
        theories::PoolFamily fam;
        fam.name = c.q.target;
        const auto pool = c.elems("pool");
        if (c.target->jet)
            fam.instances.push_back(std::make_shared<theories::PoolRelation>(theories::PoolRelation::Kind::dcfp,
                                                                              c.target->jet, pool, bound));
        else
            fam.instances.push_back(std::make_shared<theories::PoolRelation>(c.ambient(), pool, bound));
        Limits lim;
        lim.max_set_size = c.num("sets", 2);
        const auto rep = theories::bm_search(fam, lim);
        c.status(rep.violations ? Status::fails : rep.inconclusive ? Status::inconclusive : Status::holds);
        c.r.bound = bound;
        c.r.detail["report"] = to_json(rep);
        if (rep.violations) c.r.replay = c.replay_with({});
    }
}

void axioms_query(Ctx& c)
{
    const int n = c.num("vertices", c.cfg.limit_vertices);
    std::vector<Axiom> axioms;
    if (c.has("axiom")) {
        const auto a = parse_axiom(c.word("axiom", ""));
        if (!a) throw DomainError("unknown axiom '" + c.word("axiom", "") + "'");
        axioms.push_back(*a);
    } else {
        axioms = all_axioms();
    }
    Limits lim;
    lim.max_set_size = c.num("sets", 3);
    const auto fam = pseudoplane::forest_family(n, true);
    json reps = json::array();
    std::size_t violations = 0, inconclusive = 0;
    for (Axiom a : axioms) {
        const auto rep = c.cfg.parallel ? verify_axiom(a, fam, lim) : verify_axiom_serial(a, fam, lim);
        violations += rep.violations;
        inconclusive += rep.inconclusive;
        reps.push_back(to_json(rep));
    }
    c.status(violations ? Status::fails : inconclusive ? Status::inconclusive : Status::holds);
    c.r.detail["vertices"] = n;
    c.r.detail["structures"] = fam.size;
    c.r.detail["reports"] = std::move(reps);
    if (violations) c.r.replay = c.replay_with({});
}

const std::set<std::string> forest_kinds{"indep", "path", "acl", "nice", "sametype", "saturate"};
const std::set<std::string> theory_kinds{"derive",  "diffgen",   "dcf0",       "amalgamate", "scf_dcl",
                                         "scf_indep", "dcfp_dcl", "dcfp_indep", "bm"};

}  // namespace

void Runner::evaluate(const Query& q, QueryResult& r) const
{
    const Target* t = nullptr;
    if (q.target != "forests") {
        auto it = targets_.find(q.target);
        if (it == targets_.end()) throw DomainError("undeclared target '" + q.target + "'");
        t = &it->second;
    }
    Ctx c{q, t, config_, r};
    if (q.kind == "axioms")
        axioms_query(c);
    else if (forest_kinds.count(q.kind))
        forest_query(c);
    else if (theory_kinds.count(q.kind))
        theory_query(c);
    else
        field_query(c);
    if (r.status.empty()) throw DomainError("query kind '" + q.kind + "' not handled");
}

}  // namespace indep::cli
