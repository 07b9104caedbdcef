#include "indep/theories/dcfp.hpp"

#include <algorithm>

namespace indep::theories {

namespace {

std::vector<RatFunc> concat(std::vector<RatFunc> a, const std::vector<RatFunc>& b)
{
    for (const auto& x : b)
        if (std::find(a.begin(), a.end(), x) == a.end()) a.push_back(x);
    return a;
}

// p-th root inside the ambient field, if x is a p-th power there.
std::optional<RatFunc> pth_root(const RatFunc& x)
{
    const auto coords = field::p_coordinates(x);
    if (coords.size() != 1) return std::nullopt;
    const auto& [j, c] = *coords.begin();
    for (int e : j)
        if (e) return std::nullopt;
    return c;
}

}  // namespace

ClosureResult dcfp_dcl(const std::vector<RatFunc>& a, const JetDiffField& k, int iterations, int bound, bool strict)
{
    (void)bound;
    if (k.characteristic() == 0) throw field::UnsupportedCharacteristic("dcfp_dcl needs characteristic p");
    ClosureResult out{k.spec({}), Status::holds, 0, {}};
    std::vector<RatFunc> gens;
    auto push = [&](const RatFunc& x, std::vector<RatFunc>& fresh) {
        if (x.is_constant() || std::find(gens.begin(), gens.end(), x) != gens.end()) return;
        gens.push_back(x);
        fresh.push_back(x);
    };
    std::vector<RatFunc> frontier;
    for (const auto& x : a) {
        k.ambient().check_element(x);
        push(x, frontier);
    }
    auto flag = [&](const std::string& why) {
        if (strict) throw HorizonError(why);
        out.status = Status::inconclusive;
        if (out.note.empty()) out.note = why;
    };
    while (!frontier.empty()) {
        if (out.iterations >= iterations) {
            flag("iteration bound exhausted");
            break;
        }
        ++out.iterations;
        std::vector<RatFunc> next;
        for (const auto& x : frontier) {
            RatFunc dx;
            try {
                dx = k.derive(x);
            } catch (const HorizonError&) {
                flag("truncation horizon reached at " + k.render(x));
                continue;
            }
            if (!dx.is_zero()) {
                push(dx, next);
                continue;
            }
            if (auto r = pth_root(x)) push(*r, next);
            else flag("p-th root of " + k.render(x) + " lies outside the ambient field");
        }
        frontier = std::move(next);
    }
    out.field = k.spec(gens);
    return out;
}

Verdict<field::DisjointWitness> dcfp_indep_ld(const std::vector<RatFunc>& a, const std::vector<RatFunc>& b,
                                              const std::vector<RatFunc>& c, const JetDiffField& k, int bound,
                                              int iterations)
{
    const auto cc = dcfp_dcl(c, k, iterations, bound);
    const auto ca = dcfp_dcl(concat(a, c), k, iterations, bound);
    const auto cb = dcfp_dcl(concat(b, c), k, iterations, bound);
    auto v = field::linearly_disjoint(ca.field, cb.field, cc.field, bound);
    for (const auto* r : {&ca, &cb, &cc})
        if (r->status != Status::holds) {
            const std::string note = "closures truncated (" + r->note + ")";
            v.note = v.note.empty() ? note : v.note + "; " + note;
            break;
        }
    return v;
}

PoolRelation::PoolRelation(Kind kind, std::shared_ptr<const JetDiffField> field, std::vector<RatFunc> pool, int bound)
    : kind_(kind), field_(std::move(field)), ambient_(field_->ambient()), pool_(std::move(pool)), bound_(bound)
{
    if (pool_.size() > 64) throw DomainError("pool too large");
}

PoolRelation::PoolRelation(FieldSpec ambient, std::vector<RatFunc> pool, int bound)
    : kind_(Kind::scf), ambient_(std::move(ambient)), pool_(std::move(pool)), bound_(bound)
{
    if (pool_.size() > 64) throw DomainError("pool too large");
}

std::vector<RatFunc> PoolRelation::pick(PointSet s) const
{
    std::vector<RatFunc> out;
    for (int i : s.points()) out.push_back(pool_[i]);
    return out;
}

Status PoolRelation::status(PointSet a, PointSet b, PointSet c) const
{
    const auto key = std::make_tuple(a.bits(), b.bits(), c.bits());
    {
        std::lock_guard lock(mu_);
        if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    }
    Status s;
    if (kind_ == Kind::dcfp) s = dcfp_indep_ld(pick(a), pick(b), pick(c), *field_, bound_).status;
    else s = scf_indep(pick(a), pick(b), pick(c), ambient_, bound_).status;
    std::lock_guard lock(mu_);
    cache_.emplace(key, s);
    return s;
}

std::string PoolRelation::explain_failure(PointSet a, PointSet b, PointSet c) const
{
    if (kind_ == Kind::dcfp) {
        const auto v = dcfp_indep_ld(pick(a), pick(b), pick(c), *field_, bound_);
        if (v.is_fails()) return "dependent tuple " + ambient_.render(v.witness->tuple);
        return {};
    }
    const auto v = scf_indep(pick(a), pick(b), pick(c), ambient_, bound_);
    if (v.is_fails()) return "clause " + std::to_string(v.witness->clause);
    return {};
}

std::string PoolRelation::point_name(int i) const { return ambient_.render(pool_.at(i)); }

std::string PoolRelation::describe() const
{
    return std::string(kind_ == Kind::dcfp ? "dcfp" : "scf") + " pool " + ambient_.render(pool_);
}

InstanceFamily as_family(const PoolFamily& f)
{
    InstanceFamily out;
    out.name = f.name;
    out.size = f.instances.size();
    auto inst = f.instances;
    out.make = [inst](std::size_t i) {
        Instance x;
        x.relation = inst.at(i);
        x.label = inst[i]->describe();
        return x;
    };
    return out;
}

AxiomReport bm_search(const PoolFamily& family, const Limits& limits)
{
    return verify_axiom(Axiom::base_monotonicity, as_family(family), limits);
}

PoolFamily linear_chain_family(int bound)
{
    auto k = std::make_shared<JetDiffField>(2, std::vector<JetDiffField::Chain>{{"x", 2}});
    PoolFamily f{"dcfp-linear", {}};
    for (const auto& pool : std::vector<std::vector<std::string>>{{"x0", "x1"}, {"x0", "x1", "x0 + x1"}, {"x0", "x2", "x1 + 1"}}) {
        std::vector<RatFunc> xs;
        for (const auto& s : pool) xs.push_back(k->parse(s));
        f.instances.push_back(std::make_shared<PoolRelation>(PoolRelation::Kind::dcfp, k, xs, bound));
    }
    return f;
}

PoolFamily fractional_constant_family(int bound)
{
    auto k = std::make_shared<JetDiffField>(2, std::vector<JetDiffField::Chain>{{"x", 1}},
                                            std::vector<JetDiffField::Constant>{{"c", 1}});
    PoolFamily f{"dcfp-fractional", {}};
    for (const auto& pool : std::vector<std::vector<std::string>>{{"c", "c@1", "x0"}, {"c", "c@1", "x0", "x0^2 + c"}}) {
        std::vector<RatFunc> xs;
        for (const auto& s : pool) xs.push_back(k->parse(s));
        f.instances.push_back(std::make_shared<PoolRelation>(PoolRelation::Kind::dcfp, k, xs, bound));
    }
    return f;
}

}  // namespace indep::theories
