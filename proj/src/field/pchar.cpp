#include "indep/field/pchar.hpp"

#include <algorithm>
#include <functional>

namespace indep::field {

namespace {

void require_char_p(unsigned p, const char* what)
{
    if (p == 0) throw UnsupportedCharacteristic(std::string(what) + " needs characteristic p > 0");
}

bool literally_contains(const std::vector<RatFunc>& xs, const RatFunc& y)
{
    for (const auto& x : xs)
        if (x == y) return true;
    return false;
}

// Exponent vectors e with 0 ≤ e_i < p and total degree ≤ bound.
std::vector<Exponents> reduced_exponents(int r, unsigned p, int bound)
{
    std::vector<Exponents> out;
    Exponents e(r, 0);
    std::function<void(int, int)> rec = [&](int pos, int left) {
        if (pos == r) {
            out.push_back(e);
            return;
        }
        for (int v = 0; v < static_cast<int>(p) && v <= left; ++v) {
            e[pos] = v;
            rec(pos + 1, left - v);
        }
    };
    rec(0, bound);
    return out;
}

}  // namespace

DiffMatrix DiffMatrix::of(const std::vector<RatFunc>& elems) { return {jacobian(elems)}; }

std::map<Exponents, RatFunc> p_coordinates(const RatFunc& y)
{
    const unsigned p = y.characteristic();
    require_char_p(p, "p_coordinates");
    const PrimeField& f = y.field();
    const int n = y.nvars();
    // y = n·d^(p-1) / d^p, and d^p is a p-th power.
    const Poly big = y.num() * y.den().pow(p - 1);
    std::map<Exponents, std::vector<Term>> groups;
    for (const auto& t : big.terms()) {
        Exponents j(n), q(n);
        for (int i = 0; i < n; ++i) {
            j[i] = t.exp[i] % static_cast<int>(p);
            q[i] = t.exp[i] / static_cast<int>(p);
        }
        groups[j].push_back({q, t.coeff});
    }
    std::map<Exponents, RatFunc> out;
    for (auto& [j, terms] : groups) out.emplace(j, RatFunc(Poly::from_terms(f, n, std::move(terms)), y.den()));
    return out;
}

Verdict<PWitness> p_independent(const std::vector<RatFunc>& b, const FieldSpec& over, const FieldSpec& ambient)
{
    require_char_p(over.characteristic(), "p_independent");
    over.check_compatible(ambient);
    if (!ambient.is_full()) throw PreconditionError("p_independent needs the full rational function field as ambient");
    auto stack = over.nonconstant_gens();
    int r = DiffMatrix::of(stack).rank();
    for (std::size_t i = 0; i < b.size(); ++i) {
        over.check_element(b[i]);
        stack.push_back(b[i]);
        const int r2 = DiffMatrix::of(stack).rank();
        if (r2 == r) return Verdict<PWitness>::fails({i, b[i]});
        r = r2;
    }
    return Verdict<PWitness>::holds();
}

RatFunc Membership::value() const
{
    const unsigned p = terms.at(0).first.characteristic();
    RatFunc acc(terms[0].first.field(), terms[0].first.nvars());
    for (const auto& [c, m] : terms) acc += c.pow(static_cast<int>(p)) * m;
    return acc;
}

Verdict<Membership> membership_oracle(const RatFunc& x, const FieldSpec& k, const std::vector<RatFunc>& s, int bound)
{
    const unsigned p = k.characteristic();
    require_char_p(p, "membership_oracle");
    k.check_element(x);
    auto gens = k.nonconstant_gens();
    for (const auto& e : s) {
        k.check_element(e);
        if (!e.is_constant()) gens.push_back(e);
    }
    const int r = static_cast<int>(gens.size());
    const bool complete = bound >= static_cast<int>(p - 1) * r;
    std::vector<RatFunc> monos;
    for (const auto& e : reduced_exponents(r, p, bound)) {
        RatFunc m = k.one();
        for (int i = 0; i < r; ++i)
            if (e[i]) m *= gens[i].pow(e[i]);
        monos.push_back(std::move(m));
    }
    // Coordinates are semilinear: vec(c^p·m) = c·vec(m).
    std::map<Exponents, std::size_t> slot;
    std::vector<std::map<Exponents, RatFunc>> coords;
    auto collect = [&](const RatFunc& y) {
        coords.push_back(p_coordinates(y));
        for (const auto& [j, c] : coords.back()) slot.emplace(j, 0);
    };
    for (const auto& m : monos) collect(m);
    collect(x);
    std::size_t idx = 0;
    for (auto& [j, i] : slot) i = idx++;
    auto to_vec = [&](const std::map<Exponents, RatFunc>& c) {
        Vec v(slot.size(), k.zero());
        for (const auto& [j, val] : c) v[slot.at(j)] = val;
        return v;
    };
    std::vector<Vec> columns;
    for (std::size_t i = 0; i < monos.size(); ++i) columns.push_back(to_vec(coords[i]));
    const Vec target = to_vec(coords.back());
    if (auto sol = solve_columns(columns, target)) {
        Membership mem;
        for (std::size_t i = 0; i < monos.size(); ++i)
            if (!(*sol)[i].is_zero()) mem.terms.emplace_back((*sol)[i], monos[i]);
        if (mem.terms.empty()) mem.terms.emplace_back(k.zero(), k.one());
        if (mem.value() != x) throw FieldError("membership representation failed verification");
        return Verdict<Membership>::fails(std::move(mem), bound);
    }
    if (complete) return Verdict<Membership>::holds();
    return Verdict<Membership>::inconclusive(bound, "non-member up to bound " + std::to_string(bound));
}

std::vector<RatFunc> p_basis(const FieldSpec& over, const std::vector<RatFunc>& candidates, const FieldSpec& ambient)
{
    require_char_p(over.characteristic(), "p_basis");
    over.check_compatible(ambient);
    auto stack = over.nonconstant_gens();
    int r = DiffMatrix::of(stack).rank();
    std::vector<RatFunc> out;
    for (const auto& c : candidates) {
        over.check_element(c);
        stack.push_back(c);
        const int r2 = DiffMatrix::of(stack).rank();
        if (r2 > r) {
            out.push_back(c);
            r = r2;
        } else {
            stack.pop_back();
        }
    }
    return out;
}

ImperfectionResult imperfection_degree(const FieldSpec& k)
{
    const unsigned p = k.characteristic();
    require_char_p(p, "imperfection_degree");
    if (!k.is_full()) throw PreconditionError("imperfection_degree supports only the full rational function field");
    const int e = k.nvars();
    std::vector<RatFunc> basis;
    for (const auto& ex : reduced_exponents(e, p, e * static_cast<int>(p))) {
        RatFunc m = k.one();
        for (int i = 0; i < e; ++i)
            if (ex[i]) m *= k.var(i).pow(ex[i]);
        basis.push_back(std::move(m));
    }
    FieldSpec kp = FieldSpec::prime(k.field, k.vars);
    for (int i = 0; i < e; ++i) kp.gens.push_back(k.var(i).pow(static_cast<int>(p)));
    const auto dim = lin_dim(basis, kp, 1);
    if (dim.status != Status::holds || dim.dimension != static_cast<int>(basis.size()))
        throw FieldError("monomial basis over K^p could not be certified");
    return {e, dim.dimension};
}

std::optional<Annihilator> separable_annihilator(const RatFunc& y, const FieldSpec& over, int bound)
{
    over.check_element(y);
    const auto v = annihilator_search({y}, over, bound);
    if (!v.is_fails()) return std::nullopt;
    const Annihilator& p = *v.witness;
    if (p.derivative(0).evaluate({y}).is_zero()) return std::nullopt;
    return p;
}

std::optional<SubfieldPBasis> subfield_p_basis(const FieldSpec& k, int bound)
{
    const auto gens = k.nonconstant_gens();
    const int n = static_cast<int>(gens.size());
    const auto td = transcendence_degree(gens, FieldSpec::prime(k.field, k.vars), bound);
    // Try subsets of the transcendence-degree size in combination order.
    const int r = td.count;
    std::vector<int> pick(r);
    for (int i = 0; i < r; ++i) pick[i] = i;
    while (true) {
        std::vector<RatFunc> b;
        for (int i : pick) b.push_back(gens[i]);
        if (certify_alg_independent(b)) {
            SubfieldPBasis out;
            for (int i : pick) out.indices.push_back(static_cast<std::size_t>(i));
            out.basis = b;
            const FieldSpec fb = FieldSpec::generated(k.field, k.vars, b);
            bool ok = true;
            for (int g = 0; g < n && ok; ++g) {
                if (std::find(pick.begin(), pick.end(), g) != pick.end()) continue;
                auto p = separable_annihilator(gens[g], fb, bound);
                if (p) out.separable.emplace_back(gens[g], std::move(*p));
                else ok = false;
            }
            if (ok) return out;
        }
        int i = r - 1;
        while (i >= 0 && pick[i] == n - r + i) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < r; ++j) pick[j] = pick[j - 1] + 1;
    }
    return std::nullopt;
}

Status contained_in(const FieldSpec& sub, const FieldSpec& sup, int bound)
{
    sub.check_compatible(sup);
    const Subfield s(sup);
    Status out = Status::holds;
    for (const auto& g : sub.nonconstant_gens()) {
        if (literally_contains(sup.gens, g)) continue;
        if (s.find_in_field(g, bound)) continue;
        if (s.certify_not_in_field(g)) return Status::fails;
        out = Status::inconclusive;
    }
    return out;
}

namespace {

// Separability of k inside the full ambient field.
Verdict<SeparabilityWitness> separable_in_full(const FieldSpec& k, int bound)
{
    const auto pb = subfield_p_basis(k, bound);
    if (pb) {
        std::vector<RatFunc> stack;
        int r = 0;
        for (const auto& b : pb->basis) {
            stack.push_back(b);
            const int r2 = DiffMatrix::of(stack).rank();
            if (r2 == r) {
                stack.pop_back();
                return Verdict<SeparabilityWitness>::fails({b, stack}, bound);
            }
            r = r2;
        }
        return Verdict<SeparabilityWitness>::holds();
    }
    // Without an explicit p-basis: separable iff Jacobian rank equals trdeg.
    const auto gens = k.nonconstant_gens();
    const auto td = transcendence_degree(gens, FieldSpec::prime(k.field, k.vars), bound);
    const int jr = DiffMatrix::of(gens).rank();
    int certified = 0;
    {
        std::vector<RatFunc> t;
        for (auto i : td.basis) t.push_back(gens[i]);
        while (!t.empty() && !certify_alg_independent(t)) t.pop_back();
        certified = static_cast<int>(t.size());
    }
    if (td.status == Status::holds && jr == td.count) return Verdict<SeparabilityWitness>::holds();
    return Verdict<SeparabilityWitness>::inconclusive(
        bound, certified > jr ? "Jacobian rank below transcendence degree but no p-basis found"
                              : "no p-basis certificate within bound");
}

}  // namespace

Verdict<SeparabilityWitness> separable_extension(const FieldSpec& k, const FieldSpec& ambient, int bound)
{
    require_char_p(k.characteristic(), "separable_extension");
    k.check_compatible(ambient);
    if (k.nonconstant_gens().empty()) return Verdict<SeparabilityWitness>::holds();
    if (ambient.is_full()) return separable_in_full(k, bound);
    // Inside a proper subfield L we work in the full field, which is valid when L ⊂ K is separable.
    const auto amb = separable_in_full(ambient, bound);
    if (!amb.is_holds()) {
        auto v = Verdict<SeparabilityWitness>::inconclusive(bound, "ambient subfield is not certified separable in the full field");
        return v;
    }
    return separable_in_full(k, bound);
}

MacLaneReport mac_lane_check(const FieldSpec& k, const FieldSpec& l, int bound)
{
    require_char_p(k.characteristic(), "mac_lane_check");
    k.check_compatible(l);
    MacLaneReport out;
    const Status inside = contained_in(k, l, bound);
    if (inside == Status::fails) throw PreconditionError("base field is not contained in the extension");
    const FieldSpec full = FieldSpec::ambient(k.field, k.vars);
    const auto l_sep = separable_extension(l, full, bound);
    if (!l_sep.is_holds()) {
        out.note = "extension field not certified separable in the ambient field";
        return out;
    }
    const auto k_sep = separable_extension(k, full, bound);
    if (k_sep.is_fails()) throw PreconditionError("extension inseparable");
    if (!k_sep.is_holds() || inside != Status::holds) {
        out.note = "separability or containment not certified within bound";
        return out;
    }
    out.p_basis = p_basis(k, l.nonconstant_gens(), full);
    out.independence = annihilator_search(out.p_basis, k, bound);
    Status st = out.independence.is_holds() && !out.independence.bound ? Status::holds
                : out.independence.is_fails()                          ? Status::fails
                                                                       : Status::inconclusive;
    const FieldSpec ka = k.adjoin(out.p_basis);
    for (const auto& g : l.nonconstant_gens()) {
        if (literally_contains(out.p_basis, g)) continue;
        if (auto p = separable_annihilator(g, ka, bound)) out.residual.emplace_back(g, std::move(*p));
        else {
            st = conjoin(st, Status::inconclusive);
            out.note = "no separable annihilator within bound for " + l.render(g);
        }
    }
    out.status = st;
    return out;
}

}  // namespace indep::field
