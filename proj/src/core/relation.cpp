#include "indep/core/relation.hpp"

namespace indep {

std::string_view to_string(Status s)
{
    switch (s) {
    case Status::holds: return "holds";
    case Status::fails: return "fails";
    case Status::inconclusive: return "inconclusive";
    }
    return "?";
}

std::string render_set(const Relation& rel, PointSet s)
{
    std::string out = "{";
    bool first = true;
    s.for_each([&](int i) {
        if (!first) out += ",";
        out += rel.point_name(i);
        first = false;
    });
    return out + "}";
}

Verdict<std::string> evaluate(const Relation& rel, const IndepQuery& q)
{
    const PointSet universe = PointSet::first(rel.universe_size());
    if (!(q.a | q.b | q.c).subset_of(universe))
        throw DomainError("query mentions a point outside the structure");
    const PointSet a = q.a | q.c;
    const PointSet b = q.b | q.c;
    switch (rel.status(a, b, q.c)) {
    case Status::holds: return Verdict<std::string>::holds();
    case Status::fails: return Verdict<std::string>::fails(rel.explain_failure(a, b, q.c));
    case Status::inconclusive: break;
    }
    return Verdict<std::string>::inconclusive(rel.search_bound());
}

}  // namespace indep
