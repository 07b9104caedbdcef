#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "indep/core/point_set.hpp"
#include "indep/core/verdict.hpp"

namespace indep {

class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class ConfigurationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Query A ⫝_C B. C need not lie inside A ∩ B; evaluation always works on
// (C ∪ A, C ∪ B, C).
struct IndepQuery {
    PointSet a;
    PointSet b;
    PointSet c;
};

// A ternary independence relation on one finite structure whose points are
// indexed 0 .. universe_size()-1. Implementations may assume C ⊆ A ∩ B.
class Relation {
public:
    virtual ~Relation() = default;

    virtual int universe_size() const = 0;
    virtual Status status(PointSet a, PointSet b, PointSet c) const = 0;

    // Human-readable reason for a failing triple; called only when status() is fails.
    virtual std::string explain_failure(PointSet a, PointSet b, PointSet c) const
    {
        (void)a, (void)b, (void)c;
        return {};
    }

    // Closure operator used by Basedness (A ∪ B ⫝_B cl(B)); absent when the
    // relation does not come with one.
    virtual std::optional<PointSet> closure(PointSet x) const
    {
        (void)x;
        return std::nullopt;
    }

    // Degree/iteration bound reported with inconclusive verdicts.
    virtual int search_bound() const { return 0; }

    virtual std::string point_name(int i) const { return std::to_string(i); }
    virtual std::string describe() const { return {}; }
};

std::string render_set(const Relation& rel, PointSet s);

// Applies the (C ∪ A, C ∪ B, C) convention.
inline Status normalized_status(const Relation& rel, PointSet a, PointSet b, PointSet c)
{
    return rel.status(a | c, b | c, c);
}

Verdict<std::string> evaluate(const Relation& rel, const IndepQuery& q);

}  // namespace indep
