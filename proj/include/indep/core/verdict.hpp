#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>

namespace indep {

enum class Status { holds, fails, inconclusive };

std::string_view to_string(Status s);

// Three-valued outcome of a (possibly degree-bounded) decision procedure.
// A failing verdict always carries its witness; an inconclusive one carries
// the bound at which the search stopped.
template <class Witness>
struct Verdict {
    Status status = Status::inconclusive;
    std::optional<Witness> witness;
    std::optional<int> bound;
    std::string note;

    static Verdict holds(std::optional<int> bound = std::nullopt)
    {
        Verdict v;
        v.status = Status::holds;
        v.bound = bound;
        return v;
    }
    static Verdict fails(Witness w, std::optional<int> bound = std::nullopt)
    {
        Verdict v;
        v.status = Status::fails;
        v.witness = std::move(w);
        v.bound = bound;
        return v;
    }
    static Verdict inconclusive(int bound, std::string note = {})
    {
        Verdict v;
        v.status = Status::inconclusive;
        v.bound = bound;
        v.note = std::move(note);
        return v;
    }

    bool is_holds() const { return status == Status::holds; }
    bool is_fails() const { return status == Status::fails; }
    bool is_inconclusive() const { return status == Status::inconclusive; }
};

// Conjunction of two three-valued statuses: fails dominates, then inconclusive.
constexpr Status conjoin(Status a, Status b)
{
    if (a == Status::fails || b == Status::fails) return Status::fails;
    if (a == Status::inconclusive || b == Status::inconclusive) return Status::inconclusive;
    return Status::holds;
}

}  // namespace indep
