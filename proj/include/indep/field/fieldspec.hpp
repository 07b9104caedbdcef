#pragma once

#include <string>
#include <vector>

#include "indep/field/ratfunc.hpp"

namespace indep::field {

// A subfield of the ambient field F(t_1..t_n): the field generated over the
// prime field F by `gens`.
struct FieldSpec {
    PrimeField field;
    std::vector<std::string> vars;
    std::vector<RatFunc> gens;

    static FieldSpec prime(PrimeField f, std::vector<std::string> vars);
    static FieldSpec ambient(PrimeField f, std::vector<std::string> vars);
    static FieldSpec generated(PrimeField f, std::vector<std::string> vars, std::vector<RatFunc> gens);

    unsigned characteristic() const { return field.characteristic(); }
    int nvars() const { return static_cast<int>(vars.size()); }

    RatFunc zero() const { return RatFunc(field, nvars()); }
    RatFunc one() const { return RatFunc::constant(field, nvars(), 1); }
    RatFunc var(int i) const { return RatFunc::variable(field, nvars(), i); }
    RatFunc parse(const std::string& text) const;
    std::vector<RatFunc> ambient_vars() const;

    // Generators that are not prime-field constants.
    std::vector<RatFunc> nonconstant_gens() const;
    // True when every ambient variable occurs literally among the generators.
    bool is_full() const;
    FieldSpec adjoin(const std::vector<RatFunc>& extra) const;

    std::string render(const RatFunc& f) const { return f.to_string(vars); }
    std::string render(const std::vector<RatFunc>& fs) const;

    // Throws unless `o` lives in the same ambient field.
    void check_compatible(const FieldSpec& o) const;
    void check_element(const RatFunc& f) const;
};

}  // namespace indep::field
