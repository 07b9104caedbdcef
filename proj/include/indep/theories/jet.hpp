#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "indep/field/fieldspec.hpp"

namespace indep::theories {

using field::FieldSpec;
using field::RatFunc;

class HorizonError : public field::FieldError {
public:
    using field::FieldError::FieldError;
};

// Truncated differential field: chains x_0..x_N with δ(x_i) = x_{i+1}, and
// constant chains whose internal variable is the p^level-th root of the
// declared constant. δ(x_N) is outside the model and raises HorizonError.
class JetDiffField {
public:
    struct Chain {
        std::string name;
        int order = 0;
    };
    struct Constant {
        std::string name;
        int level = 0;
    };

    JetDiffField(unsigned characteristic, std::vector<Chain> chains, std::vector<Constant> constants = {});

    unsigned characteristic() const { return ambient_.characteristic(); }
    const FieldSpec& ambient() const { return ambient_; }
    const std::vector<Chain>& chains() const { return chains_; }
    const std::vector<Constant>& constants() const { return constants_; }

    RatFunc parse(const std::string& text) const;
    std::string render(const RatFunc& f) const { return ambient_.render(f); }
    std::string render(const std::vector<RatFunc>& fs) const { return ambient_.render(fs); }

    RatFunc derive(const RatFunc& f) const;
    // Largest d with δ^d(f) inside the horizon for sure; nullopt when unlimited.
    std::optional<int> headroom(const RatFunc& f) const;
    bool is_constant_var(int v) const { return var_chain_[v] < 0; }

    FieldSpec spec(std::vector<RatFunc> gens) const;

private:
    FieldSpec ambient_;
    std::vector<Chain> chains_;
    std::vector<Constant> constants_;
    std::vector<int> var_chain_;  // chain index, or -1 for a constant root
    std::vector<int> var_index_;  // jet index within its chain
    std::map<std::string, RatFunc> aliases_;
};

std::vector<RatFunc> diff_generated(const JetDiffField& k, const std::vector<RatFunc>& a, int order);

struct DiffFieldSpec {
    const JetDiffField* field = nullptr;
    std::vector<RatFunc> gens;
    bool certified_rac = false;

    FieldSpec spec() const { return field->spec(gens); }
};

struct DerivationTable {
    std::vector<std::pair<RatFunc, RatFunc>> entries;

    std::optional<RatFunc> value(const RatFunc& g) const;
    // Table of the ambient derivation on the given generators.
    static DerivationTable of(const JetDiffField& k, const std::vector<RatFunc>& gens);
};

}  // namespace indep::theories
