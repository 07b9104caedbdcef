#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "indep/field/ratfunc.hpp"

namespace indep::field {

class ExprError : public FieldError {
public:
    ExprError(const std::string& msg, std::size_t offset) : FieldError(msg), offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

// Parses an expression over the named variables with + - * / ^, integer
// literals and parentheses. Exponents are integer literals (possibly negative).
RatFunc parse_expr(std::string_view text, const std::vector<std::string>& names, PrimeField f);
// As above; identifiers found in `aliases` stand for the given elements.
RatFunc parse_expr(std::string_view text, const std::vector<std::string>& names, PrimeField f,
                   const std::map<std::string, RatFunc>& aliases);

}  // namespace indep::field
