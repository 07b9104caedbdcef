#include "indep/field/expr.hpp"

#include <cctype>

namespace indep::field {

namespace {

class ExprParser {
public:
    ExprParser(std::string_view text, const std::vector<std::string>& names, PrimeField f,
               const std::map<std::string, RatFunc>* aliases)
        : s_(text), names_(names), aliases_(aliases), f_(f), n_(static_cast<int>(names.size()))
    {
    }

    RatFunc run()
    {
        RatFunc v = sum();
        skip();
        if (pos_ != s_.size()) fail("unexpected character");
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const
    {
        throw ExprError(msg + " at offset " + std::to_string(pos_) + " in '" + std::string(s_) + "'", pos_);
    }

    void skip()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c)
    {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    RatFunc sum()
    {
        RatFunc acc = product();
        while (true) {
            if (eat('+')) acc += product();
            else if (eat('-')) acc -= product();
            else return acc;
        }
    }

    RatFunc product()
    {
        RatFunc acc = unary();
        while (true) {
            if (eat('*')) acc *= unary();
            else if (eat('/')) {
                const std::size_t at = pos_;
                RatFunc d = unary();
                if (d.is_zero()) {
                    pos_ = at;
                    fail("division by zero");
                }
                acc = acc / d;
            } else return acc;
        }
    }

    RatFunc unary()
    {
        if (eat('-')) return -unary();
        if (eat('+')) return unary();
        return power();
    }

    long integer()
    {
        skip();
        bool neg = false;
        if (pos_ < s_.size() && s_[pos_] == '-') {
            neg = true;
            ++pos_;
        }
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected integer exponent");
        if (pos_ - start > 6) fail("exponent too large");
        const long v = std::stol(std::string(s_.substr(start, pos_ - start)));
        return neg ? -v : v;
    }

    RatFunc power()
    {
        RatFunc base = atom();
        if (eat('^')) {
            const std::size_t at = pos_;
            const long e = integer();
            if (e < 0 && base.is_zero()) {
                pos_ = at;
                fail("negative power of zero");
            }
            return base.pow(static_cast<int>(e));
        }
        return base;
    }

    RatFunc atom()
    {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of expression");
        const char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            RatFunc v = sum();
            if (!eat(')')) fail("expected ')'");
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            mpz_class z(std::string(s_.substr(start, pos_ - start)));
            return RatFunc::constant(f_, n_, f_.reduce(Rational(z)));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            const std::size_t start = pos_;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_' || s_[pos_] == '@'))
                ++pos_;
            const std::string id(s_.substr(start, pos_ - start));
            for (int k = 0; k < n_; ++k)
                if (names_[k] == id) return RatFunc::variable(f_, n_, k);
            if (aliases_)
                if (auto it = aliases_->find(id); it != aliases_->end()) return it->second;
            pos_ = start;
            fail("unknown variable '" + id + "'");
        }
        fail("unexpected character");
    }

    std::string_view s_;
    const std::vector<std::string>& names_;
    const std::map<std::string, RatFunc>* aliases_;
    PrimeField f_;
    int n_;
    std::size_t pos_ = 0;
};

}  // namespace

RatFunc parse_expr(std::string_view text, const std::vector<std::string>& names, PrimeField f)
{
    return ExprParser(text, names, f, nullptr).run();
}

RatFunc parse_expr(std::string_view text, const std::vector<std::string>& names, PrimeField f,
                   const std::map<std::string, RatFunc>& aliases)
{
    return ExprParser(text, names, f, &aliases).run();
}

}  // namespace indep::field
