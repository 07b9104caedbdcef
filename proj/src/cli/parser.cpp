#include "indep/cli/parser.hpp"
#include "indep/cli/runner.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

namespace indep::cli {

namespace {

std::string join_expected(const std::vector<std::string>& e)
{
    std::string out;
    for (std::size_t i = 0; i < e.size(); ++i) out += (i ? ", " : "") + e[i];
    return out;
}

std::string format(int line, int col, const std::string& msg, const std::vector<std::string>& expected)
{
    std::string out = std::to_string(line) + ":" + std::to_string(col) + ": " + msg;
    if (!expected.empty()) out += " (expected " + join_expected(expected) + ")";
    return out;
}

bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '@' || c == '#'; }

using T = Value::Type;
constexpr TargetType FO = TargetType::forest, FI = TargetType::field, D0 = TargetType::dcf0, SC = TargetType::scf,
                     DP = TargetType::dcfp;
const std::vector<TargetType> any_field{FI, D0, SC, DP};

}  // namespace

ParseError::ParseError(int line, int col, std::string message, std::vector<std::string> expected)
    : std::runtime_error(format(line, col, message, expected)),
      line_(line),
      col_(col),
      message_(std::move(message)),
      expected_(std::move(expected))
{
}

const std::vector<KindInfo>& query_kinds()
{
    static const std::vector<KindInfo> kinds{
        {"indep", {FO}, {{"A", T::set}, {"B", T::set}, {"C", T::set}}, {"A", "B", "C"}},
        {"path", {FO}, {{"x", T::word}, {"y", T::word}}, {"x", "y"}},
        {"acl", {FO}, {{"A", T::set}}, {"A"}},
        {"nice", {FO}, {{"A", T::set}}, {"A"}},
        {"sametype", {FO}, {{"A", T::set}, {"A2", T::set}, {"B", T::set}}, {"A", "A2", "B"}},
        {"saturate", {FO}, {{"degree", T::number}, {"depth", T::number}}, {}},
        {"lin_dim", any_field, {{"elems", T::set}, {"over", T::set}, {"bound", T::number}}, {"elems"}},
        {"ld", any_field, {{"L", T::set}, {"M", T::set}, {"k", T::set}, {"bound", T::number}}, {"L", "M", "k"}},
        {"annihilator", any_field, {{"elems", T::set}, {"over", T::set}, {"degree", T::number}}, {"elems"}},
        {"jacobian", any_field, {{"elems", T::set}}, {"elems"}},
        {"trdeg", any_field, {{"elems", T::set}, {"over", T::set}, {"bound", T::number}}, {"elems"}},
        {"pindep", any_field, {{"B", T::set}, {"over", T::set}}, {"B"}},
        {"member", any_field, {{"x", T::set}, {"k", T::set}, {"S", T::set}, {"bound", T::number}}, {"x", "S"}},
        {"pbasis", any_field, {{"candidates", T::set}, {"over", T::set}}, {"candidates"}},
        {"imperfection", any_field, {}, {}},
        {"separable", any_field, {{"k", T::set}, {"bound", T::number}}, {"k"}},
        {"maclane", any_field, {{"k", T::set}, {"L", T::set}, {"bound", T::number}}, {"k", "L"}},
        {"regular", any_field, {{"k", T::set}, {"L", T::set}, {"bound", T::number}}, {"k", "L"}},
        {"derive", {D0, DP}, {{"f", T::set}}, {"f"}},
        {"diffgen", {D0, DP}, {{"A", T::set}, {"order", T::number}}, {"A"}},
        {"dcf0",
         {D0},
         {{"L", T::set}, {"M", T::set}, {"k", T::set}, {"order", T::number}, {"bound", T::number}, {"rac", T::flag}},
         {"L", "M", "k"}},
        {"amalgamate",
         {D0, DP},
         {{"L", T::set}, {"M", T::set}, {"k", T::set}, {"dL", T::set}, {"dM", T::set}, {"bound", T::number}},
         {"L", "M", "k"}},
        {"scf_dcl", {FI, SC}, {{"A", T::set}, {"iterations", T::number}, {"bound", T::number}}, {"A"}},
        {"scf_indep",
         {FI, SC},
         {{"A", T::set}, {"B", T::set}, {"C", T::set}, {"bound", T::number}, {"iterations", T::number}},
         {"A", "B", "C"}},
        {"dcfp_dcl",
         {DP},
         {{"A", T::set}, {"iterations", T::number}, {"bound", T::number}, {"strict", T::flag}},
         {"A"}},
        {"dcfp_indep",
         {DP},
         {{"A", T::set}, {"B", T::set}, {"C", T::set}, {"bound", T::number}, {"iterations", T::number}},
         {"A", "B", "C"}},
        {"bm", {SC, DP, FI}, {{"pool", T::set}, {"bound", T::number}, {"sets", T::number}}, {"pool"}},
        {"axioms",
         {TargetType::forests},
         {{"axiom", T::word}, {"vertices", T::number}, {"sets", T::number}},
         {}},
    };
    return kinds;
}

const KindInfo* find_kind(std::string_view name)
{
    for (const auto& k : query_kinds())
        if (k.name == name) return &k;
    return nullptr;
}

namespace {

class Parser {
public:
    explicit Parser(std::string_view src) : src_(src) {}

    Script run()
    {
        Script script;
        for (;;) {
            skip();
            if (at_end()) break;
            int line = line_, col = col_;
            std::string word = peek_word();
            if (word == "structure")
                script.statements.push_back(parse_forest());
            else if (word == "field")
                script.statements.push_back(parse_field());
            else if (word == "theory")
                script.statements.push_back(parse_theory());
            else if (word == "query")
                script.statements.push_back(parse_query());
            else
                fail(line, col, word.empty() ? "unexpected character" : "unexpected '" + word + "'",
                     {"structure", "field", "theory", "query"});
        }
        return script;
    }

private:
    std::string_view src_;
    std::size_t pos_ = 0;
    int line_ = 1, col_ = 1;
    std::map<std::string, TargetType> names_;

    [[noreturn]] void fail(int line, int col, const std::string& msg, std::vector<std::string> expected = {})
    {
        throw ParseError(line, col, msg, std::move(expected));
    }
    [[noreturn]] void fail_here(const std::string& msg, std::vector<std::string> expected = {})
    {
        skip();
        fail(line_, col_, msg, std::move(expected));
    }

    bool at_end() const { return pos_ >= src_.size(); }
    char cur() const { return at_end() ? '\0' : src_[pos_]; }

    void advance()
    {
        if (cur() == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    void skip()
    {
        while (!at_end()) {
            if (std::isspace(static_cast<unsigned char>(cur())))
                advance();
            else if (cur() == '#') {
                while (!at_end() && cur() != '\n') advance();
            } else
                break;
        }
    }

    std::string peek_word()
    {
        std::size_t p = pos_;
        while (p < src_.size() && ident_char(src_[p])) ++p;
        return std::string(src_.substr(pos_, p - pos_));
    }

    std::string describe_here()
    {
        if (at_end()) return "end of input";
        std::string w = peek_word();
        if (!w.empty()) return "'" + w + "'";
        return std::string("'") + cur() + "'";
    }

    std::string word(const std::string& what)
    {
        skip();
        std::string w = peek_word();
        if (w.empty()) fail_here("unexpected " + describe_here(), {what});
        for (std::size_t i = 0; i < w.size(); ++i) advance();
        return w;
    }

    void keyword(const std::string& kw)
    {
        skip();
        if (peek_word() != kw) fail_here("unexpected " + describe_here(), {"'" + kw + "'"});
        for (std::size_t i = 0; i < kw.size(); ++i) advance();
    }

    void punct(char c)
    {
        skip();
        if (cur() != c) fail_here("unexpected " + describe_here(), {std::string("'") + c + "'"});
        advance();
    }

    bool try_punct(char c)
    {
        skip();
        if (cur() != c) return false;
        advance();
        return true;
    }

    int integer(const std::string& what)
    {
        skip();
        int line = line_, col = col_;
        std::string w = peek_word();
        if (w.empty() || !std::all_of(w.begin(), w.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
            fail(line, col, "unexpected " + describe_here(), {what});
        if (w.size() > 9) fail(line, col, "integer out of range");
        for (std::size_t i = 0; i < w.size(); ++i) advance();
        return std::stoi(w);
    }

    void validate(const Decl& d)
    {
        try {
            build_target(d);
        } catch (const std::exception& e) {
            fail(d.line, d.col, e.what());
        }
    }

    void declare(const std::string& name, TargetType t, int line, int col)
    {
        if (name == "forests") fail(line, col, "'forests' is reserved");
        if (!names_.emplace(name, t).second) fail(line, col, "duplicate declaration of '" + name + "'");
    }

    std::vector<std::string> word_list(const std::string& what)
    {
        std::vector<std::string> out;
        for (;;) {
            skip();
            if (cur() == ';') break;
            out.push_back(word(what));
        }
        return out;
    }

    std::vector<std::pair<std::string, int>> pair_list()
    {
        std::vector<std::pair<std::string, int>> out;
        skip();
        if (cur() == ';') return out;
        do {
            std::string n = word("name");
            int level = 0;
            if (try_punct(':')) level = integer("integer");
            out.emplace_back(n, level);
        } while (try_punct(','));
        return out;
    }

    Decl parse_forest()
    {
        Decl d;
        d.kind = Decl::Kind::forest;
        d.line = line_;
        d.col = col_;
        keyword("structure");
        keyword("forest");
        skip();
        int nl = line_, nc = col_;
        d.name = word("name");
        punct('{');
        keyword("vertices");
        punct(':');
        d.vertices = word_list("vertex label");
        punct(';');
        std::set<std::string> seen;
        for (const auto& v : d.vertices)
            if (!seen.insert(v).second) fail(nl, nc, "duplicate vertex '" + v + "'");
        keyword("edges");
        punct(':');
        skip();
        if (cur() != ';') {
            do {
                skip();
                int el = line_, ec = col_;
                std::string a = word("vertex label");
                punct('-');
                std::string b = word("vertex label");
                for (const auto& v : {a, b})
                    if (!seen.count(v)) fail(el, ec, "edge mentions undeclared vertex '" + v + "'");
                d.edges.emplace_back(a, b);
            } while (try_punct(','));
        }
        punct(';');
        punct('}');
        validate(d);
        declare(d.name, TargetType::forest, nl, nc);
        return d;
    }

    Decl parse_field()
    {
        Decl d;
        d.kind = Decl::Kind::field;
        d.line = line_;
        d.col = col_;
        keyword("field");
        skip();
        int nl = line_, nc = col_;
        d.name = word("name");
        punct('{');
        keyword("char");
        punct(':');
        d.characteristic = static_cast<unsigned>(integer("characteristic"));
        punct(';');
        keyword("vars");
        punct(':');
        d.vars = word_list("variable");
        punct(';');
        punct('}');
        validate(d);
        declare(d.name, TargetType::field, nl, nc);
        return d;
    }

    Decl parse_theory()
    {
        Decl d;
        d.kind = Decl::Kind::theory;
        d.line = line_;
        d.col = col_;
        keyword("theory");
        skip();
        int kl = line_, kc = col_;
        d.theory = word("theory kind");
        TargetType t;
        if (d.theory == "dcf0")
            t = TargetType::dcf0;
        else if (d.theory == "scf")
            t = TargetType::scf;
        else if (d.theory == "dcfp")
            t = TargetType::dcfp;
        else
            fail(kl, kc, "unknown theory '" + d.theory + "'", {"dcf0", "scf", "dcfp"});
        skip();
        int nl = line_, nc = col_;
        d.name = cur() == '{' ? d.theory : word("name");
        punct('{');
        std::set<std::string> fields;
        for (;;) {
            skip();
            if (cur() == '}') break;
            int il = line_, ic = col_;
            std::string item = peek_word();
            std::vector<std::string> allowed =
                t == TargetType::scf ? std::vector<std::string>{"char", "vars"}
                                     : std::vector<std::string>{"char", "chains", "constants"};
            if (std::find(allowed.begin(), allowed.end(), item) == allowed.end()) {
                std::vector<std::string> exp;
                for (const auto& a : allowed) exp.push_back("'" + a + "'");
                exp.push_back("'}'");
                fail(il, ic, "unexpected " + describe_here(), exp);
            }
            if (!fields.insert(item).second) fail(il, ic, "duplicate item '" + item + "'");
            keyword(item);
            punct(':');
            if (item == "char")
                d.characteristic = static_cast<unsigned>(integer("characteristic"));
            else if (item == "vars")
                d.vars = word_list("variable");
            else if (item == "chains")
                d.chains = pair_list();
            else
                d.constants = pair_list();
            punct(';');
        }
        punct('}');
        if (t == TargetType::scf && (!d.characteristic || *d.characteristic == 0))
            fail(nl, nc, "scf theory needs a positive characteristic");
        if (t == TargetType::dcfp && (!d.characteristic || *d.characteristic == 0))
            fail(nl, nc, "dcfp theory needs a positive characteristic");
        if (t == TargetType::dcf0 && d.characteristic && *d.characteristic != 0)
            fail(nl, nc, "dcf0 theory has characteristic 0");
        if (t != TargetType::scf && d.chains.empty()) fail(nl, nc, "theory needs at least one chain");
        validate(d);
        declare(d.name, t, nl, nc);
        return d;
    }

    Value set_value()
    {
        Value v;
        v.type = Value::Type::set;
        int line = line_, col = col_;
        punct('{');
        std::string item;
        std::vector<std::string> raw;
        int depth = 0;
        for (;;) {
            if (at_end()) fail(line, col, "unterminated set", {"'}'"});
            char c = cur();
            if (depth == 0 && (c == '}' || c == ',')) {
                raw.push_back(item);
                item.clear();
                advance();
                if (c == '}') break;
                continue;
            }
            if (c == '(' || c == '[' || c == '{') ++depth;
            if (c == ')' || c == ']') --depth;
            if (c == '\n' || c == ';') fail(line, col, "unterminated set", {"'}'"});
            item += c;
            advance();
        }
        for (std::size_t i = 0; i < raw.size(); ++i) {
            const std::string& r = raw[i];
            bool plain = std::all_of(r.begin(), r.end(), [](char c) {
                return ident_char(c) || std::isspace(static_cast<unsigned char>(c));
            });
            std::vector<std::string> parts;
            if (plain) {
                std::string w;
                for (char c : r + " ") {
                    if (std::isspace(static_cast<unsigned char>(c))) {
                        if (!w.empty()) parts.push_back(w);
                        w.clear();
                    } else {
                        w += c;
                    }
                }
            } else {
                std::string w;
                for (char c : r)
                    if (!std::isspace(static_cast<unsigned char>(c))) w += c;
                parts.push_back(w);
            }
            if (parts.empty()) {
                if (raw.size() == 1) continue;  // {}
                fail(line, col, "empty set member");
            }
            for (auto& p : parts) v.items.push_back(p);
        }
        return v;
    }

    Query parse_query()
    {
        Query q;
        q.line = line_;
        q.col = col_;
        keyword("query");
        skip();
        int kl = line_, kc = col_;
        q.kind = word("query kind");
        const KindInfo* info = find_kind(q.kind);
        if (!info) {
            std::vector<std::string> exp;
            for (const auto& k : query_kinds()) exp.push_back(k.name);
            fail(kl, kc, "unknown query kind '" + q.kind + "'", exp);
        }
        skip();
        int tl = line_, tc = col_;
        q.target = word("target name");
        TargetType tt;
        if (q.target == "forests") {
            tt = TargetType::forests;
        } else {
            auto it = names_.find(q.target);
            if (it == names_.end()) {
                std::vector<std::string> exp;
                for (const auto& [n, t] : names_) exp.push_back(n);
                fail(tl, tc, "undeclared target '" + q.target + "'", exp);
            }
            tt = it->second;
        }
        if (std::find(info->targets.begin(), info->targets.end(), tt) == info->targets.end())
            fail(tl, tc, "query '" + q.kind + "' cannot act on '" + q.target + "'");
        std::set<std::string> seen;
        for (;;) {
            skip();
            if (cur() == ';') {
                advance();
                break;
            }
            int pl = line_, pc = col_;
            std::vector<std::string> exp;
            for (const auto& [k, t] : info->keys) exp.push_back(k);
            exp.push_back("';'");
            if (at_end()) fail(pl, pc, "unexpected end of input", exp);
            std::string key = peek_word();
            auto kit = std::find_if(info->keys.begin(), info->keys.end(), [&](const auto& kv) { return kv.first == key; });
            if (key.empty() || kit == info->keys.end()) fail(pl, pc, "unexpected " + describe_here(), exp);
            if (!seen.insert(key).second) fail(pl, pc, "duplicate parameter '" + key + "'");
            for (std::size_t i = 0; i < key.size(); ++i) advance();
            Param p;
            p.key = key;
            p.value.type = kit->second;
            switch (kit->second) {
            case Value::Type::flag:
                break;
            case Value::Type::set:
                punct('=');
                skip();
                p.value = set_value();
                break;
            case Value::Type::word:
                punct('=');
                p.value.text = word("word");
                break;
            case Value::Type::number:
                punct('=');
                p.value.text = std::to_string(integer("integer"));
                break;
            }
            q.params.push_back(std::move(p));
        }
        for (const auto& r : info->required)
            if (!seen.count(r)) fail(q.line, q.col, "query '" + q.kind + "' is missing parameter '" + r + "'");
        return q;
    }
};

}  // namespace

Script parse(std::string_view source) { return Parser(source).run(); }

}  // namespace indep::cli
