#include "indep/pseudoplane/forest.hpp"

#include <algorithm>
#include <cctype>

namespace indep::pseudoplane {

bool valid_label(std::string_view s)
{
    if (s.empty()) return false;
    return std::all_of(s.begin(), s.end(), [](char ch) {
        return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_' || ch == '#';
    });
}

int Forest::add_vertex(std::string label)
{
    if (!valid_label(label)) throw ForestError("invalid vertex label '" + label + "'");
    if (find(label)) throw ForestError("duplicate vertex '" + label + "'");
    labels_.push_back(std::move(label));
    adj_.emplace_back();
    component_.push_back(size() - 1);
    return size() - 1;
}

int Forest::root(int v) const
{
    while (component_[v] != v) {
        component_[v] = component_[component_[v]];
        v = component_[v];
    }
    return v;
}

void Forest::add_edge(int u, int v)
{
    if (u < 0 || v < 0 || u >= size() || v >= size()) throw DomainError("edge endpoint out of range");
    if (u == v) throw ForestError("loop at '" + labels_[u] + "'");
    if (adjacent(u, v)) throw ForestError("duplicate edge " + labels_[u] + "-" + labels_[v]);
    const int ru = root(u), rv = root(v);
    if (ru == rv) throw ForestError("edge " + labels_[u] + "-" + labels_[v] + " closes a cycle");
    component_[ru] = rv;
    adj_[u].insert(std::lower_bound(adj_[u].begin(), adj_[u].end(), v), v);
    adj_[v].insert(std::lower_bound(adj_[v].begin(), adj_[v].end(), u), u);
}

void Forest::add_edge(std::string_view u, std::string_view v) { add_edge(index(u), index(v)); }

std::optional<int> Forest::find(std::string_view label) const
{
    for (int i = 0; i < size(); ++i)
        if (labels_[i] == label) return i;
    return std::nullopt;
}

int Forest::index(std::string_view label) const
{
    if (auto i = find(label)) return *i;
    throw DomainError("unknown vertex '" + std::string(label) + "'");
}

VertexSet Forest::indices(const std::vector<std::string>& labels) const
{
    VertexSet out;
    for (const auto& l : labels) out.insert(index(l));
    return out;
}

bool Forest::adjacent(int u, int v) const
{
    const auto& a = adj_.at(u);
    return std::binary_search(a.begin(), a.end(), v);
}

std::vector<std::pair<int, int>> Forest::edges() const
{
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < size(); ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

std::size_t Forest::edge_count() const
{
    std::size_t n = 0;
    for (const auto& a : adj_) n += a.size();
    return n / 2;
}

std::string Forest::to_text() const
{
    std::string out = "vertices:";
    for (const auto& l : labels_) out += " " + l;
    out += "; edges:";
    bool first = true;
    for (auto [u, v] : edges()) {
        out += (first ? " " : ", ") + labels_[u] + "-" + labels_[v];
        first = false;
    }
    return out + ";";
}

std::string Forest::render(const VertexSet& s) const
{
    std::string out = "{";
    bool first = true;
    for (int v : s) {
        if (!first) out += ",";
        out += labels_.at(v);
        first = false;
    }
    return out + "}";
}

namespace {

struct Cursor {
    std::string_view text;
    std::size_t pos = 0;

    void skip()
    {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool eat(char ch)
    {
        skip();
        if (pos < text.size() && text[pos] == ch) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char ch)
    {
        if (!eat(ch))
            throw ForestError(std::string("expected '") + ch + "' at offset " + std::to_string(pos));
    }
    std::string word()
    {
        skip();
        const std::size_t start = pos;
        while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_' ||
                                     text[pos] == '#'))
            ++pos;
        return std::string(text.substr(start, pos - start));
    }
    bool done()
    {
        skip();
        return pos >= text.size();
    }
};

}  // namespace

Forest Forest::parse(std::string_view text)
{
    Forest f;
    Cursor cur{text};
    bool seen_vertices = false;
    while (!cur.done()) {
        const std::string key = cur.word();
        cur.expect(':');
        if (key == "vertices") {
            seen_vertices = true;
            while (!cur.eat(';')) {
                const std::string l = cur.word();
                if (l.empty()) throw ForestError("expected vertex label at offset " + std::to_string(cur.pos));
                f.add_vertex(l);
            }
        } else if (key == "edges") {
            if (!seen_vertices) throw ForestError("edges declared before vertices");
            if (cur.eat(';')) continue;
            do {
                const std::string u = cur.word();
                cur.expect('-');
                const std::string v = cur.word();
                f.add_edge(u, v);
            } while (cur.eat(','));
            cur.expect(';');
        } else {
            throw ForestError("unknown forest field '" + key + "'");
        }
    }
    return f;
}

}  // namespace indep::pseudoplane
