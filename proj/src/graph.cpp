#include "totbond/graph.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace totbond {

namespace {

// Adjacency rows are O(n^2) bits; keep file input at desk scale.
constexpr int kMaxParsedVertices = 4096;

} // namespace

Edge make_edge(int u, int v) {
    if (u < 0 || v < 0) throw BadParam("edge endpoints must be non-negative");
    if (u == v) throw BadParam("self-loop (" + std::to_string(u) + ", " + std::to_string(v) + ")");
    return {std::min(u, v), std::max(u, v)};
}

EdgeSet EdgeSet::from_pairs(std::vector<Edge> pairs) {
    EdgeSet s;
    s.pairs_.reserve(pairs.size());
    for (const Edge& e : pairs) s.pairs_.push_back(make_edge(e.first, e.second));
    std::sort(s.pairs_.begin(), s.pairs_.end());
    auto dup = std::adjacent_find(s.pairs_.begin(), s.pairs_.end());
    if (dup != s.pairs_.end())
        throw BadParam("duplicate edge (" + std::to_string(dup->first) + ", " +
                       std::to_string(dup->second) + ")");
    return s;
}

bool EdgeSet::contains(int u, int v) const {
    Edge e = make_edge(u, v);
    return std::binary_search(pairs_.begin(), pairs_.end(), e);
}

Graph::Graph(int n, EdgeSet edges) : n_(n), edges_(std::move(edges)) {
    if (n_ < 1) throw BadParam("graph needs at least one vertex");
    adj_.assign(n_, Bitset(n_));
    for (const auto& [u, v] : edges_) {
        if (v >= n_) throw BadParam("edge endpoint " + std::to_string(v) + " out of range");
        adj_[u].set(v);
        adj_[v].set(u);
    }
}

bool Graph::has_edge(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) return false;
    return adj_[u].test(v);
}

bool Graph::has_isolated_vertex() const {
    for (int v = 0; v < n_; ++v)
        if (adj_[v].none()) return true;
    return false;
}

Graph remove_edges(const Graph& g, const EdgeSet& s) {
    for (const auto& [u, v] : s)
        if (!g.has_edge(u, v)) throw MissingEdge(u, v);
    std::vector<Edge> kept;
    kept.reserve(g.edge_count() - s.size());
    for (const Edge& e : g.edges())
        if (!s.contains(e.first, e.second)) kept.push_back(e);
    return Graph::from_edges(g.n(), std::move(kept));
}

bool is_pendant_edge(const Graph& g, Edge e) {
    if (!g.has_edge(e.first, e.second)) throw MissingEdge(e.first, e.second);
    return g.degree(e.first) == 1 || g.degree(e.second) == 1;
}

std::vector<Component> components(const Graph& g) {
    const int n = g.n();
    Bitset visited(n);
    std::vector<Component> out;
    for (int v = 0; v < n; ++v) {
        if (visited.test(v)) continue;
        Bitset comp(n);
        comp.set(v);
        for (;;) {
            Bitset frontier(n);
            comp.for_each_set([&](int u) { frontier |= g.neighbors(u); });
            frontier.subtract(comp);
            if (frontier.none()) break;
            comp |= frontier;
        }
        visited |= comp;
        std::vector<int> verts = comp.to_vector();
        std::vector<Edge> edges;
        for (int i = 0; i < (int)verts.size(); ++i) {
            g.neighbors(verts[i]).for_each_set([&](int w) {
                if (w > verts[i]) {
                    auto it = std::lower_bound(verts.begin(), verts.end(), w);
                    edges.emplace_back(i, (int)(it - verts.begin()));
                }
            });
        }
        out.push_back(Component{std::move(verts),
                                Graph::from_edges((int)comp.count(), std::move(edges))});
    }
    return out;
}

namespace {

int parse_int_token(const std::string& tok, int line) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw ParseError(line, "expected a non-negative integer, got '" + tok + "'");
    return value;
}

} // namespace

Graph parse_edge_list(std::string_view text) {
    std::vector<std::string> tokens;
    std::vector<std::vector<std::string>> lines; // significant lines only
    std::vector<int> line_numbers;

    int lineno = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string_view raw = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos
                                                                              : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++lineno;
        if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
        std::size_t hash = raw.find('#');
        if (hash != std::string_view::npos) raw = raw.substr(0, hash);

        std::vector<std::string> toks;
        std::istringstream iss{std::string(raw)};
        std::string t;
        while (iss >> t) toks.push_back(t);
        if (!toks.empty()) {
            lines.push_back(std::move(toks));
            line_numbers.push_back(lineno);
        }
    }

    if (lines.empty()) throw ParseError(1, "missing vertex count");
    if (lines[0].size() != 1)
        throw ParseError(line_numbers[0], "first line must hold the vertex count only");
    int n = parse_int_token(lines[0][0], line_numbers[0]);
    if (n < 1) throw ParseError(line_numbers[0], "vertex count must be at least 1");
    if (n > kMaxParsedVertices)
        throw ParseError(line_numbers[0], "vertex count exceeds supported limit of " +
                                              std::to_string(kMaxParsedVertices));

    std::vector<Edge> edges;
    std::vector<Bitset> seen(n, Bitset(n));
    for (std::size_t i = 1; i < lines.size(); ++i) {
        int line = line_numbers[i];
        if (lines[i].size() != 2) throw ParseError(line, "expected 'u v'");
        int u = parse_int_token(lines[i][0], line);
        int v = parse_int_token(lines[i][1], line);
        if (u >= n) throw InvalidVertexIndex(line, u);
        if (v >= n) throw InvalidVertexIndex(line, v);
        if (u == v) throw ParseError(line, "self-loop at vertex " + std::to_string(u));
        Edge e = make_edge(u, v);
        if (seen[e.first].test(e.second))
            throw ParseError(line, "duplicate edge (" + std::to_string(u) + ", " +
                                       std::to_string(v) + ")");
        seen[e.first].set(e.second);
        edges.push_back(e);
    }
    return Graph::from_edges(n, std::move(edges));
}

std::string serialize_edge_list(const Graph& g) {
    std::string out = std::to_string(g.n());
    out.push_back('\n');
    for (const auto& [u, v] : g.edges()) {
        out += std::to_string(u);
        out.push_back(' ');
        out += std::to_string(v);
        out.push_back('\n');
    }
    return out;
}

} // namespace totbond
