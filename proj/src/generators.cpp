#include "totbond/generators.hpp"

#include <algorithm>

namespace totbond {

Graph path(int n) {
    if (n < 2) throw BadParam("path needs n >= 2");
    std::vector<Edge> e;
    e.reserve(n - 1);
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph::from_edges(n, std::move(e));
}

Graph cycle(int n) {
    if (n < 3) throw BadParam("cycle needs n >= 3");
    std::vector<Edge> e;
    e.reserve(n);
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    e.emplace_back(0, n - 1);
    return Graph::from_edges(n, std::move(e));
}

Graph complete(int n) {
    if (n < 1) throw BadParam("complete graph needs n >= 1");
    std::vector<Edge> e;
    e.reserve(n * (n - 1) / 2);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return Graph::from_edges(n, std::move(e));
}

Graph wheel(int n) {
    if (n < 3) throw BadParam("wheel needs rim length n >= 3");
    std::vector<Edge> e;
    e.reserve(2 * n);
    for (int i = 1; i <= n; ++i) e.emplace_back(0, i);
    for (int i = 1; i < n; ++i) e.emplace_back(i, i + 1);
    e.emplace_back(1, n);
    return Graph::from_edges(n + 1, std::move(e));
}

Graph complete_bipartite(int a, int b) {
    if (a < 2 || b < a) throw BadParam("complete bipartite needs 2 <= a <= b");
    std::vector<Edge> e;
    e.reserve(a * b);
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) e.emplace_back(i, a + j);
    return Graph::from_edges(a + b, std::move(e));
}

Graph merge(const Graph& g, int gv, const Graph& h, int hv) {
    if (gv < 0 || gv >= g.n()) throw BadParam("merge vertex out of range in first graph");
    if (hv < 0 || hv >= h.n()) throw BadParam("merge vertex out of range in second graph");
    std::vector<int> remap(h.n());
    int next = g.n();
    for (int w = 0; w < h.n(); ++w) remap[w] = w == hv ? gv : next++;
    std::vector<Edge> e(g.edges().pairs());
    e.reserve(e.size() + h.edge_count());
    for (const auto& [u, v] : h.edges()) e.push_back(make_edge(remap[u], remap[v]));
    return Graph::from_edges(g.n() + h.n() - 1, std::move(e));
}

namespace {

// K_n minus the edge (0, 1); vertex 0 is a, vertex 1 is a'.
Graph complete_minus_edge(int n) {
    if (n < 3) throw BadParam("complete-minus-edge needs n >= 3");
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (!(i == 0 && j == 1)) e.emplace_back(i, j);
    return Graph::from_edges(n, std::move(e));
}

// gadget_Tm allowing the degenerate m = 0 (the single shared vertex x).
LabeledGraph tm_impl(int m) {
    Graph g = Graph::from_edges(1, {});
    std::map<std::string, int> labels{{"x", 0}};
    Graph t = gadget_T().graph;
    for (int i = 1; i <= m; ++i) {
        int base = g.n(); // copy i's vertices v2..v5, u2 land at base..base+4
        g = merge(g, 0, t, 0);
        std::string p = "t" + std::to_string(i) + ".";
        labels[p + "v2"] = base;
        labels[p + "v3"] = base + 1;
        labels[p + "v4"] = base + 2;
        labels[p + "v5"] = base + 3;
        labels[p + "u2"] = base + 4;
    }
    return {std::move(g), std::move(labels)};
}

// gadget_TmN allowing m = 0, where the result is just K_n minus an edge.
LabeledGraph tmn_impl(int m, int n) {
    if (n < 3) throw BadParam("tmn needs n >= 3 (n = 2 would leave vertex a isolated)");
    LabeledGraph tm = tm_impl(m);
    int base = tm.graph.n(); // appended clique vertices: a, then c1..c_{n-2}
    Graph g = merge(tm.graph, 0, complete_minus_edge(n), 1);
    auto labels = std::move(tm.labels);
    labels["a'"] = 0;
    labels["a"] = base;
    for (int j = 1; j <= n - 2; ++j) labels["c" + std::to_string(j)] = base + j;
    return {std::move(g), std::move(labels)};
}

// Attach a path endpoint to vertex x = 0; appended vertices p2, p3, ...
LabeledGraph attach_path_at_end(LabeledGraph g, int len) {
    int base = g.graph.n();
    Graph out = merge(g.graph, 0, path(len), 0);
    for (int j = 2; j <= len; ++j) g.labels["p" + std::to_string(j)] = base + j - 2;
    return {std::move(out), std::move(g.labels)};
}

// Attach the middle of a 5-path to vertex x = 0; appended q1, q2, q4, q5.
LabeledGraph attach_p5_at_middle(LabeledGraph g) {
    int base = g.graph.n();
    Graph out = merge(g.graph, 0, path(5), 2);
    g.labels["q1"] = base;
    g.labels["q2"] = base + 1;
    g.labels["q4"] = base + 2;
    g.labels["q5"] = base + 3;
    return {std::move(out), std::move(g.labels)};
}

// Attach K_4 minus an edge by its a' to vertex x = 0; appended a2, d1, d2.
LabeledGraph attach_k4e(LabeledGraph g) {
    int base = g.graph.n();
    Graph out = merge(g.graph, 0, complete_minus_edge(4), 1);
    g.labels["a2"] = base;
    g.labels["d1"] = base + 1;
    g.labels["d2"] = base + 2;
    return {std::move(out), std::move(g.labels)};
}

} // namespace

LabeledGraph gadget_T() {
    Graph g = Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {2, 5}});
    std::map<std::string, int> labels{{"v1", 0}, {"v2", 1}, {"v3", 2}, {"v4", 3},
                                      {"v5", 4}, {"u1", 2}, {"u2", 5}};
    return {std::move(g), std::move(labels)};
}

LabeledGraph gadget_Tm(int m) {
    if (m < 1) throw BadParam("tm needs m >= 1");
    return tm_impl(m);
}

LabeledGraph gadget_TmN(int m, int n) {
    if (m < 1) throw BadParam("tmn needs m >= 1");
    return tmn_impl(m, n);
}

LabeledGraph construct_G_b_k(int k, int b) {
    if (k < 1) throw BadParam("gbk needs k >= 1");
    const int m = (k - 1) / 2;
    const int r = b - m;
    if (r < 1)
        throw BadParam("gbk needs b >= " + std::to_string(m + 1) + " for k = " +
                       std::to_string(k));
    if (k % 2 == 1) {
        if (r == 1) return attach_path_at_end(tmn_impl(m, 5), 3);
        if (r == 2) return attach_k4e(tmn_impl(m, 5));
        return tmn_impl(m, r + 1);
    }
    if (r == 1) return tmn_impl(b, 5);
    if (r == 2) return attach_p5_at_middle(tmn_impl(m, 5));
    if (r == 3) return attach_k4e(attach_path_at_end(tmn_impl(m, 5), 3));
    return attach_path_at_end(tmn_impl(m, r), 3);
}

LabeledGraph corollary_graph(int k, int b) {
    if (k < 1) throw BadParam("corollary needs k >= 1");
    if (b < 2) throw BadParam("corollary needs b >= 2");
    const int m = k / 2;
    if (k % 2 == 0) return tmn_impl(m, b + 1);
    return attach_path_at_end(tmn_impl(m, b + 1), 3);
}

Family parse_family(const std::string& name) {
    if (name == "path") return Family::Path;
    if (name == "cycle") return Family::Cycle;
    if (name == "wheel") return Family::Wheel;
    if (name == "complete") return Family::Complete;
    if (name == "bipartite") return Family::CompleteBipartite;
    if (name == "t") return Family::GadgetT;
    if (name == "tm") return Family::Tm;
    if (name == "tmn") return Family::TmN;
    if (name == "gbk") return Family::Gbk;
    if (name == "corollary") return Family::CorollaryGraph;
    throw BadParam("unknown family '" + name + "'");
}

std::string family_name(Family f) {
    switch (f) {
    case Family::Path: return "path";
    case Family::Cycle: return "cycle";
    case Family::Wheel: return "wheel";
    case Family::Complete: return "complete";
    case Family::CompleteBipartite: return "bipartite";
    case Family::GadgetT: return "t";
    case Family::Tm: return "tm";
    case Family::TmN: return "tmn";
    case Family::Gbk: return "gbk";
    case Family::CorollaryGraph: return "corollary";
    }
    throw BadParam("unknown family");
}

std::string describe(const ClassSpec& spec) {
    std::string s = family_name(spec.family);
    switch (spec.family) {
    case Family::Path:
    case Family::Cycle:
    case Family::Wheel:
    case Family::Complete:
        return s + "(n=" + std::to_string(spec.n) + ")";
    case Family::CompleteBipartite:
        return s + "(a=" + std::to_string(spec.a) + ",b=" + std::to_string(spec.b) + ")";
    case Family::GadgetT:
        return s;
    case Family::Tm:
        return s + "(m=" + std::to_string(spec.m) + ")";
    case Family::TmN:
        return s + "(m=" + std::to_string(spec.m) + ",n=" + std::to_string(spec.n) + ")";
    case Family::Gbk:
    case Family::CorollaryGraph:
        return s + "(k=" + std::to_string(spec.k) + ",b=" + std::to_string(spec.b) + ")";
    }
    throw BadParam("unknown family");
}

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw BadParam(what);
}

} // namespace

LabeledGraph build_class(const ClassSpec& spec) {
    switch (spec.family) {
    case Family::Path:
        require(spec.n >= 2, "path requires n >= 2");
        return {path(spec.n), {}};
    case Family::Cycle:
        require(spec.n >= 3, "cycle requires n >= 3");
        return {cycle(spec.n), {}};
    case Family::Wheel:
        require(spec.n >= 3, "wheel requires n >= 3");
        return {wheel(spec.n), {{"hub", 0}}};
    case Family::Complete:
        require(spec.n >= 1, "complete requires n >= 1");
        return {complete(spec.n), {}};
    case Family::CompleteBipartite:
        require(spec.a >= 2 && spec.b >= spec.a, "bipartite requires 2 <= a <= b");
        return {complete_bipartite(spec.a, spec.b), {}};
    case Family::GadgetT:
        return gadget_T();
    case Family::Tm:
        require(spec.m >= 1, "tm requires m >= 1");
        return gadget_Tm(spec.m);
    case Family::TmN:
        require(spec.m >= 1, "tmn requires m >= 1");
        require(spec.n >= 3, "tmn requires n >= 3");
        return gadget_TmN(spec.m, spec.n);
    case Family::Gbk:
        require(spec.k >= 1, "gbk requires k >= 1");
        require(spec.b >= 1, "gbk requires b >= 1");
        return construct_G_b_k(spec.k, spec.b);
    case Family::CorollaryGraph:
        require(spec.k >= 1, "corollary requires k >= 1");
        require(spec.b >= 2, "corollary requires b >= 2");
        return corollary_graph(spec.k, spec.b);
    }
    throw BadParam("unknown family");
}

} // namespace totbond
