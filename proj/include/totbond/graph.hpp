#ifndef TOTBOND_GRAPH_HPP
#define TOTBOND_GRAPH_HPP

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "totbond/bitset.hpp"
#include "totbond/errors.hpp"

namespace totbond {

// Undirected edge, stored normalized as (min, max).
using Edge = std::pair<int, int>;

// Normalize an endpoint pair; rejects loops and negative indices.
Edge make_edge(int u, int v);

// Canonical duplicate-free edge collection, sorted lexicographically.
class EdgeSet {
public:
    EdgeSet() = default;

    // Normalizes, sorts, rejects self-loops and duplicates.
    static EdgeSet from_pairs(std::vector<Edge> pairs);

    const std::vector<Edge>& pairs() const { return pairs_; }
    int size() const { return (int)pairs_.size(); }
    bool empty() const { return pairs_.empty(); }
    bool contains(int u, int v) const;

    auto begin() const { return pairs_.begin(); }
    auto end() const { return pairs_.end(); }

    bool operator==(const EdgeSet&) const = default;

private:
    std::vector<Edge> pairs_;
};

// Immutable finite simple graph on vertices 0..n-1.
class Graph {
public:
    Graph(int n, EdgeSet edges);

    static Graph from_edges(int n, std::vector<Edge> pairs) {
        return Graph(n, EdgeSet::from_pairs(std::move(pairs)));
    }

    int n() const { return n_; }
    int edge_count() const { return edges_.size(); }
    const EdgeSet& edges() const { return edges_; }

    const Bitset& neighbors(int v) const { return adj_[v]; }
    const std::vector<Bitset>& adjacency() const { return adj_; }

    int degree(int v) const { return adj_[v].count(); }
    int total_degree() const { return 2 * edge_count(); }
    bool has_edge(int u, int v) const;
    bool has_isolated_vertex() const;

private:
    int n_;
    EdgeSet edges_;
    std::vector<Bitset> adj_;
};

// New graph with the edges of s removed; every edge of s must exist.
Graph remove_edges(const Graph& g, const EdgeSet& s);

// True iff either endpoint of e has degree 1. The edge must exist.
bool is_pendant_edge(const Graph& g, Edge e);

struct Component {
    std::vector<int> vertices; // ascending original indices
    Graph graph;               // induced subgraph, reindexed by position
};

// Connected components ordered by smallest contained vertex.
std::vector<Component> components(const Graph& g);

// Text format: first significant line is the vertex count, then one "u v"
// per line. '#' starts a comment, blank lines are skipped, CRLF accepted.
Graph parse_edge_list(std::string_view text);
std::string serialize_edge_list(const Graph& g);

} // namespace totbond

#endif
