#ifndef TOTBOND_DOMINATION_HPP
#define TOTBOND_DOMINATION_HPP

#include <vector>

#include "totbond/graph.hpp"

namespace totbond {

// gamma_t together with one witness set of that size. The witness is the
// lexicographically least minimum total dominating set.
struct DominationCertificate {
    int gamma_t = 0;
    std::vector<int> witness;

    bool operator==(const DominationCertificate&) const = default;
};

struct SolverOptions {
    // Largest component the exhaustive search will accept (hard cap 64).
    int max_component_vertices = 24;
};

// True iff every vertex of g has a neighbor in s.
bool is_td_set(const Graph& g, const std::vector<int>& s);

// True iff s is a TD-set and no proper subset is. Throws NotATDSet otherwise.
bool is_minimal_td_set(const Graph& g, const std::vector<int>& s);

// Exact minimum via per-component subset search of increasing cardinality.
DominationCertificate gamma_t(const Graph& g, const SolverOptions& opts = {});

// Size of the TD-set built by repeatedly taking the vertex covering the most
// still-undominated vertices (ties to the lowest index). Upper bound seed.
int greedy_td_upper_bound(const Graph& g);

namespace detail {

// Core used by both gamma_t and the bondage inner loop. adj describes a
// spanning subgraph on n vertices with no isolated vertex.
int gamma_t_on_masks(const std::vector<Bitset>& adj, int n, int max_component_vertices,
                     std::vector<int>* witness_out);

bool is_connected(const std::vector<Bitset>& adj, int n);

} // namespace detail

} // namespace totbond

#endif
