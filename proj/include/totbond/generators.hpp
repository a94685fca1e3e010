#ifndef TOTBOND_GENERATORS_HPP
#define TOTBOND_GENERATORS_HPP

#include <map>
#include <string>

#include "totbond/graph.hpp"

namespace totbond {

Graph path(int n);   // n >= 2, vertices in path order
Graph cycle(int n);  // n >= 3
Graph complete(int n); // n >= 1
// Hub is vertex 0 with degree n, rim is the cycle 1..n. n >= 3.
Graph wheel(int n);
// First part 0..a-1, second part a..a+b-1. 2 <= a <= b.
Graph complete_bipartite(int a, int b);

// Identify vertex hv of h with vertex gv of g. g keeps its indices; the
// remaining vertices of h are appended in order.
Graph merge(const Graph& g, int gv, const Graph& h, int hv);

// Graph plus a name -> vertex map for the distinguished vertices.
struct LabeledGraph {
    Graph graph;
    std::map<std::string, int> labels;
};

// The 6-vertex tree: spine v1..v5 with the extra leaf u2 on v3.
LabeledGraph gadget_T();
// m copies of T sharing the spine endpoint v1, labeled x. m >= 1.
LabeledGraph gadget_Tm(int m);
// gadget_Tm(m) with K_n minus the edge aa' attached at a' = x.
// m >= 1, n >= 3 (n = 2 would leave a isolated).
LabeledGraph gadget_TmN(int m, int n);

// Graph whose k-total bondage number equals b. k >= 1, b >= ceil(k/2).
LabeledGraph construct_G_b_k(int k, int b);
// Graph with B_t^{k+1} = B_t^k + b. k >= 1, b >= 2.
LabeledGraph corollary_graph(int k, int b);

enum class Family {
    Path,
    Cycle,
    Wheel,
    Complete,
    CompleteBipartite,
    GadgetT,
    Tm,
    TmN,
    Gbk,
    CorollaryGraph,
};

// A generator instance: family plus its parameters.
struct ClassSpec {
    Family family = Family::Path;
    int n = -1;
    int a = -1;
    int b = -1;
    int k = -1;
    int m = -1;
};

// Family name used by the CLI: path, cycle, wheel, complete, bipartite,
// t, tm, tmn, gbk, corollary. Throws BadParam for anything else.
Family parse_family(const std::string& name);
std::string family_name(Family f);

// Human-readable instance label, e.g. "path(n=8)" or "gbk(k=7,b=4)".
std::string describe(const ClassSpec& spec);

// Validates parameters and builds the instance.
LabeledGraph build_class(const ClassSpec& spec);

} // namespace totbond

#endif
