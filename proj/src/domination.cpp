#include "totbond/domination.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

namespace totbond {

bool is_td_set(const Graph& g, const std::vector<int>& s) {
    Bitset dominated(g.n());
    for (int v : s) {
        if (v < 0 || v >= g.n()) throw BadParam("vertex " + std::to_string(v) + " out of range");
        dominated |= g.neighbors(v);
    }
    return dominated == Bitset::full(g.n());
}

bool is_minimal_td_set(const Graph& g, const std::vector<int>& s) {
    if (!is_td_set(g, s)) throw NotATDSet();
    std::vector<int> sorted = s;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        std::vector<int> sub = sorted;
        sub.erase(sub.begin() + (long)i);
        if (is_td_set(g, sub)) return false;
    }
    return true;
}

int greedy_td_upper_bound(const Graph& g) {
    const int n = g.n();
    for (int v = 0; v < n; ++v)
        if (g.degree(v) == 0) throw IsolatedVertex(v);
    Bitset dominated(n);
    int size = 0;
    while (dominated.count() < n) {
        int best = -1, best_gain = -1;
        for (int v = 0; v < n; ++v) {
            Bitset gain = g.neighbors(v);
            gain.subtract(dominated);
            int c = gain.count();
            if (c > best_gain) {
                best_gain = c;
                best = v;
            }
        }
        dominated |= g.neighbors(best);
        ++size;
    }
    return size;
}

namespace detail {

namespace {

// Exhaustive search on one connected piece, vertices relabeled 0..n-1 and
// adjacency packed into single 64-bit words. Tries cardinalities upward, so
// the first success is optimal; candidates are generated in lexicographic
// order, so the first witness at the optimal size is the lexicographically
// least one.
struct LocalSolver {
    const std::vector<std::uint64_t>& adj;
    int n;
    std::uint64_t all;
    // suffix_union[i] = union of adj[i..n-1]; once a needed vertex cannot be
    // covered by any remaining candidate the branch is dead.
    std::vector<std::uint64_t> suffix_union;
    std::vector<int> chosen;
    std::vector<int> best;

    LocalSolver(const std::vector<std::uint64_t>& a, int nn) : adj(a), n(nn) {
        all = nn == 64 ? ~0ull : (1ull << nn) - 1;
        suffix_union.assign(n + 1, 0);
        for (int i = n - 1; i >= 0; --i) suffix_union[i] = suffix_union[i + 1] | adj[i];
    }

    bool extend(int start, int remaining, std::uint64_t dominated) {
        if (remaining == 0) return dominated == all;
        std::uint64_t missing = all & ~dominated;
        if ((missing & ~suffix_union[start]) != 0) return false;
        for (int v = start; v + remaining <= n; ++v) {
            chosen.push_back(v);
            if (extend(v + 1, remaining - 1, dominated | adj[v])) return true;
            chosen.pop_back();
        }
        return false;
    }

    // Returns the optimal size; fills best with the lex-least witness. upper
    // must be achievable (greedy provides one), so some t <= upper succeeds.
    int solve(int upper) {
        for (int t = 2; t <= upper; ++t) {
            chosen.clear();
            if (extend(0, t, 0)) {
                best = chosen;
                return t;
            }
        }
        throw Error("internal: subset search failed below a known upper bound");
    }
};

int greedy_on_masks(const std::vector<std::uint64_t>& adj, int n, std::uint64_t all,
                    std::vector<int>* witness_out) {
    std::uint64_t dominated = 0;
    int size = 0;
    if (witness_out) witness_out->clear();
    while (dominated != all) {
        int best = -1, best_gain = -1;
        for (int v = 0; v < n; ++v) {
            int c = std::popcount(adj[v] & ~dominated);
            if (c > best_gain) {
                best_gain = c;
                best = v;
            }
        }
        dominated |= adj[best];
        if (witness_out) witness_out->push_back(best);
        ++size;
    }
    return size;
}

} // namespace

bool is_connected(const std::vector<Bitset>& adj, int n) {
    if (n == 0) return true;
    Bitset reached(n);
    reached.set(0);
    for (;;) {
        Bitset frontier(n);
        reached.for_each_set([&](int u) { frontier |= adj[u]; });
        frontier.subtract(reached);
        if (frontier.none()) break;
        reached |= frontier;
    }
    return reached.count() == n;
}

int gamma_t_on_masks(const std::vector<Bitset>& adj, int n, int max_component_vertices,
                     std::vector<int>* witness_out) {
    if (max_component_vertices > 64)
        throw BadParam("max_component_vertices cannot exceed 64");
    for (int v = 0; v < n; ++v)
        if (adj[v].none()) throw IsolatedVertex(v);
    if (witness_out) witness_out->clear();

    Bitset visited(n);
    int total = 0;
    for (int v0 = 0; v0 < n; ++v0) {
        if (visited.test(v0)) continue;
        Bitset comp(n);
        comp.set(v0);
        for (;;) {
            Bitset frontier(n);
            comp.for_each_set([&](int u) { frontier |= adj[u]; });
            frontier.subtract(comp);
            if (frontier.none()) break;
            comp |= frontier;
        }
        visited |= comp;

        std::vector<int> verts = comp.to_vector();
        const int cn = (int)verts.size();
        if (cn > max_component_vertices)
            throw ExceedsSearchBudget("component has " + std::to_string(cn) +
                                      " vertices, limit is " +
                                      std::to_string(max_component_vertices));

        std::vector<int> local_of(n, -1);
        for (int i = 0; i < cn; ++i) local_of[verts[i]] = i;
        std::vector<std::uint64_t> local(cn, 0);
        for (int i = 0; i < cn; ++i)
            adj[verts[i]].for_each_set([&](int w) { local[i] |= 1ull << local_of[w]; });

        std::uint64_t all = cn == 64 ? ~0ull : (1ull << cn) - 1;
        int upper = greedy_on_masks(local, cn, all, nullptr);
        LocalSolver solver(local, cn);
        int opt = solver.solve(upper);
        total += opt;
        if (witness_out)
            for (int i : solver.best) witness_out->push_back(verts[i]);
    }
    // Sorted union of per-component lex-least witnesses is the global
    // lex-least witness: at the first element where two unions differ, the
    // component owning that element would itself have a lex-smaller witness,
    // contradicting per-component minimality.
    if (witness_out) std::sort(witness_out->begin(), witness_out->end());
    return total;
}

} // namespace detail

DominationCertificate gamma_t(const Graph& g, const SolverOptions& opts) {
    for (int v = 0; v < g.n(); ++v)
        if (g.degree(v) == 0) throw IsolatedVertex(v);
    DominationCertificate cert;
    cert.gamma_t = detail::gamma_t_on_masks(g.adjacency(), g.n(), opts.max_component_vertices,
                                            &cert.witness);
    return cert;
}

} // namespace totbond
