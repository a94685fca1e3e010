#include "support/oracle.hpp"

#include <algorithm>
#include <vector>

namespace totbond::testsupport {
namespace {

// Visits all t-subsets of {0..n-1} in lexicographic order; stops early when
// the callback returns true.
template <typename F>
bool for_each_subset(int n, int t, F&& visit) {
    if (t > n) return false;
    std::vector<int> idx(t);
    for (int i = 0; i < t; ++i) idx[i] = i;
    while (true) {
        if (visit(idx)) return true;
        int i = t - 1;
        while (i >= 0 && idx[i] == n - t + i) --i;
        if (i < 0) return false;
        ++idx[i];
        for (int j = i + 1; j < t; ++j) idx[j] = idx[j - 1] + 1;
    }
}

std::vector<std::vector<int>> adjacency_lists(int n, const std::vector<Edge>& edges) {
    std::vector<std::vector<int>> adj(n);
    for (const auto& [u, v] : edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    return adj;
}

std::optional<int> gamma_on_lists(int n, const std::vector<std::vector<int>>& adj) {
    for (int v = 0; v < n; ++v)
        if (adj[v].empty()) return std::nullopt;
    for (int t = 1; t <= n; ++t) {
        std::optional<int> found;
        for_each_subset(n, t, [&](const std::vector<int>& s) {
            std::vector<char> in_s(n, 0);
            for (int v : s) in_s[v] = 1;
            for (int v = 0; v < n; ++v) {
                bool dominated = false;
                for (int w : adj[v])
                    if (in_s[w]) { dominated = true; break; }
                if (!dominated) return false;
            }
            found = t;
            return true;
        });
        if (found) return found;
    }
    return std::nullopt; // unreachable for n >= 2 without isolated vertices
}

} // namespace

std::optional<int> oracle_gamma_t(const Graph& g) {
    return gamma_on_lists(g.n(), adjacency_lists(g.n(), g.edges().pairs()));
}

OracleBondage oracle_bondage(const Graph& g, int k) {
    const auto all = g.edges().pairs();
    const int m = static_cast<int>(all.size());
    const auto base = oracle_gamma_t(g);
    OracleBondage out;
    if (!base) return out;
    for (int s = 0; s <= m; ++s) {
        bool hit = for_each_subset(m, s, [&](const std::vector<int>& drop) {
            std::vector<char> removed(m, 0);
            for (int e : drop) removed[e] = 1;
            std::vector<Edge> rest;
            for (int e = 0; e < m; ++e)
                if (!removed[e]) rest.push_back(all[e]);
            auto after = gamma_on_lists(g.n(), adjacency_lists(g.n(), rest));
            if (!after) return false; // isolated a vertex: not a valid deletion
            out.max_increase = std::max(out.max_increase, *after - *base);
            return *after - *base >= k;
        });
        if (hit) {
            out.achievable = true;
            out.value = s;
            return out;
        }
    }
    return out;
}

int oracle_max_increase(const Graph& g) {
    // k beyond any possible increase: forces a full scan of every level.
    return oracle_bondage(g, g.n() + 1).max_increase;
}

} // namespace totbond::testsupport
