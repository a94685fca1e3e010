#include "totbond/bondage.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <limits>
#include <mutex>
#include <thread>

namespace totbond {

int lower_bound(int k) {
    if (k < 1) throw BadParam("k must be at least 1");
    return (k + 1) / 2;
}

long long sanchis_max_edges(int n, int gamma) {
    if (gamma < 5) throw BadParam("edge bound requires gamma >= 5");
    if (gamma > n) throw BadParam("gamma cannot exceed the vertex count");
    long long a = n - gamma + 1;
    return a * (a - 1) / 2 + gamma / 2;
}

namespace {

// min(C(m, s), uint64 max) without overflow.
std::uint64_t combinations_saturated(int m, int s) {
    if (s < 0 || s > m) return 0;
    s = std::min(s, m - s);
    unsigned __int128 r = 1;
    for (int i = 1; i <= s; ++i) {
        r = r * (unsigned __int128)(m - s + i) / (unsigned __int128)i;
        if (r > (unsigned __int128)std::numeric_limits<std::uint64_t>::max())
            return std::numeric_limits<std::uint64_t>::max();
    }
    return (std::uint64_t)r;
}

void check_level_budget(int m, int s, std::uint64_t budget) {
    std::uint64_t count = combinations_saturated(m, s);
    if (count > budget)
        throw ExceedsSearchBudget("deletion size " + std::to_string(s) + " spans " +
                                  std::to_string(count) + " subsets, budget is " +
                                  std::to_string(budget));
}

// One worker's view of the graph minus the deletion set built so far.
// Degrees never reach zero: edges whose removal would isolate an endpoint
// are skipped, which also prunes every superset through that branch.
struct DeletionState {
    std::vector<Bitset> adj;
    std::vector<int> deg;

    explicit DeletionState(const Graph& g) : adj(g.adjacency()), deg(g.n()) {
        for (int v = 0; v < g.n(); ++v) deg[v] = g.degree(v);
    }

    bool can_remove(Edge e) const { return deg[e.first] > 1 && deg[e.second] > 1; }

    void remove(Edge e) {
        adj[e.first].reset(e.second);
        adj[e.second].reset(e.first);
        --deg[e.first];
        --deg[e.second];
    }

    void restore(Edge e) {
        adj[e.first].set(e.second);
        adj[e.second].set(e.first);
        ++deg[e.first];
        ++deg[e.second];
    }
};

// Searches one deletion size s for the first (lexicographically least by edge
// index) valid subset whose removal lifts gamma_t to at least target.
//
// Subsets are split into chunks by their length-p prefix; chunk order equals
// lexicographic subset order, so the success with the smallest chunk index,
// taking the first success inside each chunk, is the global lexicographic
// minimum regardless of how chunks are distributed over threads.
class LevelSearch {
public:
    LevelSearch(const Graph& g, int s, int target, bool sanchis_cut,
                const SolverOptions& gamma_opts)
        : g_(g), edges_(g.edges().pairs()), m_((int)edges_.size()), n_(g.n()), s_(s),
          target_(target), sanchis_cut_(sanchis_cut), gamma_opts_(gamma_opts) {
        const int p = std::min(2, s_);
        if (p == 1) {
            for (int i = 0; i + s_ <= m_; ++i) prefixes_.push_back({i, -1});
        } else {
            for (int i = 0; i < m_; ++i)
                for (int j = i + 1; j + s_ - 1 <= m_; ++j) prefixes_.push_back({i, j});
        }
    }

    std::optional<std::vector<int>> run(int jobs) {
        if (prefixes_.empty()) return std::nullopt;
        jobs = std::clamp(jobs, 1, (int)prefixes_.size());
        if (jobs == 1) {
            worker();
        } else {
            std::vector<std::thread> pool;
            pool.reserve(jobs);
            for (int t = 0; t < jobs; ++t) pool.emplace_back([this] { worker(); });
            for (auto& th : pool) th.join();
        }
        if (failure_) std::rethrow_exception(failure_);
        if (best_chunk_.load() == kNoChunk) return std::nullopt;
        return best_subset_;
    }

private:
    static constexpr std::size_t kNoChunk = std::numeric_limits<std::size_t>::max();

    void worker() {
        try {
            DeletionState state(g_);
            std::vector<int> chosen;
            chosen.reserve(s_);
            for (;;) {
                std::size_t c = next_chunk_.fetch_add(1);
                if (c >= prefixes_.size()) return;
                if (best_chunk_.load(std::memory_order_acquire) < c) return;
                run_chunk(c, state, chosen);
            }
        } catch (...) {
            std::lock_guard<std::mutex> lock(mu_);
            if (!failure_) failure_ = std::current_exception();
        }
    }

    void run_chunk(std::size_t c, DeletionState& state, std::vector<int>& chosen) {
        auto [i, j] = prefixes_[c];
        if (!state.can_remove(edges_[i])) return;
        state.remove(edges_[i]);
        chosen.push_back(i);
        int depth = 1;
        bool ok = true;
        if (j >= 0) {
            if (state.can_remove(edges_[j])) {
                state.remove(edges_[j]);
                chosen.push_back(j);
                depth = 2;
            } else {
                ok = false;
            }
        }
        if (ok) {
            std::vector<int> hit;
            int next = depth == 2 ? j + 1 : i + 1;
            if (extend(c, state, chosen, next, s_ - depth, hit)) record(c, hit);
        }
        while (depth-- > 0) {
            state.restore(edges_[chosen.back()]);
            chosen.pop_back();
        }
    }

    bool extend(std::size_t c, DeletionState& state, std::vector<int>& chosen, int start,
                int remaining, std::vector<int>& hit) {
        if (best_chunk_.load(std::memory_order_relaxed) < c) return false;
        if (remaining == 0) return evaluate(state, chosen, hit);
        for (int i = start; i + remaining <= m_; ++i) {
            if (!state.can_remove(edges_[i])) continue;
            state.remove(edges_[i]);
            chosen.push_back(i);
            bool found = extend(c, state, chosen, i + 1, remaining - 1, hit);
            state.restore(edges_[i]);
            chosen.pop_back();
            if (found) return true;
        }
        return false;
    }

    bool evaluate(DeletionState& state, const std::vector<int>& chosen, std::vector<int>& hit) {
        // A connected candidate with more edges than any connected graph of
        // the target gamma_t can carry cannot reach the target.
        if (sanchis_cut_ && detail::is_connected(state.adj, n_)) return false;
        int gam = detail::gamma_t_on_masks(state.adj, n_, gamma_opts_.max_component_vertices,
                                           nullptr);
        if (gam < target_) return false;
        hit = chosen;
        return true;
    }

    void record(std::size_t c, std::vector<int> hit) {
        std::lock_guard<std::mutex> lock(mu_);
        if (c < best_chunk_.load(std::memory_order_relaxed)) {
            best_subset_ = std::move(hit);
            best_chunk_.store(c, std::memory_order_release);
        }
    }

    const Graph& g_;
    const std::vector<Edge>& edges_;
    const int m_, n_, s_, target_;
    const bool sanchis_cut_;
    const SolverOptions gamma_opts_;

    std::vector<std::pair<int, int>> prefixes_;
    std::atomic<std::size_t> next_chunk_{0};
    std::atomic<std::size_t> best_chunk_{kNoChunk};
    std::mutex mu_;
    std::vector<int> best_subset_;
    std::exception_ptr failure_;
};

int max_valid_deletion_size(const Graph& g) {
    // Minimum degree >= 1 needs at least ceil(n/2) edges.
    return g.edge_count() - (g.n() + 1) / 2;
}

} // namespace

BondageOutcome bondage_k(const Graph& g, int k, const SearchOptions& opts) {
    if (k < 1) throw BadParam("k must be at least 1");
    DominationCertificate before = gamma_t(g, opts.gamma);
    const int n = g.n();
    const int m = g.edge_count();
    const int target = before.gamma_t + k;
    if (target > n) return NotAchievable{max_achievable_increase(g, opts)};

    const int s_max = max_valid_deletion_size(g);
    const int s_start = opts.prune ? lower_bound(k) : 1;
    for (int s = s_start; s <= s_max; ++s) {
        check_level_budget(m, s, opts.subset_budget);
        bool sanchis_cut =
            opts.prune && target >= 5 && (long long)(m - s) > sanchis_max_edges(n, target);
        LevelSearch search(g, s, target, sanchis_cut, opts.gamma);
        auto hit = search.run(std::max(1, opts.jobs));
        if (hit) {
            std::vector<Edge> del;
            del.reserve(hit->size());
            for (int idx : *hit) del.push_back(g.edges().pairs()[idx]);
            EdgeSet ds = EdgeSet::from_pairs(std::move(del));
            Graph h = remove_edges(g, ds);
            BondageCertificate cert;
            cert.k = k;
            cert.deleted = std::move(ds);
            cert.before = std::move(before);
            cert.after = gamma_t(h, opts.gamma);
            return cert;
        }
    }
    return NotAchievable{max_achievable_increase(g, opts)};
}

int max_achievable_increase(const Graph& g, const SearchOptions& opts) {
    DominationCertificate before = gamma_t(g, opts.gamma);
    const int m = g.edge_count();
    const int s_max = max_valid_deletion_size(g);
    const auto& edges = g.edges().pairs();

    int best = before.gamma_t;
    DeletionState state(g);
    auto dfs = [&](auto&& self, int start, int remaining) -> void {
        if (best >= g.n()) return; // gamma_t cannot exceed n
        if (remaining == 0) {
            best = std::max(best, detail::gamma_t_on_masks(
                                      state.adj, g.n(), opts.gamma.max_component_vertices,
                                      nullptr));
            return;
        }
        for (int i = start; i + remaining <= m; ++i) {
            if (!state.can_remove(edges[i])) continue;
            state.remove(edges[i]);
            self(self, i + 1, remaining - 1);
            state.restore(edges[i]);
        }
    };
    for (int s = 1; s <= s_max && best < g.n(); ++s) {
        check_level_budget(m, s, opts.subset_budget);
        dfs(dfs, 0, s);
    }
    return best - before.gamma_t;
}

bool verify_certificate(const Graph& g, const BondageCertificate& cert,
                        const SolverOptions& opts) {
    if (cert.k < 1) return false;
    for (const auto& [u, v] : cert.deleted)
        if (!g.has_edge(u, v)) return false;
    Graph h = remove_edges(g, cert.deleted);
    if (h.has_isolated_vertex()) return false;

    DominationCertificate before = gamma_t(g, opts);
    DominationCertificate after = gamma_t(h, opts);
    if (before.gamma_t != cert.before.gamma_t || after.gamma_t != cert.after.gamma_t)
        return false;
    if ((int)cert.before.witness.size() != cert.before.gamma_t) return false;
    if ((int)cert.after.witness.size() != cert.after.gamma_t) return false;
    if (!is_td_set(g, cert.before.witness) || !is_td_set(h, cert.after.witness)) return false;
    return cert.after.gamma_t - cert.before.gamma_t >= cert.k;
}

} // namespace totbond
