#ifndef TOTBOND_BONDAGE_HPP
#define TOTBOND_BONDAGE_HPP

#include <cstdint>
#include <optional>
#include <variant>

#include "totbond/domination.hpp"
#include "totbond/graph.hpp"

namespace totbond {

// Witnessed value of B_t^k: deleting `deleted` raises gamma_t from
// before.gamma_t to after.gamma_t >= before.gamma_t + k, and the search
// proved no smaller deletion set does.
struct BondageCertificate {
    int k = 0;
    EdgeSet deleted;
    DominationCertificate before;
    DominationCertificate after;

    int bondage() const { return deleted.size(); }
};

// No edge deletion set (of any size) achieves the requested increase.
struct NotAchievable {
    int max_increase = 0;
};

using BondageOutcome = std::variant<BondageCertificate, NotAchievable>;

struct SearchOptions {
    // Refuse a deletion-size level whose raw subset count exceeds this.
    std::uint64_t subset_budget = 100'000'000ull;
    // Enables the lower-bound start and the dense-graph edge-count prune.
    bool prune = true;
    // Worker threads for subset enumeration. Output is identical for any
    // value: the reported witness is the least valid subset at the minimal
    // size in enumeration order.
    int jobs = 1;
    SolverOptions gamma;
};

// ceil(k/2): each deleted edge raises gamma_t by at most 2.
int lower_bound(int k);

// Largest edge count of a connected n-vertex graph with gamma_t >= gamma;
// requires gamma >= 5. Used to discard connected candidates during search.
long long sanchis_max_edges(int n, int gamma);

// Smallest s such that some s-subset of E(g), whose removal isolates no
// vertex, raises gamma_t by at least k. Searches sizes in increasing order,
// subsets in lexicographic edge-index order; first success is the witness.
BondageOutcome bondage_k(const Graph& g, int k, const SearchOptions& opts = {});

// max over valid deletion sets of gamma_t(g \ s) - gamma_t(g).
int max_achievable_increase(const Graph& g, const SearchOptions& opts = {});

// Replays a certificate against g: deleted edges exist, no isolation, both
// gamma values recompute to the claimed ones and the increase is >= k.
// Does not re-establish minimality of |deleted|.
bool verify_certificate(const Graph& g, const BondageCertificate& cert,
                        const SolverOptions& opts = {});

} // namespace totbond

#endif
