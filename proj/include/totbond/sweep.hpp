#ifndef TOTBOND_SWEEP_HPP
#define TOTBOND_SWEEP_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "totbond/bondage.hpp"
#include "totbond/formulas.hpp"
#include "totbond/generators.hpp"

namespace totbond {

enum class Status { Match, BoundHolds, Mismatch, Skipped };

std::string status_name(Status s);

// One formula-vs-solver comparison. Self-contained: the instance can be
// rebuilt and the entry re-evaluated from the recorded fields alone.
struct SweepEntry {
    std::string suite;
    ClassSpec instance;
    std::string theorem;
    std::optional<int> k; // deletion target for bondage entries
    Kind kind = Kind::Exact;
    std::optional<long long> formula_value;
    std::optional<long long> oracle_value;
    bool oracle_not_achievable = false;
    Status status = Status::Skipped;
    std::string skip_reason;
    std::string note;
    std::string certificate_json; // set on Mismatch of bondage entries
    std::int64_t wall_time_ms = 0;
};

struct SweepReport {
    std::vector<SweepEntry> entries;
    std::string tool_version;
    std::string corpus_hash;
    std::int64_t total_wall_ms = 0;

    int count(Status s) const;
};

struct SweepRanges {
    int n_lo = -1, n_hi = -1;
    int k_lo = -1, k_hi = -1;
    int a_lo = -1, a_hi = -1;
    int b_lo = -1, b_hi = -1;
    int b_max = -1;
    bool include_out_of_hypothesis = false;
};

// Suites: "paths", "cycles", "wheels", "complete", "bipartite",
// "constructions", or "all". Unset range fields take per-suite defaults.
SweepReport run_sweep(const std::vector<std::string>& suites, const SweepRanges& ranges,
                      const SearchOptions& opts);

// Re-evaluates one recorded entry from scratch (used by --replay).
SweepEntry evaluate_entry(const std::string& suite, const ClassSpec& instance,
                          const std::string& theorem, std::optional<int> k,
                          const SearchOptions& opts);

// Number of entries whose re-evaluation changes status.
int replay_differences(const SweepReport& saved, const SearchOptions& opts,
                       std::string* diagnostics);

// Mismatches among Exact formulas decide the verify exit code.
int exact_mismatch_count(const SweepReport& report);

std::string render_table(const SweepReport& report);

} // namespace totbond

#endif
