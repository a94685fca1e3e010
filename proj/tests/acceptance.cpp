// Acceptance campaign: ten criteria, one PASS/FAIL line each, wall-clock
// tolerance pinned next to every criterion. Exit code = number of failures.
#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <optional>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "support/corpus.hpp"
#include "support/oracle.hpp"
#include "totbond/bondage.hpp"
#include "totbond/formulas.hpp"
#include "totbond/generators.hpp"
#include "totbond/jsonio.hpp"
#include "totbond/sweep.hpp"

namespace {

using namespace totbond;
using testsupport::connected_graphs;
using testsupport::oracle_bondage;
using nlohmann::json;

std::string g_cli_path;

void expect(bool ok, const std::string& what) {
    if (!ok) throw std::runtime_error(what);
}

const BondageCertificate& cert_of(const BondageOutcome& o, const std::string& what) {
    expect(std::holds_alternative<BondageCertificate>(o), what + ": expected a certificate");
    return std::get<BondageCertificate>(o);
}

int bondage_value(const Graph& g, int k, const std::string& what,
                  const SearchOptions& opts = {}) {
    auto outcome = bondage_k(g, k, opts);
    const auto& cert = cert_of(outcome, what);
    expect(verify_certificate(g, cert), what + ": certificate failed to replay");
    return cert.bondage();
}

void expect_not_achievable(const Graph& g, int k, int max_increase, const std::string& what) {
    auto outcome = bondage_k(g, k);
    expect(std::holds_alternative<NotAchievable>(outcome), what + ": expected not-achievable");
    int got = std::get<NotAchievable>(outcome).max_increase;
    expect(got == max_increase, what + ": max increase " + std::to_string(got) + " != " +
                                    std::to_string(max_increase));
}

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = "'" + g_cli_path + "' " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    expect(pipe != nullptr, "popen failed");
    RunResult r;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.output.append(buf, got);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

// --- criteria ---------------------------------------------------------

// gamma_t of paths and cycles equals the closed form, n up to 14.
void criterion1() {
    for (int n = 2; n <= 14; ++n) {
        int got = gamma_t(path(n)).gamma_t;
        expect(got == gamma_t_path(n), "path n=" + std::to_string(n) + ": solver " +
                                           std::to_string(got) + " != formula " +
                                           std::to_string(gamma_t_path(n)));
    }
    for (int n = 3; n <= 14; ++n) {
        int got = gamma_t(cycle(n)).gamma_t;
        expect(got == gamma_t_cycle(n), "cycle n=" + std::to_string(n) + ": solver " +
                                            std::to_string(got) + " != formula " +
                                            std::to_string(gamma_t_cycle(n)));
    }
}

// B_t^k of paths and cycles, n in [4,12], k in [1,3]. Where the closed form
// applies (k = 1; k >= 2 with n >= 2k+2, or n = 2k and k even) solver and
// formula must agree. k >= 2 points below that range admit no valid deletion
// set at all, so the solver must prove not-achievable there.
void criterion2() {
    for (int n = 4; n <= 12; ++n) {
        for (int k = 1; k <= 3; ++k) {
            bool applicable = k == 1 || n >= 2 * k + 2 || (n == 2 * k && k % 2 == 0);
            std::string tag = "n=" + std::to_string(n) + ",k=" + std::to_string(k);
            if (applicable) {
                expect(bondage_value(path(n), k, "path " + tag) == bondage_k_path(n, k),
                       "path " + tag + ": solver != formula");
                expect(bondage_value(cycle(n), k, "cycle " + tag) == bondage_k_cycle(n, k),
                       "cycle " + tag + ": solver != formula");
            } else {
                auto po = bondage_k(path(n), k);
                expect(std::holds_alternative<NotAchievable>(po),
                       "path " + tag + ": expected not-achievable outside the hypothesis");
                auto co = bondage_k(cycle(n), k);
                expect(std::holds_alternative<NotAchievable>(co),
                       "cycle " + tag + ": expected not-achievable outside the hypothesis");
            }
        }
    }
}

// First-order wheel bondage, plus the j = 1 row of the general wheel result.
void criterion3() {
    for (int n = 5; n <= 8; ++n) {
        int got = bondage_value(wheel(n), 1, "wheel n=" + std::to_string(n));
        expect(got == 2, "B_t^1(W_" + std::to_string(n) + ") = " + std::to_string(got) +
                             ", expected 2");
        expect(bondage_1_wheel(n) == 2, "formula off at n=" + std::to_string(n));
        if (n >= 6)
            expect(bondage_wheel(n, 1) == 2,
                   "general wheel formula off at n=" + std::to_string(n) + ", j=1");
    }
}

// Wheel maximum increase: B_t^4(W_5) = B_t^4(W_6) = 7, and 4 is the ceiling.
void criterion4() {
    for (int n : {5, 6}) {
        auto [max_k, cost] = wheel_max_increase(n);
        expect(max_k == 4 && cost == 7, "wheel_max_increase(" + std::to_string(n) +
                                            ") = (" + std::to_string(max_k) + ", " +
                                            std::to_string(cost) + "), expected (4, 7)");
        int got = bondage_value(wheel(n), 4, "W_" + std::to_string(n) + " k=4");
        expect(got == 7, "B_t^4(W_" + std::to_string(n) + ") = " + std::to_string(got));
        int reach = max_achievable_increase(wheel(n));
        expect(reach == 4, "max increase of W_" + std::to_string(n) + " is " +
                               std::to_string(reach) + ", expected 4");
    }
}

// B_t^1(K_n) = 2n-5 for n = 5..7; the independent oracle scans every smaller
// deletion size exhaustively, so agreement includes the negative check that
// 2n-6 edges never suffice.
void criterion5() {
    for (int n = 5; n <= 7; ++n) {
        std::string tag = "K_" + std::to_string(n);
        int got = bondage_value(complete(n), 1, tag);
        expect(got == 2 * n - 5, tag + ": solver " + std::to_string(got) + " != 2n-5");
        auto ref = oracle_bondage(complete(n), 1);
        expect(ref.achievable && ref.value == 2 * n - 5,
               tag + ": oracle disagrees (" + std::to_string(ref.value) + ")");
    }
}

// B_t^2(K_n) = 2n-4 for n = 4..6, and B_t^3(K_6) = 11; oracle scans size 10
// exhaustively before accepting 11.
void criterion6() {
    for (int n = 4; n <= 6; ++n) {
        std::string tag = "K_" + std::to_string(n) + " k=2";
        int got = bondage_value(complete(n), 2, tag);
        expect(got == 2 * n - 4, tag + ": solver " + std::to_string(got) + " != 2n-4");
        auto ref = oracle_bondage(complete(n), 2);
        expect(ref.achievable && ref.value == 2 * n - 4, tag + ": oracle disagrees");
    }
    int got = bondage_value(complete(6), 3, "K_6 k=3");
    auto ref = oracle_bondage(complete(6), 3);
    expect(ref.achievable && ref.value == got, "K_6 k=3: oracle disagrees with solver");
    expect(got > 10, "K_6 k=3: 10 deletions sufficed, negative check failed");
    expect(got == 11,
           "B_t^3(K_6) = " + std::to_string(got) +
               " by both the solver (certificate replays) and the exhaustive oracle, which"
               " refuted every deletion set of size <= 11; the pinned value 11 is not"
               " attainable because gamma_t >= 5 on 6 vertices forces a perfect matching");
}

// Complete bipartite: B_t^1 = a for a,b <= 4 (solver and oracle); B_t^2 of
// K_{3,5} is 5; for K_{4,5} the published statements disagree, so the
// requirement is an oracle-resolved value plus an explicit report note.
void criterion7() {
    for (int a = 2; a <= 4; ++a) {
        for (int b = a; b <= 4; ++b) {
            std::string tag = "K_{" + std::to_string(a) + "," + std::to_string(b) + "}";
            int got = bondage_value(complete_bipartite(a, b), 1, tag);
            expect(got == a, tag + ": solver " + std::to_string(got) + " != a");
            auto ref = oracle_bondage(complete_bipartite(a, b), 1);
            expect(ref.achievable && ref.value == a, tag + ": oracle disagrees");
        }
    }
    int k35 = bondage_value(complete_bipartite(3, 5), 2, "K_{3,5} k=2");
    expect(k35 == 5, "B_t^2(K_{3,5}) = " + std::to_string(k35) + ", expected 5");
    auto ref35 = oracle_bondage(complete_bipartite(3, 5), 2);
    expect(ref35.achievable && ref35.value == 5, "K_{3,5} k=2: oracle disagrees");

    ClassSpec k45;
    k45.family = Family::CompleteBipartite;
    k45.a = 4;
    k45.b = 5;
    SweepEntry e = evaluate_entry("bipartite", k45, "thm3.16", 2, SearchOptions{});
    expect(e.oracle_value.has_value(), "K_{4,5} k=2: no oracle value produced");
    expect(e.note.find("known discrepancy") != std::string::npos,
           "K_{4,5} k=2: discrepancy note missing from the sweep entry");
    expect(e.note.find("oracle agrees with") != std::string::npos,
           "K_{4,5} k=2: note does not say which published value the oracle matches");
}

// The bondage constructions deliver their designed value; the oracle scan
// from size 0 upward doubles as the minimality check below b.
void criterion8() {
    const std::pair<int, int> cases[] = {{2, 1}, {2, 2}, {3, 2}, {3, 3}, {4, 2}};
    for (auto [k, b] : cases) {
        std::string tag = "G(k=" + std::to_string(k) + ",b=" + std::to_string(b) + ")";
        Graph g = construct_G_b_k(k, b).graph;
        auto ref = oracle_bondage(g, k);
        expect(ref.achievable, tag + ": oracle says not achievable");
        expect(ref.value == b, tag + ": oracle " + std::to_string(ref.value) + " != b");
        int got = bondage_value(g, k, tag);
        expect(got == b, tag + ": solver " + std::to_string(got) + " != b");
    }
}

// Structural properties of the solver on the exhaustive small-graph corpus.
void criterion9() {
    // deleting edges never lowers gamma_t; single deletions add at most 2
    for (int n = 4; n <= 7; ++n) {
        for (const Graph& g : connected_graphs(n)) {
            int base = gamma_t(g).gamma_t;
            for (const Edge& e : g.edges()) {
                if (is_pendant_edge(g, e)) continue;
                int after = gamma_t(remove_edges(g, EdgeSet::from_pairs({e}))).gamma_t;
                expect(after >= base && after <= base + 2,
                       "single-edge bound violated on an n=" + std::to_string(n) + " graph");
            }
        }
    }
    // and for deletion pairs on the n <= 5 corpus
    for (int n = 4; n <= 5; ++n) {
        for (const Graph& g : connected_graphs(n)) {
            int base = gamma_t(g).gamma_t;
            auto edges = g.edges().pairs();
            for (std::size_t i = 0; i < edges.size(); ++i)
                for (std::size_t j = i + 1; j < edges.size(); ++j) {
                    auto h = remove_edges(g, EdgeSet::from_pairs({edges[i], edges[j]}));
                    if (h.has_isolated_vertex()) continue;
                    expect(gamma_t(h).gamma_t >= base, "monotonicity violated");
                }
        }
    }

    // gamma_t is additive over disjoint unions
    std::mt19937 rng(20250814);
    for (int trial = 0; trial < 60; ++trial) {
        int parts = 2 + (int)(rng() % 2);
        std::vector<Edge> edges;
        int offset = 0, want = 0;
        for (int p = 0; p < parts; ++p) {
            int n = 3 + (int)(rng() % 5);
            const auto& pool = connected_graphs(n);
            const Graph& g = pool[rng() % pool.size()];
            want += gamma_t(g).gamma_t;
            for (const auto& [u, v] : g.edges()) edges.emplace_back(offset + u, offset + v);
            offset += n;
        }
        Graph u = Graph::from_edges(offset, std::move(edges));
        expect(gamma_t(u).gamma_t == want, "disjoint union additivity violated");
    }

    // edge-count ceiling: no connected graph with gamma_t >= 5 in the n <= 7
    // corpus (2n/3 caps it at 4), so check the larger named instances
    for (int n = 2; n <= 7; ++n)
        for (const Graph& g : connected_graphs(n))
            expect(gamma_t(g).gamma_t <= 4, "unexpected gamma_t >= 5 at n <= 7");
    std::vector<Graph> big;
    for (int n = 8; n <= 14; ++n) {
        big.push_back(path(n));
        big.push_back(cycle(n));
    }
    big.push_back(gadget_TmN(2, 5).graph);
    big.push_back(construct_G_b_k(3, 2).graph);
    big.push_back(construct_G_b_k(4, 2).graph);
    big.push_back(construct_G_b_k(7, 4).graph);
    big.push_back(corollary_graph(3, 2).graph);
    int checked = 0;
    for (const Graph& g : big) {
        int gam = gamma_t(g).gamma_t;
        if (gam < 5 || components(g).size() != 1) continue;
        ++checked;
        expect(g.edge_count() <= sanchis_max_edges(g.n(), gam),
               "edge-count ceiling violated at n=" + std::to_string(g.n()));
    }
    expect(checked >= 10, "edge-count ceiling exercised on too few instances");

    // the ceiling function is nonincreasing across its whole domain
    for (int n = 2; n <= 100; ++n)
        for (int x = 2; x < n; ++x)
            expect(sanchis_f(n, x) >= sanchis_f(n, x + 1), "ceiling function not monotone");

    // pruning is invisible in outcomes: full corpus at k = 1, n <= 6 at k = 2,3
    SearchOptions plain;
    plain.prune = false;
    auto same_outcome = [&](const Graph& g, int k) {
        auto a = bondage_k(g, k);
        auto b = bondage_k(g, k, plain);
        if (a.index() != b.index()) return false;
        if (const auto* ca = std::get_if<BondageCertificate>(&a)) {
            const auto& cb = std::get<BondageCertificate>(b);
            return ca->bondage() == cb.bondage() && ca->deleted.pairs() == cb.deleted.pairs();
        }
        return std::get<NotAchievable>(a).max_increase ==
               std::get<NotAchievable>(b).max_increase;
    };
    for (int n = 2; n <= 7; ++n)
        for (const Graph& g : connected_graphs(n))
            expect(same_outcome(g, 1), "pruned/unpruned divergence at k=1, n=" +
                                           std::to_string(n));
    for (int n = 4; n <= 6; ++n)
        for (const Graph& g : connected_graphs(n))
            for (int k = 2; k <= 3; ++k)
                expect(same_outcome(g, k), "pruned/unpruned divergence at k=" +
                                               std::to_string(k) + ", n=" + std::to_string(n));
}

// The full sweep is deterministic: certified payloads from --jobs 1 and
// --jobs 4 runs are byte-identical, and both runs are mismatch-free.
void criterion10() {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / ("totbond_accept_" + std::to_string(::getpid()));
    fs::create_directories(dir);
    fs::path r1 = dir / "all_j1.json";
    fs::path r4 = dir / "all_j4.json";

    auto a = run_cli("verify --suite all --jobs 1 --report '" + r1.string() + "'");
    expect(a.exit_code == 0, "jobs=1 sweep exited " + std::to_string(a.exit_code));
    auto b = run_cli("verify --suite all --jobs 4 --report '" + r4.string() + "'");
    expect(b.exit_code == 0, "jobs=4 sweep exited " + std::to_string(b.exit_code));

    auto slurp = [](const fs::path& p) {
        std::ifstream in(p);
        std::ostringstream buf;
        buf << in.rdbuf();
        return buf.str();
    };
    json j1 = json::parse(slurp(r1));
    json j4 = json::parse(slurp(r4));
    expect(j1.at("certified").at("summary").at("mismatch") == 0, "jobs=1 sweep has mismatches");
    std::string c1 = j1.at("certified").dump(2);
    std::string c4 = j4.at("certified").dump(2);
    expect(c1 == c4, "certified payloads differ between --jobs 1 and --jobs 4");
    expect(!c1.empty(), "empty certified payload");
}

struct Criterion {
    int id;
    const char* summary;
    double limit_seconds;
    std::function<void()> body;
};

} // namespace

int main(int argc, char** argv) {
    if (argc != 2) {
        std::cerr << "usage: acceptance <path-to-totbond-cli>\n";
        return 2;
    }
    g_cli_path = argv[1];

    const std::vector<Criterion> criteria = {
        {1, "gamma_t(P_n), gamma_t(C_n) match the closed form, n <= 14", 5.0, criterion1},
        {2, "B_t^k of paths/cycles matches within hypothesis, n <= 12, k <= 3", 120.0,
         criterion2},
        {3, "B_t^1 of wheels is 2 for n = 5..8 (and the j = 1 general row)", 120.0, criterion3},
        {4, "B_t^4(W_5) = B_t^4(W_6) = 7 and the max increase is 4", 60.0, criterion4},
        {5, "B_t^1(K_n) = 2n-5 for n = 5..7, oracle-checked below 2n-5", 600.0, criterion5},
        {6, "B_t^2(K_n) = 2n-4 for n = 4..6; B_t^3(K_6) = 11 with negative at 10", 600.0,
         criterion6},
        {7, "bipartite exact values; K_{4,5} discrepancy resolved and reported", 900.0,
         criterion7},
        {8, "constructed graphs hit B_t^k = b for the five (k,b) pairs", 600.0, criterion8},
        {9, "property suite over the exhaustive n <= 7 corpus", 1200.0, criterion9},
        {10, "verify --suite all certified payload is byte-stable across --jobs", 600.0,
         criterion10},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        std::string error;
        try {
            c.body();
        } catch (const std::exception& ex) {
            error = ex.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                          .count();
        bool ok = error.empty() && secs <= c.limit_seconds;
        if (!ok) ++failures;
        char timing[64];
        std::snprintf(timing, sizeof timing, "%.2fs (limit %.0fs)", secs, c.limit_seconds);
        std::cout << "C" << c.id << " " << (ok ? "PASS" : "FAIL") << "  " << timing << "  "
                  << c.summary;
        if (!error.empty()) std::cout << "  -- " << error;
        if (error.empty() && secs > c.limit_seconds) std::cout << "  -- over time limit";
        std::cout << std::endl;
    }
    std::cout << (failures == 0
                      ? std::string("acceptance: all criteria pass")
                      : "acceptance: " + std::to_string(failures) +
                            (failures == 1 ? " criterion failed" : " criteria failed"))
              << std::endl;
    return failures;
}
