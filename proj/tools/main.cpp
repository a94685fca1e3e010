#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "totbond/bondage.hpp"
#include "totbond/formulas.hpp"
#include "totbond/generators.hpp"
#include "totbond/graph.hpp"
#include "totbond/jsonio.hpp"
#include "totbond/sweep.hpp"
#include "totbond/version.hpp"

namespace {

using namespace totbond;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitBudget = 3;

std::pair<int, int> parse_range(const std::string& text) {
    auto dots = text.find("..");
    if (dots == std::string::npos) {
        int v = std::stoi(text);
        return {v, v};
    }
    int lo = std::stoi(text.substr(0, dots));
    int hi = std::stoi(text.substr(dots + 2));
    if (hi < lo) throw BadParam("range '" + text + "' is empty");
    return {lo, hi};
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw BadParam("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& data) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw BadParam("cannot write '" + path + "'");
    out << data;
}

// Shared --class/--n/--a/--b/--k/--m instance options.
struct SpecArgs {
    std::string family;
    int n = -1, a = -1, b = -1, k = -1, m = -1;

    void attach(CLI::App* cmd) {
        cmd->add_option("--class", family, "graph family (path, cycle, wheel, complete, "
                                           "bipartite, t, tm, tmn, gbk, corollary)");
        cmd->add_option("--n", n, "vertex-count style parameter");
        cmd->add_option("--a", a, "first bipartite part size");
        cmd->add_option("--b", b, "second bipartite part size / construction target");
        cmd->add_option("--k", k, "construction k parameter");
        cmd->add_option("--m", m, "gadget copy count");
    }

    bool given() const { return !family.empty(); }

    ClassSpec to_spec() const {
        ClassSpec s;
        s.family = parse_family(family);
        s.n = n;
        s.a = a;
        s.b = b;
        s.k = k;
        s.m = m;
        return s;
    }
};

Graph load_graph(const std::string& input_path, const SpecArgs& spec) {
    if (!input_path.empty() && spec.given())
        throw BadParam("give either an edge-list file or --class, not both");
    if (!input_path.empty()) return parse_edge_list(read_file(input_path));
    if (spec.given()) return build_class(spec.to_spec()).graph;
    throw BadParam("no input: pass an edge-list file or --class");
}

std::uint64_t default_budget() {
    if (const char* env = std::getenv("BONDAGE_BUDGET")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw BadParam("BONDAGE_BUDGET is not a number: '" + std::string(env) + "'");
        }
    }
    return SearchOptions{}.subset_budget;
}

int run_gamma_t(const std::string& input, const SpecArgs& spec) {
    Graph g = load_graph(input, spec);
    DominationCertificate cert = gamma_t(g);
    std::cout << to_json(cert).dump(2) << '\n';
    return kExitOk;
}

int run_bondage(const std::string& input, const SpecArgs& spec, int k, SearchOptions opts) {
    Graph g = load_graph(input, spec);
    BondageOutcome outcome = bondage_k(g, k, opts);
    std::cout << outcome_to_json(k, outcome).dump(2) << '\n';
    return kExitOk;
}

int run_gen(const SpecArgs& spec, const std::string& out_path) {
    if (!spec.given()) throw BadParam("gen needs --class");
    LabeledGraph built = build_class(spec.to_spec());
    write_file(out_path, serialize_edge_list(built.graph));
    json sidecar{{"instance", class_spec_to_json(spec.to_spec())},
                 {"n", built.graph.n()},
                 {"edges", built.graph.edge_count()},
                 {"labels", built.labels}};
    write_file(out_path + ".labels.json", sidecar.dump(2) + "\n");
    std::cout << "wrote " << out_path << " (" << built.graph.n() << " vertices, "
              << built.graph.edge_count() << " edges) and " << out_path << ".labels.json\n";
    return kExitOk;
}

int run_verify(const std::vector<std::string>& suites, const SweepRanges& ranges,
               const SearchOptions& opts, const std::string& report_path,
               const std::string& replay_path) {
    if (!replay_path.empty()) {
        SweepReport saved = report_from_json(json::parse(read_file(replay_path)));
        std::string diag;
        int diffs = replay_differences(saved, opts, &diag);
        if (diffs == 0) {
            std::cout << "replay: all " << saved.entries.size() << " entries reproduce\n";
            return kExitOk;
        }
        std::cout << diag;
        std::cout << "replay: " << diffs << " of " << saved.entries.size()
                  << " entries changed\n";
        return 1;
    }

    SweepReport report = run_sweep(suites.empty() ? std::vector<std::string>{"all"} : suites,
                                   ranges, opts);
    std::cout << render_table(report);
    if (!report_path.empty())
        write_file(report_path, report_to_json(report).dump(2) + "\n");
    return exact_mismatch_count(report) == 0 ? kExitOk : 1;
}

// Formula-only value grids, one per theorem tag.
int run_table(const std::string& tag, std::optional<std::pair<int, int>> n_range,
              std::optional<std::pair<int, int>> k_range,
              std::optional<std::pair<int, int>> a_range,
              std::optional<std::pair<int, int>> b_range, std::optional<int> alt_k) {
    auto rows = [&](int def_lo, int def_hi) { return n_range.value_or(std::pair{def_lo, def_hi}); };
    auto cols = [&](int def_lo, int def_hi) { return k_range.value_or(std::pair{def_lo, def_hi}); };

    auto print_grid = [&](const std::string& row_name, std::pair<int, int> rr,
                          const std::string& col_name, std::pair<int, int> cr,
                          const std::function<std::optional<long long>(int, int)>& cell) {
        std::cout << tag << ": rows " << row_name << ", columns " << col_name << '\n';
        std::cout << row_name;
        for (int c = cr.first; c <= cr.second; ++c)
            std::cout << '\t' << col_name << '=' << c;
        std::cout << '\n';
        for (int r = rr.first; r <= rr.second; ++r) {
            std::cout << r;
            for (int c = cr.first; c <= cr.second; ++c) {
                auto v = cell(r, c);
                std::cout << '\t' << (v ? std::to_string(*v) : "-");
            }
            std::cout << '\n';
        }
    };

    auto print_column = [&](const std::string& row_name, std::pair<int, int> rr,
                            const std::string& header,
                            const std::function<std::optional<std::string>(int)>& cell) {
        std::cout << tag << '\n' << row_name << '\t' << header << '\n';
        for (int r = rr.first; r <= rr.second; ++r) {
            auto v = cell(r);
            std::cout << r << '\t' << (v ? *v : "-") << '\n';
        }
    };

    auto guard = [](auto&& f) -> std::optional<long long> {
        try {
            return (long long)f();
        } catch (const BadParam&) {
            return std::nullopt;
        }
    };

    if (tag == "prop3.1") {
        print_column("n", rows(2, 14), "path\tcycle", [&](int n) -> std::optional<std::string> {
            auto p = guard([&] { return gamma_t_path(n); });
            auto c = guard([&] { return gamma_t_cycle(n); });
            if (!p && !c) return std::nullopt;
            return (p ? std::to_string(*p) : "-") + "\t" + (c ? std::to_string(*c) : "-");
        });
        return kExitOk;
    }
    if (tag == "thm3.2") {
        print_column("n", rows(4, 14), "path\tcycle", [&](int n) -> std::optional<std::string> {
            auto p = guard([&] { return bondage_k_path(n, 1); });
            auto c = guard([&] { return bondage_k_cycle(n, 1); });
            if (!p && !c) return std::nullopt;
            return (p ? std::to_string(*p) : "-") + "\t" + (c ? std::to_string(*c) : "-");
        });
        return kExitOk;
    }
    if (tag == "thm3.5") {
        print_grid("n", rows(4, 14), "k", cols(2, 4),
                   [&](int n, int k) { return guard([&] { return bondage_k_path(n, k); }); });
        return kExitOk;
    }
    if (tag == "thm3.5c") {
        print_grid("n", rows(4, 14), "k", cols(2, 4),
                   [&](int n, int k) { return guard([&] { return bondage_k_cycle(n, k); }); });
        return kExitOk;
    }
    if (tag == "thm3.4") {
        print_column("n", rows(5, 12), "value", [&](int n) -> std::optional<std::string> {
            auto v = guard([&] { return bondage_1_wheel(n); });
            return v ? std::optional(std::to_string(*v)) : std::nullopt;
        });
        return kExitOk;
    }
    if (tag == "thm3.6") {
        // Accept either indexing: --k is the increase j, --alt-k is j+1.
        std::pair<int, int> jr = cols(1, 3);
        if (alt_k) {
            if (k_range) throw BadParam("give --k or --alt-k, not both");
            if (*alt_k < 2) throw BadParam("--alt-k must be at least 2");
            jr = {*alt_k - 1, *alt_k - 1};
        }
        print_grid("n", rows(6, 15), "j", jr,
                   [&](int n, int j) { return guard([&] { return bondage_wheel(n, j); }); });
        return kExitOk;
    }
    if (tag == "thm3.5w") {
        print_column("n", rows(3, 12), "max_increase\tcost",
                     [&](int n) -> std::optional<std::string> {
                         try {
                             auto [mk, cost] = wheel_max_increase(n);
                             return std::to_string(mk) + "\t" + std::to_string(cost);
                         } catch (const BadParam&) {
                             return std::nullopt;
                         }
                     });
        return kExitOk;
    }
    if (tag == "thm3.7" || tag == "thm3.9") {
        int k = tag == "thm3.7" ? 1 : 2;
        print_column("n", rows(k == 1 ? 5 : 4, 12), "value",
                     [&](int n) -> std::optional<std::string> {
                         auto v = guard([&] { return bondage_k_complete(n, k); });
                         return v ? std::optional(std::to_string(*v)) : std::nullopt;
                     });
        return kExitOk;
    }
    if (tag == "thm3.12") {
        print_grid("n", rows(5, 9), "k", cols(1, 6), [&](int n, int k) {
            return guard([&] { return bondage_k_complete(n, k); });
        });
        return kExitOk;
    }
    if (tag == "cor3.12") {
        print_grid("n", rows(5, 10), "k", cols(1, 6), [&](int n, int k) {
            return guard([&] { return complete_upper_bound_any(n, k).value; });
        });
        return kExitOk;
    }
    if (tag == "thm3.10") {
        print_grid("n", rows(5, 12), "gamma", cols(5, 8),
                   [&](int n, int g) { return guard([&] { return sanchis_max_edges(n, g); }); });
        return kExitOk;
    }
    if (tag == "thm3.13" || tag == "thm3.16" || tag == "thm3.14" || tag == "thm3.15") {
        std::pair<int, int> ar = a_range.value_or(std::pair{2, 5});
        std::pair<int, int> br = b_range.value_or(std::pair{2, 8});
        int k = k_range ? k_range->first : 2;
        auto cell = [&](int a, int b) -> std::optional<long long> {
            if (tag == "thm3.13") return guard([&] { return bondage_1_bipartite(a, b); });
            if (tag == "thm3.16") return guard([&] { return bondage_2_bipartite(a, b); });
            if (tag == "thm3.14") return guard([&] { return bipartite_bound_A(a, b, k).value; });
            return guard([&] { return bipartite_bound_B(a, b, k).value; });
        };
        print_grid("a", ar, "b", br, cell);
        return kExitOk;
    }
    if (tag == "thm4.1") {
        print_grid("k", cols(1, 6), "b", b_range.value_or(std::pair{1, 6}),
                   [&](int k, int b) -> std::optional<long long> {
                       if (b < (k + 1) / 2) return std::nullopt;
                       return b;
                   });
        return kExitOk;
    }
    throw BadParam("unknown theorem tag '" + tag + "'");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact total domination and k-total bondage toolkit"};
    app.set_version_flag("--version", kToolVersion);
    app.require_subcommand(1);

    // gamma-t
    auto* cmd_gamma = app.add_subcommand("gamma-t", "total domination number with witness");
    std::string gamma_input;
    SpecArgs gamma_spec;
    cmd_gamma->add_option("input", gamma_input, "edge-list file");
    gamma_spec.attach(cmd_gamma);

    // bondage; --k doubles as the construction parameter for gbk/corollary
    auto* cmd_bond = app.add_subcommand("bondage", "k-total bondage number with certificate");
    std::string bond_input;
    SpecArgs bond_spec;
    std::uint64_t budget_flag = 0;
    bool no_prune = false;
    int jobs = 1;
    cmd_bond->add_option("input", bond_input, "edge-list file");
    bond_spec.attach(cmd_bond);
    cmd_bond->get_option("--k")->description("target increase of gamma_t (required)");
    auto* budget_opt =
        cmd_bond->add_option("--budget", budget_flag, "max subsets per deletion size");
    cmd_bond->add_flag("--no-prune", no_prune, "disable lower-bound start and edge-count prune");
    cmd_bond->add_option("--jobs", jobs, "worker threads for subset enumeration");

    // gen
    auto* cmd_gen = app.add_subcommand("gen", "write a generated graph to disk");
    SpecArgs gen_spec;
    std::string gen_out;
    gen_spec.attach(cmd_gen);
    cmd_gen->add_option("--out", gen_out, "output edge-list path")->required();

    // verify
    auto* cmd_verify = app.add_subcommand("verify", "formula-vs-solver sweep campaign");
    std::vector<std::string> suites;
    std::string r_n, r_k, r_a, r_b;
    int b_max = -1;
    bool include_ooh = false;
    std::string report_path, replay_path;
    std::uint64_t verify_budget_flag = 0;
    bool verify_no_prune = false;
    int verify_jobs = 1;
    cmd_verify->add_option("--suite", suites,
                           "paths, cycles, wheels, complete, bipartite, constructions, all");
    cmd_verify->add_option("--n", r_n, "n range A..B");
    cmd_verify->add_option("--k", r_k, "k range A..B");
    cmd_verify->add_option("--a", r_a, "a range A..B");
    cmd_verify->add_option("--b", r_b, "b range A..B");
    cmd_verify->add_option("--b-max", b_max, "largest construction target b");
    cmd_verify->add_flag("--include-out-of-hypothesis", include_ooh,
                         "keep out-of-hypothesis rows as skipped entries");
    cmd_verify->add_option("--report", report_path, "write the JSON report here");
    cmd_verify->add_option("--replay", replay_path, "re-evaluate a saved report");
    auto* verify_budget_opt =
        cmd_verify->add_option("--budget", verify_budget_flag, "max subsets per deletion size");
    cmd_verify->add_flag("--no-prune", verify_no_prune, "disable search pruning");
    cmd_verify->add_option("--jobs", verify_jobs, "worker threads for subset enumeration");

    // table
    auto* cmd_table = app.add_subcommand("table", "formula-only value tables");
    std::string table_tag;
    std::string t_n, t_k, t_a, t_b;
    int t_alt_k = -1;
    cmd_table->add_option("--theorem", table_tag, "theorem tag, e.g. prop3.1, thm3.12")
        ->required();
    cmd_table->add_option("--n", t_n, "row range A..B");
    cmd_table->add_option("--k", t_k, "column range A..B (thm3.6: the increase j)");
    cmd_table->add_option("--a", t_a, "row range for bipartite tables");
    cmd_table->add_option("--b", t_b, "column range for bipartite tables");
    cmd_table->add_option("--alt-k", t_alt_k,
                          "thm3.6 alternative indexing (k = j+1, so value equals --alt-k)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmd_gamma->parsed()) return run_gamma_t(gamma_input, gamma_spec);

        if (cmd_bond->parsed()) {
            if (bond_spec.k < 1) throw BadParam("bondage needs --k >= 1");
            SearchOptions opts;
            opts.subset_budget = budget_opt->count() ? budget_flag : default_budget();
            opts.prune = !no_prune;
            opts.jobs = jobs;
            return run_bondage(bond_input, bond_spec, bond_spec.k, opts);
        }

        if (cmd_gen->parsed()) return run_gen(gen_spec, gen_out);

        if (cmd_verify->parsed()) {
            SweepRanges ranges;
            if (!r_n.empty()) std::tie(ranges.n_lo, ranges.n_hi) = parse_range(r_n);
            if (!r_k.empty()) std::tie(ranges.k_lo, ranges.k_hi) = parse_range(r_k);
            if (!r_a.empty()) std::tie(ranges.a_lo, ranges.a_hi) = parse_range(r_a);
            if (!r_b.empty()) std::tie(ranges.b_lo, ranges.b_hi) = parse_range(r_b);
            ranges.b_max = b_max;
            ranges.include_out_of_hypothesis = include_ooh;
            SearchOptions opts;
            opts.subset_budget =
                verify_budget_opt->count() ? verify_budget_flag : default_budget();
            opts.prune = !verify_no_prune;
            opts.jobs = verify_jobs;
            return run_verify(suites, ranges, opts, report_path, replay_path);
        }

        if (cmd_table->parsed()) {
            auto opt_range = [](const std::string& s) -> std::optional<std::pair<int, int>> {
                if (s.empty()) return std::nullopt;
                return parse_range(s);
            };
            return run_table(table_tag, opt_range(t_n), opt_range(t_k), opt_range(t_a),
                             opt_range(t_b),
                             t_alt_k < 0 ? std::nullopt : std::optional(t_alt_k));
        }
    } catch (const ExceedsSearchBudget& ex) {
        std::cerr << ex.what() << '\n';
        return kExitBudget;
    } catch (const std::exception& ex) {
        std::cerr << ex.what() << '\n';
        return kExitInput;
    }
    return kExitInput;
}
