#include "r3d/bench.hpp"
#include "r3d/block_dp.hpp"
#include "r3d/block_structure.hpp"
#include "r3d/exact_oracle.hpp"
#include "r3d/generators.hpp"
#include "r3d/io.hpp"
#include "r3d/reductions.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

using json = nlohmann::json;
using namespace r3d;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitUsage = 2;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

json labels_json(const Labeling& f) {
    json out = json::array();
    for (Label x : f.values()) out.push_back(static_cast<int>(x));
    return out;
}

void emit(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw UsageError("cannot write '" + path + "'");
    out << text;
}

template <typename T>
std::vector<T> parse_list(const std::string& text, const char* what) {
    std::vector<T> out;
    std::stringstream ss(text);
    for (std::string tok; std::getline(ss, tok, ',');) {
        if (tok.empty()) continue;
        std::size_t used = 0;
        unsigned long long value = 0;
        try {
            value = std::stoull(tok, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != tok.size() || tok[0] == '-') throw UsageError(std::string("bad ") + what + " '" + tok + "'");
        out.push_back(static_cast<T>(value));
    }
    return out;
}

struct SolveArgs {
    std::string algo = "block-dp";
    std::optional<long long> budget_ms;
    std::string graph;
};

int run_solve(const SolveArgs& a) {
    if (a.budget_ms && a.algo != "bnb") throw UsageError("--budget-ms only applies to --algo bnb");
    const Graph g = read_graph_file(a.graph).graph;
    json out{{"algo", a.algo}};
    const auto start = std::chrono::steady_clock::now();
    try {
        if (a.algo == "block-dp") {
            const auto r = solve_block_graph(g);
            out["weight"] = r.weight;
            out["labels"] = labels_json(r.witness);
            out["exact"] = true;
        } else if (a.algo == "brute") {
            const auto r = brute_force(g);
            out["weight"] = r.weight;
            out["labels"] = labels_json(r.witness);
            out["exact"] = true;
        } else {
            SearchBudget budget;
            if (a.budget_ms) budget.time_limit = std::chrono::milliseconds(*a.budget_ms);
            const auto r = branch_and_bound(g, budget);
            out["weight"] = r.weight;
            out["labels"] = labels_json(r.witness);
            out["exact"] = r.outcome == SearchOutcome::kExact;
        }
    } catch (const NotBlockGraphError& e) {
        out["error"] = "not_block_graph";
        out["block"] = e.members();
        out["message"] = e.what();
        std::cout << out.dump() << '\n';
        return kExitInvalid;
    } catch (const InstanceTooLargeError& e) {
        out["error"] = "instance_too_large";
        out["message"] = e.what();
        std::cout << out.dump() << '\n';
        return kExitInvalid;
    }
    const std::chrono::duration<double, std::milli> ms = std::chrono::steady_clock::now() - start;
    out["wall_ms"] = ms.count();
    std::cout << out.dump() << '\n';
    return kExitOk;
}

int run_verify(const std::string& graph_path, const std::string& labeling_path) {
    const Graph g = read_graph_file(graph_path).graph;
    const Labeling f = read_labeling_file(labeling_path);
    if (f.size() != g.order()) {
        throw UsageError("labeling has " + std::to_string(f.size()) + " entries, graph has " +
                         std::to_string(g.order()) + " vertices");
    }
    const auto report = verify_labeling(g, f);
    json violations = json::array();
    for (const auto& v : report.violations) {
        violations.push_back({{"vertex", v.vertex}, {"required", v.required}, {"actual", v.actual}});
    }
    const json out{{"valid", report.valid}, {"weight", labeling_weight(f)}, {"violations", violations}};
    std::cout << out.dump() << '\n';
    return report.valid ? kExitOk : kExitInvalid;
}

struct ReduceArgs {
    std::string kind;
    std::optional<std::size_t> k;
    std::string instance;
    std::string out;
    std::optional<std::string> cover;
    std::optional<std::string> dominating_set;
    std::string witness_out;
};

json role_counts(const std::vector<Role>& roles) {
    std::map<std::string, std::size_t> counts;
    for (const Role& r : roles) {
        const std::string tag = r.tag();
        ++counts[tag.substr(0, tag.find(':'))];
    }
    return counts;
}

int write_reduction(const ReduceArgs& a, const Graph& g, const std::vector<Role>& roles, json sidecar,
                    const std::optional<Labeling>& witness) {
    sidecar["counts"] = {{"vertices", g.order()}, {"edges", g.size()}, {"roles", role_counts(roles)}};
    const std::string graph_text = format_graph_file({g, role_section(roles)});
    if (a.out.empty()) {
        std::cout << graph_text;
        std::cerr << sidecar.dump() << '\n';
    } else {
        emit(graph_text, a.out);
        emit(sidecar.dump(2) + "\n", a.out + ".json");
    }
    if (witness) {
        std::ostringstream os;
        write_labeling_file(os, *witness);
        emit(os.str(), a.witness_out);
    }
    return kExitOk;
}

int run_reduce(const ReduceArgs& a) {
    if (!a.witness_out.empty() && !a.cover && !a.dominating_set) {
        throw UsageError("--witness-out needs --cover or --dominating-set");
    }
    if ((a.cover || a.dominating_set) && a.witness_out.empty()) {
        throw UsageError("--cover and --dominating-set need --witness-out");
    }
    if (a.kind == "x3c") {
        if (a.k) throw UsageError("--k only applies to 'reduce ds'");
        if (a.dominating_set) throw UsageError("--dominating-set only applies to 'reduce ds'");
        const X3CInstance inst = read_x3c_file(a.instance);
        const SplitReduction red = x3c_to_split(inst);
        std::optional<Labeling> witness;
        try {
            if (a.cover) witness = x3c_witness_to_labeling(red, parse_list<std::size_t>(*a.cover, "triple index"));
        } catch (const WitnessError& e) {
            std::cerr << json{{"error", "invalid_witness"}, {"message", e.what()}}.dump() << '\n';
            return kExitInvalid;
        }
        const json sidecar{{"reduction", "x3c"},
                           {"target", red.target},
                           {"padding",
                            {{"applied", red.q_effective != red.q_original},
                             {"q_original", red.q_original},
                             {"q_effective", red.q_effective},
                             {"triples_original", red.triples_original},
                             {"triples_effective", red.triples_effective}}}};
        return write_reduction(a, red.graph, red.roles, sidecar, witness);
    }
    if (!a.k) throw UsageError("'reduce ds' requires --k");
    if (a.cover) throw UsageError("--cover only applies to 'reduce x3c'");
    if (*a.k == 0) throw UsageError("--k must be at least 1");
    const Graph source = read_graph_file(a.instance).graph;
    const DSReduction red = ds_to_r3d(source, *a.k);
    std::optional<Labeling> witness;
    try {
        if (a.dominating_set) {
            witness = ds_witness_to_labeling(red, parse_list<Vertex>(*a.dominating_set, "vertex"));
        }
    } catch (const WitnessError& e) {
        std::cerr << json{{"error", "invalid_witness"}, {"message", e.what()}}.dump() << '\n';
        return kExitInvalid;
    }
    const json sidecar{{"reduction", "ds"},
                       {"target", red.target},
                       {"padding",
                        {{"applied", red.k_effective != red.k_original},
                         {"k_original", red.k_original},
                         {"k_effective", red.k_effective},
                         {"source_original", red.source_original},
                         {"source_effective", red.source_order}}}};
    return write_reduction(a, red.graph, red.roles, sidecar, witness);
}

struct GenArgs {
    std::string kind;
    std::optional<std::uint64_t> seed;
    std::size_t n = 10;
    std::size_t max_block = 4;
    std::size_t q = 2;
    std::optional<std::size_t> t;
    std::string out;
};

int run_gen(const GenArgs& a) {
    if (!a.seed) throw UsageError("gen requires --seed");
    std::ostringstream os;
    if (a.kind == "block-graph") {
        if (a.max_block < 2) throw UsageError("--max-block must be at least 2");
        write_graph_file(os, {gen_block_graph(*a.seed, a.n, a.max_block), {}});
    } else if (a.kind == "tree") {
        write_graph_file(os, {gen_tree(*a.seed, a.n), {}});
    } else {
        const std::size_t t = a.t.value_or(2 * a.q);
        if (t < a.q) throw UsageError("--t must be at least --q");
        write_x3c_file(os, gen_x3c(*a.seed, a.q, t));
    }
    emit(os.str(), a.out);
    return kExitOk;
}

struct BenchArgs {
    BenchConfig config;
    std::string sizes;
    std::string seeds = "0";
    std::optional<std::size_t> jobs;
    std::string out;
};

int run_bench_cmd(BenchArgs a) {
    a.config.sizes = parse_list<std::size_t>(a.sizes, "size");
    a.config.seeds = parse_list<std::uint64_t>(a.seeds, "seed");
    if (a.config.sizes.empty()) throw UsageError("--sizes is empty");
    if (a.config.seeds.empty()) throw UsageError("--seed is empty");
    if (a.jobs) {
        a.config.jobs = *a.jobs;
    } else if (const char* env = std::getenv("R3D_BENCH_JOBS")) {
        a.config.jobs = static_cast<std::size_t>(std::strtoul(env, nullptr, 10));
    }
    if (a.config.algo == "brute" && a.config.family == "clique") {
        for (std::size_t n : a.config.sizes) {
            if (n > kBruteForceMaxOrder) throw UsageError("--algo brute handles at most 14 vertices");
        }
    }
    std::ostringstream os;
    os << kBenchHeader << '\n';
    for (const auto& r : run_bench(a.config)) os << format_bench_row(r) << '\n';
    emit(os.str(), a.out);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact solvers, verifiers and reductions for Roman {3}-domination"};
    app.require_subcommand(1);

    SolveArgs solve;
    auto* solve_cmd = app.add_subcommand("solve", "Compute an optimal labeling");
    solve_cmd->add_option("--algo", solve.algo, "block-dp, brute or bnb")
        ->check(CLI::IsMember({"block-dp", "brute", "bnb"}));
    solve_cmd->add_option("--budget-ms", solve.budget_ms, "Time budget for bnb");
    solve_cmd->add_option("graph", solve.graph, "Graph file")->required();

    std::string verify_graph, verify_labeling;
    auto* verify_cmd = app.add_subcommand("verify", "Check a labeling");
    verify_cmd->add_option("graph", verify_graph, "Graph file")->required();
    verify_cmd->add_option("labeling", verify_labeling, "Labeling file")->required();

    ReduceArgs reduce;
    auto* reduce_cmd = app.add_subcommand("reduce", "Build a hardness reduction instance");
    reduce_cmd->add_option("kind", reduce.kind, "x3c or ds")->required()->check(CLI::IsMember({"x3c", "ds"}));
    reduce_cmd->add_option("instance", reduce.instance, "X3C file or graph file")->required();
    reduce_cmd->add_option("--k", reduce.k, "Dominating set budget");
    reduce_cmd->add_option("--out", reduce.out, "Graph output path (sidecar goes to <out>.json)");
    reduce_cmd->add_option("--cover", reduce.cover, "Comma-separated triple indices");
    reduce_cmd->add_option("--dominating-set", reduce.dominating_set, "Comma-separated source vertices");
    reduce_cmd->add_option("--witness-out", reduce.witness_out, "Labeling output path for the witness");

    GenArgs gen;
    auto* gen_cmd = app.add_subcommand("gen", "Generate an instance");
    gen_cmd->add_option("kind", gen.kind, "block-graph, tree or x3c")
        ->required()
        ->check(CLI::IsMember({"block-graph", "tree", "x3c"}));
    gen_cmd->add_option("--seed", gen.seed, "64-bit seed");
    gen_cmd->add_option("--n", gen.n, "Vertex count");
    gen_cmd->add_option("--max-block", gen.max_block, "Largest block size");
    gen_cmd->add_option("--q", gen.q, "Cover size");
    gen_cmd->add_option("--t", gen.t, "Triple count (default 2q)");
    gen_cmd->add_option("--out", gen.out, "Output path");

    BenchArgs bench;
    auto* bench_cmd = app.add_subcommand("bench", "Time a solver on an instance family");
    bench_cmd->add_option("--algo", bench.config.algo, "block-dp, brute or bnb")
        ->check(CLI::IsMember({"block-dp", "brute", "bnb"}));
    bench_cmd->add_option("--family", bench.config.family, "clique, path, star, tree or block")
        ->check(CLI::IsMember({"clique", "path", "star", "tree", "block"}));
    bench_cmd->add_option("--sizes", bench.sizes, "Comma-separated sizes")->required();
    bench_cmd->add_option("--seed", bench.seeds, "Comma-separated seeds");
    bench_cmd->add_option("--repeat", bench.config.repeat, "Runs per instance; the minimum time is kept");
    bench_cmd->add_option("--jobs", bench.jobs, "Parallel workers (default R3D_BENCH_JOBS or 1)");
    bench_cmd->add_option("--out", bench.out, "CSV output path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*solve_cmd) return run_solve(solve);
        if (*verify_cmd) return run_verify(verify_graph, verify_labeling);
        if (*reduce_cmd) return run_reduce(reduce);
        if (*gen_cmd) return run_gen(gen);
        return run_bench_cmd(bench);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}
