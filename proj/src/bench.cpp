#include "r3d/bench.hpp"

#include "r3d/block_dp.hpp"
#include "r3d/exact_oracle.hpp"
#include "r3d/generators.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <stdexcept>
#include <thread>

namespace r3d {

Graph bench_instance(const std::string& family, std::size_t n, std::uint64_t seed) {
    if (family == "clique") return complete_graph(n);
    if (family == "path") return path_graph(n);
    if (family == "star") return star_graph(n == 0 ? 0 : n - 1);
    if (family == "tree") return gen_tree(seed, n);
    if (family == "block") return gen_block_graph(seed, n, 5);
    throw std::invalid_argument("unknown family '" + family + "'");
}

long long solve_with(const std::string& algo, const Graph& g) {
    if (algo == "block-dp") return solve_block_graph(g).weight;
    if (algo == "brute") return brute_force(g).weight;
    if (algo == "bnb") return branch_and_bound(g).weight;
    throw std::invalid_argument("unknown algorithm '" + algo + "'");
}

std::vector<BenchRecord> run_bench(const BenchConfig& config) {
    if (config.repeat == 0) throw std::invalid_argument("repeat must be at least 1");
    // Validate names before spawning workers.
    bench_instance(config.family, 0, 0);
    solve_with(config.algo, Graph{});

    struct Task {
        std::size_t n;
        std::uint64_t seed;
    };
    std::vector<Task> tasks;
    for (std::size_t n : config.sizes) {
        for (std::uint64_t seed : config.seeds) tasks.push_back({n, seed});
    }
    std::vector<BenchRecord> records(tasks.size());
    std::vector<std::exception_ptr> errors(tasks.size());
    std::atomic<std::size_t> next{0};

    auto worker = [&] {
        for (std::size_t i = next++; i < tasks.size(); i = next++) {
            try {
                const Graph g = bench_instance(config.family, tasks[i].n, tasks[i].seed);
                BenchRecord r{config.algo, g.order(), g.size(), tasks[i].seed, 0.0, 0};
                double best = -1.0;
                for (std::size_t k = 0; k < config.repeat; ++k) {
                    const auto start = std::chrono::steady_clock::now();
                    r.weight = solve_with(config.algo, g);
                    const std::chrono::duration<double, std::milli> ms = std::chrono::steady_clock::now() - start;
                    if (best < 0 || ms.count() < best) best = ms.count();
                }
                r.wall_ms = best;
                records[i] = r;
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };

    const std::size_t jobs = std::clamp<std::size_t>(config.jobs, 1, std::max<std::size_t>(tasks.size(), 1));
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (std::size_t j = 0; j < jobs; ++j) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    for (const auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
    return records;
}

}  // namespace r3d
