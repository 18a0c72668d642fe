#pragma once

#include "r3d/graph.hpp"
#include "r3d/io.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace r3d {

/// Instance families: clique, path, star, tree, block.
Graph bench_instance(const std::string& family, std::size_t n, std::uint64_t seed);

/// Algorithms: block-dp, brute, bnb.
long long solve_with(const std::string& algo, const Graph& g);

struct BenchConfig {
    std::string algo = "block-dp";
    std::string family = "clique";
    std::vector<std::size_t> sizes;
    std::vector<std::uint64_t> seeds{0};
    std::size_t repeat = 1;  // wall_ms is the minimum over repeats
    std::size_t jobs = 1;
};

/// One record per (size, seed), in that order, whatever the number of workers.
std::vector<BenchRecord> run_bench(const BenchConfig& config);

}  // namespace r3d
