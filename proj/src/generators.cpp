#include "r3d/generators.hpp"

#include "r3d/random.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace r3d {

Graph gen_block_graph(std::uint64_t seed, std::size_t n_target, std::size_t max_block_size) {
    if (max_block_size < 2) throw std::invalid_argument("max_block_size must be at least 2");
    if (n_target == 0) return Graph{};
    Rng rng(seed);
    std::vector<Edge> edges;
    std::size_t n = 1;
    while (n < n_target) {
        std::size_t size = uniform_between(rng, 2, max_block_size);
        size = std::min(size, n_target - n + 1);
        const auto attach = static_cast<Vertex>(uniform_below(rng, n));
        std::vector<Vertex> members{attach};
        for (std::size_t i = 1; i < size; ++i) members.push_back(static_cast<Vertex>(n++));
        for (std::size_t i = 0; i < members.size(); ++i) {
            for (std::size_t j = i + 1; j < members.size(); ++j) edges.emplace_back(members[i], members[j]);
        }
    }
    return Graph(n, edges);
}

Graph gen_tree(std::uint64_t seed, std::size_t n) {
    if (n <= 1) return Graph(n, {});
    if (n == 2) {
        const Edge e{0, 1};
        return Graph(2, std::span<const Edge>(&e, 1));
    }
    Rng rng(seed);
    std::vector<Vertex> code(n - 2);
    for (auto& c : code) c = static_cast<Vertex>(uniform_below(rng, n));
    std::vector<std::size_t> degree(n, 1);
    for (Vertex c : code) ++degree[c];
    std::set<Vertex> leaves;
    for (Vertex v = 0; v < n; ++v) {
        if (degree[v] == 1) leaves.insert(v);
    }
    std::vector<Edge> edges;
    for (Vertex c : code) {
        const Vertex leaf = *leaves.begin();
        leaves.erase(leaves.begin());
        edges.emplace_back(leaf, c);
        if (--degree[c] == 1) leaves.insert(c);
    }
    const Vertex u = *leaves.begin();
    const Vertex v = *std::next(leaves.begin());
    edges.emplace_back(u, v);
    return Graph(n, edges);
}

X3CInstance gen_x3c(std::uint64_t seed, std::size_t q, std::size_t t) {
    if (t < q) throw std::invalid_argument("t must be at least q");
    Rng rng(seed);
    const std::size_t universe = 3 * q;
    std::vector<std::uint32_t> perm(universe);
    std::iota(perm.begin(), perm.end(), 0u);
    portable_shuffle(std::span<std::uint32_t>(perm), rng);

    std::vector<Triple> triples;
    for (std::size_t i = 0; i < q; ++i) {
        Triple tr{perm[3 * i], perm[3 * i + 1], perm[3 * i + 2]};
        std::sort(tr.begin(), tr.end());
        triples.push_back(tr);
    }
    for (std::size_t i = q; i < t; ++i) {
        Triple tr{};
        tr[0] = static_cast<std::uint32_t>(uniform_below(rng, universe));
        do tr[1] = static_cast<std::uint32_t>(uniform_below(rng, universe));
        while (tr[1] == tr[0]);
        do tr[2] = static_cast<std::uint32_t>(uniform_below(rng, universe));
        while (tr[2] == tr[0] || tr[2] == tr[1]);
        std::sort(tr.begin(), tr.end());
        triples.push_back(tr);
    }

    std::vector<std::size_t> position(t);
    std::iota(position.begin(), position.end(), std::size_t{0});
    portable_shuffle(std::span<std::size_t>(position), rng);
    X3CInstance inst;
    inst.universe_size = universe;
    inst.triples.resize(t);
    for (std::size_t i = 0; i < t; ++i) inst.triples[position[i]] = triples[i];
    for (std::size_t i = 0; i < q; ++i) inst.planted_cover.push_back(position[i]);
    std::sort(inst.planted_cover.begin(), inst.planted_cover.end());
    return inst;
}

Graph complete_graph(std::size_t n) {
    std::vector<Edge> edges;
    edges.reserve(n * (n - (n > 0 ? 1 : 0)) / 2);
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    }
    return Graph(n, edges);
}

Graph path_graph(std::size_t n) {
    std::vector<Edge> edges;
    for (Vertex v = 1; v < n; ++v) edges.emplace_back(v - 1, v);
    return Graph(n, edges);
}

Graph cycle_graph(std::size_t n) {
    if (n < 3) throw std::invalid_argument("a cycle needs at least 3 vertices");
    std::vector<Edge> edges;
    for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, static_cast<Vertex>((v + 1) % n));
    return Graph(n, edges);
}

Graph star_graph(std::size_t leaves) {
    std::vector<Edge> edges;
    for (Vertex v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
    return Graph(leaves + 1, edges);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    std::vector<Edge> edges = a.edges();
    const auto shift = static_cast<Vertex>(a.order());
    for (auto [u, v] : b.edges()) edges.emplace_back(u + shift, v + shift);
    return Graph(a.order() + b.order(), edges);
}

}  // namespace r3d
