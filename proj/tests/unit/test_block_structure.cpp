#include <doctest.h>

#include "support/oracles.hpp"

#include "r3d/block_structure.hpp"
#include "r3d/generators.hpp"

#include <algorithm>
#include <set>

using namespace r3d;
using namespace r3d::testing;

TEST_CASE("blocks of the hub example") {
    const Graph g = sample_block_graph();
    const BlockDecomposition dec = decompose(g);
    std::set<std::vector<Vertex>> blocks(dec.blocks.begin(), dec.blocks.end());
    const std::set<std::vector<Vertex>> expected{{0, 1, 2}, {2, 3}, {2, 4, 5, 6}, {6, 7}};
    CHECK(blocks == expected);
    CHECK(dec.cut_vertices == std::vector<Vertex>{2, 6});
    CHECK(dec.is_cut_vertex(2));
    CHECK_FALSE(dec.is_cut_vertex(4));
    CHECK(is_block_graph(g, dec));
    for (std::size_t e = 0; e < g.size(); ++e) {
        const auto [u, v] = g.edges()[e];
        const auto& b = dec.blocks[dec.block_of_edge[e]];
        CHECK(std::binary_search(b.begin(), b.end(), u));
        CHECK(std::binary_search(b.begin(), b.end(), v));
    }
}

TEST_CASE("cycles are one block and not cliques") {
    const Graph c = cycle_graph(5);
    const BlockDecomposition dec = decompose(c);
    CHECK(dec.blocks.size() == 1);
    CHECK(dec.cut_vertices.empty());
    CHECK_FALSE(is_block_graph(c, dec));
    CHECK(find_non_clique_block(c, dec) == std::optional<std::size_t>{0});
}

TEST_CASE("isolated vertices are singleton blocks") {
    const Graph g = disjoint_union(complete_graph(1), path_graph(2));
    const BlockDecomposition dec = decompose(g);
    CHECK(dec.blocks.size() == 2);
    const CutTree tree = build_cut_tree(dec);
    CHECK(tree.component_count == 2);
    CHECK(tree.is_forest());
    const auto order = end_block_order(tree);
    CHECK(order.size() == 2);
    CHECK_FALSE(order[0].anchor);
    CHECK_FALSE(order[1].anchor);
}

TEST_CASE("cut tree is a tree for connected block graphs") {
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
        const Graph g = gen_block_graph(seed, 20, 4);
        const BlockDecomposition dec = decompose(g);
        const CutTree tree = build_cut_tree(dec);
        std::size_t degree_sum = 0;
        for (const auto& adj : tree.adjacency) degree_sum += adj.size();
        CHECK(tree.component_count == 1);
        CHECK(degree_sum / 2 + 1 == tree.node_count());
    }
}

TEST_CASE("end block order visits each block once with a valid anchor") {
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
        const Graph g = gen_block_graph(seed, 25, 5);
        const BlockDecomposition dec = decompose(g);
        const CutTree tree = build_cut_tree(dec);
        for (std::optional<std::uint64_t> tie : {std::optional<std::uint64_t>{}, std::optional<std::uint64_t>{seed}}) {
            const auto order = end_block_order(tree, tie);
            REQUIRE(order.size() == dec.blocks.size());
            std::vector<int> seen(dec.blocks.size(), 0);
            for (std::size_t i = 0; i < order.size(); ++i) {
                ++seen[order[i].block];
                const auto& b = dec.blocks[order[i].block];
                if (order[i].anchor) {
                    CHECK(dec.is_cut_vertex(*order[i].anchor));
                    CHECK(std::binary_search(b.begin(), b.end(), *order[i].anchor));
                } else {
                    CHECK(i + 1 == order.size());
                }
            }
            CHECK(std::all_of(seen.begin(), seen.end(), [](int s) { return s == 1; }));
        }
    }
}

TEST_CASE("block graph check agrees with forbidden subgraphs") {
    for (std::uint64_t seed = 1; seed <= 300; ++seed) {
        const Graph g = random_graph(seed, 3 + seed % 8, 0.3 + 0.05 * static_cast<double>(seed % 5));
        CHECK(is_block_graph(g, decompose(g)) == is_block_graph_by_forbidden_subgraphs(g));
    }
}
