#pragma once

#include "r3d/graph.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace r3d {

/// Blocks (maximal biconnected pieces) and cut vertices of a graph.
///
/// Block ids follow discovery order of a depth-first traversal started from
/// vertices in increasing id order; isolated vertices become singleton blocks.
struct BlockDecomposition {
    std::size_t vertex_count = 0;
    std::vector<std::vector<Vertex>> blocks;      // each sorted ascending
    std::vector<Vertex> cut_vertices;             // sorted ascending
    std::vector<std::size_t> block_of_edge;       // parallel to Graph::edges()
    std::vector<std::vector<std::size_t>> blocks_of_vertex;

    bool is_cut_vertex(Vertex v) const { return blocks_of_vertex.at(v).size() >= 2; }
};

/// Bipartite tree (forest for disconnected input) over blocks and cut vertices.
///
/// Nodes 0..block_count-1 are blocks; node block_count + i is cut_vertices[i].
struct CutTree {
    std::size_t block_count = 0;
    std::vector<Vertex> cut_vertices;
    std::vector<std::vector<std::size_t>> adjacency;
    std::vector<std::size_t> component_of_node;
    std::size_t component_count = 0;

    std::size_t node_count() const { return adjacency.size(); }
    bool is_block_node(std::size_t node) const { return node < block_count; }
    bool is_forest() const { return component_count > 1; }
    Vertex cut_vertex_of(std::size_t node) const { return cut_vertices.at(node - block_count); }
};

BlockDecomposition decompose(const Graph& g);

CutTree build_cut_tree(const BlockDecomposition& dec);

/// True iff every block induces a clique.
bool is_block_graph(const Graph& g, const BlockDecomposition& dec);

/// Index of the first block that is not a clique, if any.
std::optional<std::size_t> find_non_clique_block(const Graph& g, const BlockDecomposition& dec);

struct EndBlockStep {
    std::size_t block;
    std::optional<Vertex> anchor;  // the one remaining cut vertex; empty for a component's last block
};

/// Leaf-peeling order of the cut tree. Every component ends with one anchor-less step.
///
/// Among simultaneously available end blocks the smallest block id is taken.
/// With `tie_break_seed` set, ties are broken by a seeded random permutation instead.
std::vector<EndBlockStep> end_block_order(const CutTree& tree,
                                          std::optional<std::uint64_t> tie_break_seed = std::nullopt);

}  // namespace r3d
