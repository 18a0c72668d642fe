#pragma once

#include "r3d/block_dp.hpp"
#include "r3d/graph.hpp"
#include "r3d/reductions.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace r3d::testing {

/// Minimum weight per root state of the partial graph induced on `vertices`, by
/// enumerating all 4^k labelings. Non-root vertices must be dominated inside it.
StateVector rooted_states_brute_force(const Graph& g, std::span<const Vertex> vertices, Vertex root);

/// Block composition by a knapsack over the children's capped label sum. Shares
/// nothing with the recurrence code beyond the state definitions.
StateVector compose_by_knapsack(const StateVector& base, std::span<const StateVector> children);

/// All pairwise non-isomorphic block graphs with 1..max_n vertices whose blocks have at
/// most max_block vertices. Disconnected graphs are included unless connected_only.
std::vector<Graph> all_block_graphs(std::size_t max_n, std::size_t max_block, bool connected_only);

/// All non-isomorphic trees with 1..max_n vertices.
std::vector<Graph> all_trees(std::size_t max_n);

/// Chordal and diamond-free, checked without the block decomposition.
bool is_block_graph_by_forbidden_subgraphs(const Graph& g);

/// Degree-sequence split test.
bool is_split_by_degrees(const Graph& g);

Graph random_graph(std::uint64_t seed, std::size_t n, double edge_probability);

/// Applies a vertex permutation: vertex v becomes perm[v].
Graph relabel(const Graph& g, std::span<const Vertex> perm);

/// Eight vertices: a triangle and a K4 sharing hub vertex 2, a pendant on the hub and one on the K4.
Graph sample_block_graph();
/// Six elements, four triples, exact cover {0, 2}.
X3CInstance sample_x3c_instance();

}  // namespace r3d::testing
