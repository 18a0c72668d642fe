#pragma once

#include "r3d/graph.hpp"
#include "r3d/reductions.hpp"

#include <cstdint>

namespace r3d {

/// Connected block graph on exactly n_target vertices: starting from one vertex,
/// repeatedly attach a clique of random size 2..max_block_size at a uniformly random
/// existing vertex (the last clique is shrunk to hit n_target).
/// Throws std::invalid_argument if max_block_size < 2.
Graph gen_block_graph(std::uint64_t seed, std::size_t n_target, std::size_t max_block_size);

/// Uniform labeled tree on n vertices via a random Pruefer sequence.
Graph gen_tree(std::uint64_t seed, std::size_t n);

/// Plants an exact cover of the 3q elements, adds t - q random triples and shuffles
/// the triple order. Throws std::invalid_argument if t < q.
X3CInstance gen_x3c(std::uint64_t seed, std::size_t q, std::size_t t);

Graph complete_graph(std::size_t n);
Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph star_graph(std::size_t leaves);  // center 0

/// Vertex-disjoint union; the vertices of b are shifted by a.order().
Graph disjoint_union(const Graph& a, const Graph& b);

}  // namespace r3d
