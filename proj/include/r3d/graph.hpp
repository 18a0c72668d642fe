#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace r3d {

using Vertex = std::uint32_t;
using Label = std::uint8_t;
using Edge = std::pair<Vertex, Vertex>;

inline constexpr Label kMaxLabel = 3;

class GraphError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Simple undirected graph on vertices 0..n-1. Immutable after construction.
///
/// Edges are stored normalized (u < v) and sorted; adjacency lists are sorted.
class Graph {
public:
    Graph() = default;

    /// Builds a graph from an edge list. Duplicate and reversed pairs collapse.
    /// Throws GraphError on self-loops or out-of-range ids.
    Graph(std::size_t n, std::span<const Edge> edges);

    std::size_t order() const { return adjacency_.size(); }
    std::size_t size() const { return edges_.size(); }

    std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }
    std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }
    bool has_edge(Vertex u, Vertex v) const;

    const std::vector<Edge>& edges() const { return edges_; }

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::vector<std::vector<Vertex>> adjacency_;
    std::vector<Edge> edges_;
};

Graph build_graph(std::size_t n, std::span<const Edge> edges);

/// Induced subgraph on `keep` (renumbered in the given order).
Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep);

/// Total vertex labeling with values in {0,1,2,3}.
class Labeling {
public:
    Labeling() = default;
    explicit Labeling(std::size_t n, Label fill = 0);
    explicit Labeling(std::vector<Label> labels);

    std::size_t size() const { return labels_.size(); }
    Label operator[](Vertex v) const { return labels_[v]; }
    Label at(Vertex v) const { return labels_.at(v); }
    void set(Vertex v, Label value);

    const std::vector<Label>& values() const { return labels_; }

    friend bool operator==(const Labeling&, const Labeling&) = default;

private:
    std::vector<Label> labels_;
};

struct Violation {
    Vertex vertex;
    int required;  // open-neighbourhood sum demanded by the vertex label
    int actual;
    friend bool operator==(const Violation&, const Violation&) = default;
};

struct VerificationReport {
    bool valid = true;
    std::vector<Violation> violations;
};

/// Open-neighbourhood demand of a label: 3 for 0, 2 for 1, none for 2 and 3.
constexpr int required_neighbor_sum(Label label) {
    switch (label) {
        case 0: return 3;
        case 1: return 2;
        default: return 0;
    }
}

int open_label_sum(const Graph& g, const Labeling& f, Vertex u);
int closed_label_sum(const Graph& g, const Labeling& f, Vertex u);

/// Checks the Roman {3}-domination condition at every vertex and lists all failures.
VerificationReport verify_labeling(const Graph& g, const Labeling& f);

bool is_roman3_dominating(const Graph& g, const Labeling& f);

long long labeling_weight(const Labeling& f);

/// Connected component id per vertex; ids are assigned in order of the smallest vertex.
std::vector<std::size_t> connected_components(const Graph& g, std::size_t* count = nullptr);

bool is_dominating_set(const Graph& g, std::span<const Vertex> set);

}  // namespace r3d
