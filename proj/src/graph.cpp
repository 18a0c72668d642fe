#include "r3d/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <string>

namespace r3d {

Graph::Graph(std::size_t n, std::span<const Edge> edges) : adjacency_(n) {
    edges_.reserve(edges.size());
    for (auto [u, v] : edges) {
        if (u >= n || v >= n) {
            throw GraphError("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                             ") references a vertex outside 0.." + std::to_string(n == 0 ? 0 : n - 1));
        }
        if (u == v) {
            throw GraphError("self-loop (" + std::to_string(u) + ", " + std::to_string(v) + ")");
        }
        edges_.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    for (auto [u, v] : edges_) {
        adjacency_[u].push_back(v);
        adjacency_[v].push_back(u);
    }
    for (auto& list : adjacency_) std::sort(list.begin(), list.end());
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    const auto& list = adjacency_.at(u);
    return std::binary_search(list.begin(), list.end(), v);
}

Graph build_graph(std::size_t n, std::span<const Edge> edges) { return Graph(n, edges); }

Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep) {
    std::vector<std::int64_t> position(g.order(), -1);
    for (std::size_t i = 0; i < keep.size(); ++i) position[keep[i]] = static_cast<std::int64_t>(i);
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges()) {
        if (position[u] >= 0 && position[v] >= 0) {
            edges.emplace_back(static_cast<Vertex>(position[u]), static_cast<Vertex>(position[v]));
        }
    }
    return Graph(keep.size(), edges);
}

Labeling::Labeling(std::size_t n, Label fill) : labels_(n, fill) {
    if (fill > kMaxLabel) throw std::invalid_argument("label out of range 0..3");
}

Labeling::Labeling(std::vector<Label> labels) : labels_(std::move(labels)) {
    for (std::size_t v = 0; v < labels_.size(); ++v) {
        if (labels_[v] > kMaxLabel) {
            throw std::invalid_argument("label " + std::to_string(labels_[v]) + " at vertex " +
                                        std::to_string(v) + " out of range 0..3");
        }
    }
}

void Labeling::set(Vertex v, Label value) {
    if (value > kMaxLabel) throw std::invalid_argument("label out of range 0..3");
    labels_.at(v) = value;
}

int open_label_sum(const Graph& g, const Labeling& f, Vertex u) {
    int sum = 0;
    for (Vertex w : g.neighbors(u)) sum += f[w];
    return sum;
}

int closed_label_sum(const Graph& g, const Labeling& f, Vertex u) {
    int sum = f.at(u);
    for (Vertex w : g.neighbors(u)) sum += f[w];
    return sum;
}

VerificationReport verify_labeling(const Graph& g, const Labeling& f) {
    if (f.size() != g.order()) {
        throw std::invalid_argument("labeling has " + std::to_string(f.size()) + " entries but graph has " +
                                    std::to_string(g.order()) + " vertices");
    }
    VerificationReport report;
    for (Vertex u = 0; u < g.order(); ++u) {
        const int required = required_neighbor_sum(f[u]);
        if (required == 0) continue;
        const int actual = open_label_sum(g, f, u);
        if (actual < required) report.violations.push_back({u, required, actual});
    }
    report.valid = report.violations.empty();
    return report;
}

bool is_roman3_dominating(const Graph& g, const Labeling& f) {
    if (f.size() != g.order()) return false;
    for (Vertex u = 0; u < g.order(); ++u) {
        const int required = required_neighbor_sum(f[u]);
        if (required != 0 && open_label_sum(g, f, u) < required) return false;
    }
    return true;
}

long long labeling_weight(const Labeling& f) {
    return std::accumulate(f.values().begin(), f.values().end(), 0LL);
}

std::vector<std::size_t> connected_components(const Graph& g, std::size_t* count) {
    constexpr auto kUnset = static_cast<std::size_t>(-1);
    std::vector<std::size_t> component(g.order(), kUnset);
    std::size_t next = 0;
    std::queue<Vertex> frontier;
    for (Vertex s = 0; s < g.order(); ++s) {
        if (component[s] != kUnset) continue;
        component[s] = next;
        frontier.push(s);
        while (!frontier.empty()) {
            const Vertex u = frontier.front();
            frontier.pop();
            for (Vertex w : g.neighbors(u)) {
                if (component[w] == kUnset) {
                    component[w] = next;
                    frontier.push(w);
                }
            }
        }
        ++next;
    }
    if (count) *count = next;
    return component;
}

bool is_dominating_set(const Graph& g, std::span<const Vertex> set) {
    std::vector<char> covered(g.order(), 0);
    for (Vertex s : set) {
        covered.at(s) = 1;
        for (Vertex w : g.neighbors(s)) covered[w] = 1;
    }
    return std::all_of(covered.begin(), covered.end(), [](char c) { return c != 0; });
}

}  // namespace r3d
