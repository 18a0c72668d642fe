#include "oracles.hpp"

#include "r3d/random.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace r3d::testing {

StateVector rooted_states_brute_force(const Graph& g, std::span<const Vertex> vertices, Vertex root) {
    const std::size_t k = vertices.size();
    if (k > 10) throw std::invalid_argument("rooted brute force handles at most 10 vertices");
    std::vector<int> local(g.order(), -1);
    for (std::size_t i = 0; i < k; ++i) local[vertices[i]] = static_cast<int>(i);
    if (local.at(root) < 0) throw std::invalid_argument("root is not in the vertex set");
    std::vector<std::vector<std::size_t>> adj(k);
    for (std::size_t i = 0; i < k; ++i) {
        for (Vertex w : g.neighbors(vertices[i])) {
            if (local[w] >= 0) adj[i].push_back(static_cast<std::size_t>(local[w]));
        }
    }
    const auto r = static_cast<std::size_t>(local[root]);

    StateVector best;
    std::vector<int> labels(k, 0);
    std::size_t total = 1;
    for (std::size_t i = 0; i < k; ++i) total *= 4;
    for (std::size_t code = 0; code < total; ++code) {
        std::size_t c = code;
        long long weight = 0;
        for (std::size_t i = 0; i < k; ++i) {
            labels[i] = static_cast<int>(c % 4);
            c /= 4;
            weight += labels[i];
        }
        bool ok = true;
        int root_sum = 0;
        for (std::size_t i = 0; i < k && ok; ++i) {
            int sum = 0;
            for (std::size_t j : adj[i]) sum += labels[j];
            if (i == r) {
                root_sum = sum;
                continue;
            }
            ok = sum >= required_neighbor_sum(static_cast<Label>(labels[i]));
        }
        if (!ok) continue;
        const RootState s = classify_root(static_cast<Label>(labels[r]), root_sum);
        best[s] = min(best[s], ExtWeight(weight));
    }
    return best;
}

StateVector compose_by_knapsack(const StateVector& base, std::span<const StateVector> children) {
    // Capped neighbour sum the base root already sees inside its own graph.
    constexpr std::array<int, kStateCount> internal{3, 2, 0, 0, 2, 1, 0, 1, 0};
    StateVector out;
    for (std::size_t b = 0; b < kStateCount; ++b) {
        if (!base.weights[b].is_finite()) continue;
        const int l1 = root_label(state_at(b));
        for (int target = 0; target <= 3; ++target) {
            const int clique_sum = std::min(3, l1 + target);
            std::array<ExtWeight, 4> dp{};
            dp[0] = ExtWeight(0);
            for (const StateVector& child : children) {
                std::array<ExtWeight, 4> next{};
                for (int x = 0; x <= 3; ++x) {
                    if (!dp[x].is_finite()) continue;
                    for (std::size_t s = 0; s < kStateCount; ++s) {
                        if (clique_sum_needed(state_at(s)) > clique_sum) continue;
                        const int nx = std::min(3, x + root_label(state_at(s)));
                        next[nx] = min(next[nx], dp[x] + child.weights[s]);
                    }
                }
                dp = next;
            }
            if (!dp[target].is_finite()) continue;
            const RootState s = classify_root(static_cast<Label>(l1), internal[b] + target);
            out[s] = min(out[s], base.weights[b] + dp[target]);
        }
    }
    return out;
}

namespace {

using Canon = std::vector<std::uint8_t>;

// Smallest upper-triangle adjacency string over all vertex permutations.
Canon canonical_form(const Graph& g) {
    const std::size_t n = g.order();
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), Vertex{0});
    Canon best;
    Canon cur(n * (n - (n > 0 ? 1 : 0)) / 2);
    std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
    for (auto [u, v] : g.edges()) adj[u][v] = adj[v][u] = 1;
    do {
        std::size_t k = 0;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) cur[k++] = static_cast<std::uint8_t>(adj[perm[i]][perm[j]]);
        }
        if (best.empty() || cur > best) best = cur;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

Graph attach_clique(const Graph& g, Vertex at, std::size_t size) {
    std::vector<Edge> edges = g.edges();
    std::vector<Vertex> members{at};
    for (std::size_t i = 1; i < size; ++i) members.push_back(static_cast<Vertex>(g.order() + i - 1));
    for (std::size_t i = 0; i < members.size(); ++i) {
        for (std::size_t j = i + 1; j < members.size(); ++j) edges.emplace_back(members[i], members[j]);
    }
    return Graph(g.order() + size - 1, edges);
}

}  // namespace

std::vector<Graph> all_block_graphs(std::size_t max_n, std::size_t max_block, bool connected_only) {
    std::vector<std::vector<Graph>> by_order(max_n + 1);
    std::vector<std::set<Canon>> seen(max_n + 1);
    auto offer = [&](const Graph& g) {
        if (g.order() > max_n) return;
        if (seen[g.order()].insert(canonical_form(g)).second) by_order[g.order()].push_back(g);
    };
    if (max_n >= 1) offer(Graph(1, {}));
    for (std::size_t n = 1; n <= max_n; ++n) {
        for (std::size_t i = 0; i < by_order[n].size(); ++i) {
            const Graph g = by_order[n][i];
            if (!connected_only) offer(Graph(n + 1, g.edges()));
            for (std::size_t size = 2; size <= max_block && n + size - 1 <= max_n; ++size) {
                for (Vertex v = 0; v < n; ++v) offer(attach_clique(g, v, size));
            }
        }
    }
    std::vector<Graph> out;
    for (auto& level : by_order) {
        for (auto& g : level) out.push_back(std::move(g));
    }
    return out;
}

std::vector<Graph> all_trees(std::size_t max_n) { return all_block_graphs(max_n, 2, true); }

namespace {

// Maximum cardinality search order; the graph is chordal iff its reverse is a
// perfect elimination ordering.
bool is_chordal(const Graph& g) {
    const std::size_t n = g.order();
    std::vector<int> weight(n, 0);
    std::vector<char> numbered(n, 0);
    std::vector<std::size_t> position(n, 0);
    std::vector<Vertex> order;
    for (std::size_t step = 0; step < n; ++step) {
        Vertex pick = 0;
        int best = -1;
        for (Vertex v = 0; v < n; ++v) {
            if (!numbered[v] && weight[v] > best) {
                best = weight[v];
                pick = v;
            }
        }
        numbered[pick] = 1;
        position[pick] = step;
        order.push_back(pick);
        for (Vertex w : g.neighbors(pick)) {
            if (!numbered[w]) ++weight[w];
        }
    }
    // For each vertex, its earlier neighbours must form a clique.
    for (Vertex v = 0; v < n; ++v) {
        std::vector<Vertex> earlier;
        for (Vertex w : g.neighbors(v)) {
            if (position[w] < position[v]) earlier.push_back(w);
        }
        for (std::size_t i = 0; i < earlier.size(); ++i) {
            for (std::size_t j = i + 1; j < earlier.size(); ++j) {
                if (!g.has_edge(earlier[i], earlier[j])) return false;
            }
        }
    }
    return true;
}

}  // namespace

bool is_block_graph_by_forbidden_subgraphs(const Graph& g) {
    for (auto [u, v] : g.edges()) {
        std::vector<Vertex> common;
        std::set_intersection(g.neighbors(u).begin(), g.neighbors(u).end(), g.neighbors(v).begin(),
                              g.neighbors(v).end(), std::back_inserter(common));
        for (std::size_t i = 0; i < common.size(); ++i) {
            for (std::size_t j = i + 1; j < common.size(); ++j) {
                if (!g.has_edge(common[i], common[j])) return false;  // diamond
            }
        }
    }
    return is_chordal(g);
}

bool is_split_by_degrees(const Graph& g) {
    std::vector<long long> d;
    for (Vertex v = 0; v < g.order(); ++v) d.push_back(static_cast<long long>(g.degree(v)));
    std::sort(d.rbegin(), d.rend());
    long long m = 0;
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (d[i] >= static_cast<long long>(i)) m = static_cast<long long>(i) + 1;
    }
    long long head = 0, tail = 0;
    for (std::size_t i = 0; i < d.size(); ++i) (static_cast<long long>(i) < m ? head : tail) += d[i];
    return head == m * (m - 1) + tail;
}

Graph random_graph(std::uint64_t seed, std::size_t n, double edge_probability) {
    Rng rng(seed);
    const auto threshold = static_cast<std::uint64_t>(edge_probability * 1'000'000.0);
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            if (uniform_below(rng, 1'000'000) < threshold) edges.emplace_back(u, v);
        }
    }
    return Graph(n, edges);
}

Graph relabel(const Graph& g, std::span<const Vertex> perm) {
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
    return Graph(g.order(), edges);
}

Graph sample_block_graph() {
    const std::vector<Edge> edges{{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {2, 5},
                                  {2, 6}, {4, 5}, {4, 6}, {5, 6}, {6, 7}};
    return Graph(8, edges);
}

X3CInstance sample_x3c_instance() {
    X3CInstance inst;
    inst.universe_size = 6;
    inst.triples = {{0, 1, 2}, {0, 1, 3}, {3, 4, 5}, {1, 4, 5}};
    inst.planted_cover = {0, 2};
    return inst;
}

}  // namespace r3d::testing
