#include "r3d/block_structure.hpp"

#include "r3d/random.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>

namespace r3d {

namespace {

constexpr auto kUnvisited = static_cast<std::size_t>(-1);

struct Frame {
    Vertex vertex;
    std::size_t parent_edge;
    std::size_t next;
};

}  // namespace

BlockDecomposition decompose(const Graph& g) {
    const std::size_t n = g.order();
    const auto& edges = g.edges();

    std::vector<std::vector<std::pair<Vertex, std::size_t>>> incident(n);
    for (std::size_t e = 0; e < edges.size(); ++e) {
        incident[edges[e].first].emplace_back(edges[e].second, e);
        incident[edges[e].second].emplace_back(edges[e].first, e);
    }

    BlockDecomposition dec;
    dec.vertex_count = n;
    dec.block_of_edge.assign(edges.size(), kUnvisited);

    std::vector<std::size_t> disc(n, kUnvisited), low(n, 0);
    std::vector<Frame> stack;
    std::vector<std::size_t> edge_stack;
    std::size_t clock = 0;

    auto close_block = [&](std::size_t tree_edge) {
        std::vector<Vertex> members;
        const std::size_t id = dec.blocks.size();
        while (true) {
            const std::size_t e = edge_stack.back();
            edge_stack.pop_back();
            dec.block_of_edge[e] = id;
            members.push_back(edges[e].first);
            members.push_back(edges[e].second);
            if (e == tree_edge) break;
        }
        std::sort(members.begin(), members.end());
        members.erase(std::unique(members.begin(), members.end()), members.end());
        dec.blocks.push_back(std::move(members));
    };

    for (Vertex root = 0; root < n; ++root) {
        if (disc[root] != kUnvisited) continue;
        disc[root] = low[root] = clock++;
        if (incident[root].empty()) {
            dec.blocks.push_back({root});
            continue;
        }
        stack.push_back({root, kUnvisited, 0});
        while (!stack.empty()) {
            Frame& top = stack.back();
            const Vertex u = top.vertex;
            if (top.next < incident[u].size()) {
                auto [w, e] = incident[u][top.next++];
                if (e == top.parent_edge) continue;
                if (disc[w] == kUnvisited) {
                    edge_stack.push_back(e);
                    disc[w] = low[w] = clock++;
                    stack.push_back({w, e, 0});
                } else if (disc[w] < disc[u]) {
                    edge_stack.push_back(e);
                    low[u] = std::min(low[u], disc[w]);
                }
                continue;
            }
            const std::size_t parent_edge = top.parent_edge;
            stack.pop_back();
            if (stack.empty()) break;
            const Vertex p = stack.back().vertex;
            low[p] = std::min(low[p], low[u]);
            if (low[u] >= disc[p]) close_block(parent_edge);
        }
    }

    dec.blocks_of_vertex.assign(n, {});
    for (std::size_t b = 0; b < dec.blocks.size(); ++b) {
        for (Vertex v : dec.blocks[b]) dec.blocks_of_vertex[v].push_back(b);
    }
    for (Vertex v = 0; v < n; ++v) {
        if (dec.blocks_of_vertex[v].size() >= 2) dec.cut_vertices.push_back(v);
    }
    return dec;
}

CutTree build_cut_tree(const BlockDecomposition& dec) {
    CutTree tree;
    tree.block_count = dec.blocks.size();
    tree.cut_vertices = dec.cut_vertices;
    tree.adjacency.assign(tree.block_count + tree.cut_vertices.size(), {});
    for (std::size_t i = 0; i < tree.cut_vertices.size(); ++i) {
        const std::size_t cut_node = tree.block_count + i;
        for (std::size_t b : dec.blocks_of_vertex[tree.cut_vertices[i]]) {
            tree.adjacency[b].push_back(cut_node);
            tree.adjacency[cut_node].push_back(b);
        }
    }
    for (auto& list : tree.adjacency) std::sort(list.begin(), list.end());

    tree.component_of_node.assign(tree.node_count(), kUnvisited);
    std::queue<std::size_t> frontier;
    for (std::size_t s = 0; s < tree.node_count(); ++s) {
        if (tree.component_of_node[s] != kUnvisited) continue;
        tree.component_of_node[s] = tree.component_count;
        frontier.push(s);
        while (!frontier.empty()) {
            const std::size_t x = frontier.front();
            frontier.pop();
            for (std::size_t y : tree.adjacency[x]) {
                if (tree.component_of_node[y] == kUnvisited) {
                    tree.component_of_node[y] = tree.component_count;
                    frontier.push(y);
                }
            }
        }
        ++tree.component_count;
    }
    return tree;
}

std::optional<std::size_t> find_non_clique_block(const Graph& g, const BlockDecomposition& dec) {
    for (std::size_t b = 0; b < dec.blocks.size(); ++b) {
        const auto& members = dec.blocks[b];
        for (std::size_t i = 0; i < members.size(); ++i) {
            // A block is a clique iff each member sees all the others.
            std::size_t inside = 0;
            for (Vertex w : g.neighbors(members[i])) {
                inside += std::binary_search(members.begin(), members.end(), w) ? 1 : 0;
            }
            if (inside + 1 != members.size()) return b;
        }
    }
    return std::nullopt;
}

bool is_block_graph(const Graph& g, const BlockDecomposition& dec) {
    return !find_non_clique_block(g, dec).has_value();
}

std::vector<EndBlockStep> end_block_order(const CutTree& tree, std::optional<std::uint64_t> tie_break_seed) {
    const std::size_t blocks = tree.block_count;

    std::vector<std::size_t> priority(blocks);
    std::iota(priority.begin(), priority.end(), std::size_t{0});
    if (tie_break_seed) {
        Rng rng(*tie_break_seed);
        portable_shuffle(std::span<std::size_t>(priority), rng);
    }

    // Live blocks per cut node, live cut neighbours (with >= 2 live blocks) per block node.
    std::vector<std::size_t> live_degree(tree.node_count(), 0);
    for (std::size_t c = blocks; c < tree.node_count(); ++c) live_degree[c] = tree.adjacency[c].size();
    for (std::size_t b = 0; b < blocks; ++b) live_degree[b] = tree.adjacency[b].size();

    std::vector<std::size_t> live_blocks_in_component(tree.component_count, 0);
    for (std::size_t b = 0; b < blocks; ++b) ++live_blocks_in_component[tree.component_of_node[b]];

    std::vector<char> removed(blocks, 0);
    using Entry = std::pair<std::size_t, std::size_t>;  // (priority, block)
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> ready;
    for (std::size_t b = 0; b < blocks; ++b) {
        if (live_degree[b] <= 1) ready.emplace(priority[b], b);
    }

    std::vector<EndBlockStep> order;
    order.reserve(blocks);
    while (!ready.empty()) {
        const std::size_t b = ready.top().second;
        ready.pop();
        if (removed[b]) continue;
        removed[b] = 1;
        const std::size_t component = tree.component_of_node[b];
        --live_blocks_in_component[component];

        std::optional<Vertex> anchor;
        if (live_blocks_in_component[component] > 0) {
            for (std::size_t c : tree.adjacency[b]) {
                if (live_degree[c] < 2) continue;
                anchor = tree.cut_vertex_of(c);
                --live_degree[c];
                if (live_degree[c] == 1) {
                    // c no longer separates anything; its last block loses a live cut neighbour.
                    for (std::size_t other : tree.adjacency[c]) {
                        if (removed[other]) continue;
                        if (--live_degree[other] <= 1) ready.emplace(priority[other], other);
                    }
                }
                break;
            }
        }
        order.push_back({b, anchor});
    }
    return order;
}

}  // namespace r3d
