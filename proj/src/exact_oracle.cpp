#include "r3d/exact_oracle.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>
#include <string>

namespace r3d {

namespace {

// Breadth-first order so that closed neighbourhoods complete early in the enumeration.
std::vector<Vertex> bfs_order(const Graph& g) {
    std::vector<Vertex> order;
    std::vector<char> seen(g.order(), 0);
    for (Vertex s = 0; s < g.order(); ++s) {
        if (seen[s]) continue;
        seen[s] = 1;
        std::queue<Vertex> q;
        q.push(s);
        while (!q.empty()) {
            const Vertex u = q.front();
            q.pop();
            order.push_back(u);
            for (Vertex w : g.neighbors(u)) {
                if (!seen[w]) {
                    seen[w] = 1;
                    q.push(w);
                }
            }
        }
    }
    return order;
}

class Enumerator {
public:
    explicit Enumerator(const Graph& g) : g_(g), order_(bfs_order(g)), labels_(g.order(), 0) {
        std::vector<std::size_t> position(g.order());
        for (std::size_t i = 0; i < order_.size(); ++i) position[order_[i]] = i;
        completes_at_.assign(g.order(), {});
        for (Vertex v = 0; v < g.order(); ++v) {
            std::size_t last = position[v];
            for (Vertex w : g.neighbors(v)) last = std::max(last, position[w]);
            completes_at_[last].push_back(v);
        }
        best_weight_ = 2 * static_cast<long long>(g.order());
        best_ = std::vector<Label>(g.order(), 2);
    }

    OracleResult run() {
        search(0, 0);
        return {best_weight_, Labeling(best_), SearchOutcome::kExact, nodes_};
    }

private:
    void search(std::size_t depth, long long weight) {
        ++nodes_;
        if (depth == order_.size()) {
            best_weight_ = weight;
            best_ = labels_;
            return;
        }
        const Vertex v = order_[depth];
        for (Label x = 0; x <= kMaxLabel; ++x) {
            if (weight + x >= best_weight_) break;
            labels_[v] = x;
            if (completed_ok(depth)) search(depth + 1, weight + x);
        }
        labels_[v] = 0;
    }

    bool completed_ok(std::size_t depth) const {
        for (Vertex u : completes_at_[depth]) {
            const int demand = required_neighbor_sum(labels_[u]);
            if (demand == 0) continue;
            int sum = 0;
            for (Vertex w : g_.neighbors(u)) sum += labels_[w];
            if (sum < demand) return false;
        }
        return true;
    }

    const Graph& g_;
    std::vector<Vertex> order_;
    std::vector<std::vector<Vertex>> completes_at_;
    std::vector<Label> labels_;
    std::vector<Label> best_;
    long long best_weight_ = 0;
    std::uint64_t nodes_ = 0;
};

// Smallest-last elimination order, reversed: the densest core is branched on first.
std::vector<Vertex> degeneracy_order(const Graph& g) {
    const std::size_t n = g.order();
    std::vector<std::size_t> degree(n);
    std::set<std::pair<std::size_t, Vertex>> queue;
    for (Vertex v = 0; v < n; ++v) {
        degree[v] = g.degree(v);
        queue.emplace(degree[v], v);
    }
    std::vector<char> removed(n, 0);
    std::vector<Vertex> order;
    while (!queue.empty()) {
        const Vertex v = queue.begin()->second;
        queue.erase(queue.begin());
        removed[v] = 1;
        order.push_back(v);
        for (Vertex w : g.neighbors(v)) {
            if (removed[w]) continue;
            queue.erase({degree[w], w});
            queue.emplace(--degree[w], w);
        }
    }
    std::reverse(order.begin(), order.end());
    return order;
}

// Start from all 2s and lower labels greedily while the labeling stays valid.
std::vector<Label> greedy_labeling(const Graph& g) {
    std::vector<Label> labels(g.order(), 2);
    std::vector<Vertex> order(g.order());
    std::iota(order.begin(), order.end(), Vertex{0});
    std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return g.degree(a) < g.degree(b); });
    auto locally_valid = [&](Vertex v) {
        auto ok = [&](Vertex u) {
            const int demand = required_neighbor_sum(labels[u]);
            if (demand == 0) return true;
            int sum = 0;
            for (Vertex w : g.neighbors(u)) sum += labels[w];
            return sum >= demand;
        };
        if (!ok(v)) return false;
        return std::all_of(g.neighbors(v).begin(), g.neighbors(v).end(), ok);
    };
    for (bool changed = true; changed;) {
        changed = false;
        for (Vertex v : order) {
            while (labels[v] > 0) {
                --labels[v];
                if (locally_valid(v)) {
                    changed = true;
                } else {
                    ++labels[v];
                    break;
                }
            }
        }
    }
    return labels;
}

class BranchAndBound {
public:
    BranchAndBound(const Graph& g, const SearchBudget& budget)
        : g_(g),
          budget_(budget),
          start_(std::chrono::steady_clock::now()),
          labels_(g.order(), kUnassigned),
          sum_(g.order(), 0),
          open_(g.order(), 0),
          used_(g.order(), 0) {
        order_ = degeneracy_order(g);
        for (Vertex v = 0; v < g.order(); ++v) open_[v] = static_cast<int>(g.degree(v));
    }

    void offer(const std::vector<Label>& labels) {
        const long long w = std::accumulate(labels.begin(), labels.end(), 0LL);
        if (best_.empty() || w < best_weight_) {
            best_weight_ = w;
            best_ = labels;
        }
    }

    OracleResult run() {
        search(0, 0);
        OracleResult r;
        r.weight = best_weight_;
        r.witness = Labeling(best_);
        r.outcome = exhausted_ ? SearchOutcome::kBudgetExhausted : SearchOutcome::kExact;
        r.nodes = nodes_;
        return r;
    }

private:
    static constexpr int kUnassigned = -1;

    int residual(Vertex v) const { return required_neighbor_sum(static_cast<Label>(labels_[v])) - sum_[v]; }

    bool out_of_budget() {
        if (exhausted_) return true;
        if (nodes_ >= budget_.node_limit) return exhausted_ = true;
        if ((nodes_ & 1023) == 0 && budget_.time_limit != std::chrono::milliseconds::max() &&
            std::chrono::steady_clock::now() - start_ >= budget_.time_limit) {
            return exhausted_ = true;
        }
        return false;
    }

    // Residual demands of assigned vertices with pairwise disjoint sets of
    // unassigned neighbours must be met by disjoint label mass.
    long long lower_bound() {
        long long bound = 0;
        std::fill(used_.begin(), used_.end(), 0);
        for (std::size_t i = 0; i < depth_; ++i) {
            const Vertex v = order_[i];
            const int r = residual(v);
            if (r <= 0) continue;
            bool disjoint = true;
            for (Vertex w : g_.neighbors(v)) {
                if (labels_[w] == kUnassigned && used_[w]) {
                    disjoint = false;
                    break;
                }
            }
            if (!disjoint) continue;
            for (Vertex w : g_.neighbors(v)) {
                if (labels_[w] == kUnassigned) used_[w] = 1;
            }
            bound += r;
        }
        return bound;
    }

    bool assign(Vertex v, Label x) {
        labels_[v] = x;
        bool feasible = true;
        for (Vertex w : g_.neighbors(v)) {
            sum_[w] += x;
            --open_[w];
            if (labels_[w] != kUnassigned && open_[w] == 0 && residual(w) > 0) feasible = false;
        }
        if (open_[v] == 0 && residual(v) > 0) feasible = false;
        return feasible;
    }

    void unassign(Vertex v) {
        const int x = labels_[v];
        for (Vertex w : g_.neighbors(v)) {
            sum_[w] -= x;
            ++open_[w];
        }
        labels_[v] = kUnassigned;
    }

    void search(std::size_t depth, long long weight) {
        ++nodes_;
        if (out_of_budget()) return;
        if (depth == order_.size()) {
            std::vector<Label> full(labels_.begin(), labels_.end());
            offer(full);
            return;
        }
        depth_ = depth;
        if (weight + lower_bound() >= best_weight_) return;
        const Vertex v = order_[depth];
        for (Label x = 0; x <= kMaxLabel; ++x) {
            if (weight + x >= best_weight_) break;
            if (assign(v, x)) search(depth + 1, weight + x);
            unassign(v);
            depth_ = depth;
            if (exhausted_) return;
        }
    }

    const Graph& g_;
    SearchBudget budget_;
    std::chrono::steady_clock::time_point start_;
    std::vector<Vertex> order_;
    std::vector<int> labels_;
    std::vector<int> sum_;   // label sum over assigned neighbours
    std::vector<int> open_;  // unassigned neighbours
    std::vector<char> used_;
    std::vector<Label> best_;
    long long best_weight_ = 0;
    std::size_t depth_ = 0;
    std::uint64_t nodes_ = 0;
    bool exhausted_ = false;
};

}  // namespace

OracleResult brute_force(const Graph& g) {
    if (g.order() > kBruteForceMaxOrder) {
        throw InstanceTooLargeError("brute_force handles at most " + std::to_string(kBruteForceMaxOrder) +
                                    " vertices (got " + std::to_string(g.order()) + "); use branch_and_bound");
    }
    return Enumerator(g).run();
}

OracleResult branch_and_bound(const Graph& g, const SearchBudget& budget, const std::optional<Labeling>& warm_start) {
    BranchAndBound search(g, budget);
    search.offer(greedy_labeling(g));
    if (warm_start) {
        if (!is_roman3_dominating(g, *warm_start)) {
            throw std::invalid_argument("warm start is not a valid Roman {3}-dominating labeling");
        }
        search.offer(warm_start->values());
    }
    return search.run();
}

std::vector<Vertex> min_dominating_set(const Graph& g) {
    const std::size_t n = g.order();
    if (n > kDominatingSetMaxOrder) {
        throw InstanceTooLargeError("min_dominating_set handles at most " + std::to_string(kDominatingSetMaxOrder) +
                                    " vertices (got " + std::to_string(n) + ")");
    }
    if (n == 0) return {};
    std::vector<std::uint32_t> closed(n);
    for (Vertex v = 0; v < n; ++v) {
        closed[v] = 1u << v;
        for (Vertex w : g.neighbors(v)) closed[v] |= 1u << w;
    }
    const std::uint32_t full = n == 32 ? ~0u : (1u << n) - 1;
    std::vector<Vertex> pick;
    for (std::size_t size = 1; size <= n; ++size) {
        // Lexicographic combinations of `size` vertices.
        pick.resize(size);
        std::iota(pick.begin(), pick.end(), Vertex{0});
        while (true) {
            std::uint32_t covered = 0;
            for (Vertex v : pick) covered |= closed[v];
            if (covered == full) return pick;
            std::size_t i = size;
            while (i > 0 && pick[i - 1] == n - size + i - 1) --i;
            if (i == 0) break;
            ++pick[i - 1];
            for (std::size_t j = i; j < size; ++j) pick[j] = pick[j - 1] + 1;
        }
    }
    return pick;
}

}  // namespace r3d
