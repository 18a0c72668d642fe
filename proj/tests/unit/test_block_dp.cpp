#include <doctest.h>

#include "support/oracles.hpp"

#include "r3d/block_dp.hpp"
#include "r3d/exact_oracle.hpp"
#include "r3d/generators.hpp"
#include "r3d/random.hpp"

#include <sstream>

using namespace r3d;
using namespace r3d::testing;

namespace {

const ExtWeight inf = ExtWeight::infeasible();

StateVector vec(std::array<ExtWeight, kStateCount> w) { return StateVector{w}; }

ExtWeight w(long long x) { return ExtWeight(x); }

std::string show(const StateVector& s) {
    std::ostringstream os;
    for (const auto& x : s.weights) os << x << ' ';
    return os.str();
}

StateVector compose(const StateVector& base, std::vector<StateVector> children) {
    return compose_block(base, children).states;
}

// Rooted state vectors of real partial graphs, collected from DP runs.
std::vector<StateVector> realizable_vectors(std::size_t count) {
    std::vector<StateVector> out;
    for (std::uint64_t seed = 1; out.size() < count; ++seed) {
        const BlockDpRun run = run_block_dp(gen_block_graph(seed, 2 + seed % 9, 2 + seed % 4));
        for (const DpNode& node : run.nodes) out.push_back(node.states);
    }
    out.resize(count);
    return out;
}

}  // namespace

TEST_CASE("state helpers") {
    CHECK(classify_root(0, 5) == RootState::kZero);
    CHECK(classify_root(0, 2) == RootState::kZeroSeesTwo);
    CHECK(classify_root(0, 0) == RootState::kZeroSeesNone);
    CHECK(classify_root(1, 2) == RootState::kOne);
    CHECK(classify_root(1, 1) == RootState::kOneSeesOne);
    CHECK(classify_root(3, 0) == RootState::kThree);
    const std::array<int, kStateCount> needed{0, 1, 2, 3, 1, 2, 3, 2, 3};
    for (std::size_t s = 0; s < kStateCount; ++s) CHECK(clique_sum_needed(state_at(s)) == needed[s]);
    CHECK(leaf_state() == vec({inf, inf, w(2), w(3), inf, inf, w(0), inf, w(1)}));
}

TEST_CASE("extended weights") {
    CHECK((w(2) + inf) == inf);
    CHECK(w(5) < inf);
    CHECK(min(w(4), w(3)) == w(3));
    CHECK_THROWS(inf.value());
    std::ostringstream os;
    os << inf << ' ' << w(7);
    CHECK(os.str() == "inf 7");
}

TEST_CASE("frozen compositions") {
    const StateVector leaf = leaf_state();
    const StateVector k2 = compose(leaf, {leaf});
    CHECK(k2 == vec({w(3), w(3), w(3), w(3), w(2), inf, inf, inf, inf}));
    CHECK(compose(leaf, {leaf, leaf}) == vec({w(3), w(3), w(3), w(3), inf, inf, inf, inf, inf}));
    CHECK(compose(leaf, {leaf, leaf, leaf, leaf}) == vec({w(3), w(3), w(3), w(3), inf, inf, inf, inf, inf}));

    StateVector star = leaf;
    for (int i = 0; i < 3; ++i) star = compose(star, {leaf});
    CHECK(star == vec({w(6), w(7), w(5), w(3), inf, inf, inf, inf, inf}));

    const StateVector p3_end = compose(leaf, {k2});
    CHECK(p3_end == vec({w(3), w(4), w(4), w(5), w(3), w(3), w(3), w(4), w(3)}));

    // Root plus three leaf children is K4.
    const StateVector k4 = compose(leaf, {leaf, leaf, leaf});
    CHECK(k4[RootState::kZero] == w(3));
    CHECK(brute_force(complete_graph(4)).weight == 3);
}

TEST_CASE("frozen aggregates") {
    const StateVector leaf = leaf_state();
    using P = Pattern;
    const std::vector<StateVector> one{leaf};
    const Aggregates a1 = compute_aggregates(one);
    CHECK(a1[P::kThreePlusFromOne].weight == w(3));
    CHECK(a1[P::kThreePlusFromTwo].weight == inf);
    CHECK(a1[P::kThreePlusFromThree].weight == inf);
    CHECK(a1[P::kTwoUnitsFromOne].weight == w(2));
    CHECK(a1[P::kTwoUnitsFromTwo].weight == inf);
    CHECK(a1[P::kTwoPlusFromOne].weight == w(2));
    CHECK(a1[P::kTwoPlusFromTwo].weight == inf);
    CHECK(a1[P::kOneUnitUnderZero].weight == inf);
    CHECK(a1[P::kOneUnitUnderOne].weight == inf);
    CHECK(a1[P::kSomeUnitsUnderTwo].weight == w(1));

    const std::vector<StateVector> three{leaf, leaf, leaf};
    const Aggregates a3 = compute_aggregates(three);
    CHECK(a3[P::kThreePlusFromOne].weight == w(3));
    CHECK(a3[P::kThreePlusFromTwo].weight == w(3));
    CHECK(a3[P::kThreePlusFromThree].weight == w(3));
    CHECK(a3[P::kTwoUnitsFromOne].weight == inf);
    CHECK(a3[P::kTwoUnitsFromTwo].weight == inf);
    CHECK(a3[P::kTwoPlusFromOne].weight == w(2));
    CHECK(a3[P::kTwoPlusFromTwo].weight == w(2));
    CHECK(a3[P::kOneUnitUnderZero].weight == inf);
    CHECK(a3[P::kOneUnitUnderOne].weight == inf);
    CHECK(a3[P::kSomeUnitsUnderTwo].weight == w(1));
    CHECK(a3[P::kAnyUnderThree].weight == w(0));
}

TEST_CASE("pattern picks are distinct children from the pick sets") {
    const auto pool = realizable_vectors(60);
    Rng rng(7);
    for (int round = 0; round < 300; ++round) {
        std::vector<StateVector> children;
        const std::size_t k = 1 + uniform_below(rng, 6);
        for (std::size_t i = 0; i < k; ++i) children.push_back(pool[uniform_below(rng, pool.size())]);
        for (std::size_t p = 0; p < kPatternCount; ++p) {
            const Selection sel = evaluate_pattern(static_cast<Pattern>(p), children);
            const PatternShape shape = pattern_shape(static_cast<Pattern>(p));
            if (!sel.weight.is_finite()) continue;
            ExtWeight total(0);
            std::vector<char> picked(k, 0);
            for (std::size_t j = 0; j < shape.pick_count; ++j) {
                REQUIRE(sel.picks[j] >= 0);
                const auto c = static_cast<std::size_t>(sel.picks[j]);
                CHECK_FALSE(picked[c]);
                picked[c] = 1;
                total = total + children[c].min_over(shape.picks[j]);
            }
            for (std::size_t c = 0; c < k; ++c) {
                if (!picked[c]) total = total + children[c].min_over(shape.rest);
            }
            CHECK(total == sel.weight);
        }
    }
}

TEST_CASE("smallest-three strategy matches enumeration") {
    const auto pool = realizable_vectors(80);
    Rng rng(11);
    for (int round = 0; round < 500; ++round) {
        std::vector<StateVector> children;
        const std::size_t k = 1 + uniform_below(rng, 8);
        for (std::size_t i = 0; i < k; ++i) children.push_back(pool[uniform_below(rng, pool.size())]);
        const auto a = evaluate_pattern(Pattern::kThreePlusFromThree, children, TripleStrategy::kEnumerate);
        const auto b = evaluate_pattern(Pattern::kThreePlusFromThree, children, TripleStrategy::kSmallestThree);
        CHECK(a.weight == b.weight);
    }
}

TEST_CASE("composition matches the knapsack combine on realizable inputs") {
    const auto pool = realizable_vectors(120);
    Rng rng(3);
    for (int round = 0; round < 3000; ++round) {
        const StateVector base = pool[uniform_below(rng, pool.size())];
        std::vector<StateVector> children;
        const std::size_t k = 1 + uniform_below(rng, 5);
        for (std::size_t i = 0; i < k; ++i) children.push_back(pool[uniform_below(rng, pool.size())]);
        const StateVector got = compose_block(base, children).states;
        const StateVector expected = compose_by_knapsack(base, children);
        if (got != expected) {
            INFO("got " << show(got) << " expected " << show(expected));
            CHECK(got == expected);
            break;
        }
    }
}

TEST_CASE("winning terms expand to consistent child states") {
    const auto pool = realizable_vectors(60);
    Rng rng(5);
    for (int round = 0; round < 500; ++round) {
        const StateVector base = pool[uniform_below(rng, pool.size())];
        std::vector<StateVector> children;
        const std::size_t k = 1 + uniform_below(rng, 4);
        for (std::size_t i = 0; i < k; ++i) children.push_back(pool[uniform_below(rng, pool.size())]);
        const Composition comp = compose_block(base, children);
        for (std::size_t s = 0; s < kStateCount; ++s) {
            if (!comp.states.weights[s].is_finite()) continue;
            const Candidate& c = comp.choice[s];
            CHECK(c.weight == comp.states.weights[s]);
            const auto states = expand_children(c, children);
            REQUIRE(states.size() == k);
            ExtWeight total = base[c.base_state];
            int sum = root_label(c.base_state);
            for (std::size_t i = 0; i < k; ++i) {
                total = total + children[i][states[i]];
                sum += root_label(states[i]);
            }
            CHECK(total == c.weight);
            for (RootState cs : states) CHECK(clique_sum_needed(cs) <= std::min(3, sum));
        }
    }
}

TEST_CASE("small optima") {
    struct Case {
        Graph g;
        long long expected;
    };
    const std::vector<Case> cases{
        {Graph{}, 0},
        {complete_graph(1), 2},
        {path_graph(2), 3},
        {path_graph(3), 3},
        {path_graph(4), 5},
        {path_graph(5), 6},
        {complete_graph(3), 3},
        {complete_graph(5), 3},
        {star_graph(3), 3},
        {star_graph(4), 3},
        {sample_block_graph(), 5},
        {disjoint_union(path_graph(2), path_graph(2)), 6},
        {disjoint_union(complete_graph(1), complete_graph(1)), 4},
        // spider: three legs of length two
        {Graph(7, std::vector<Edge>{{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}}), 8},
    };
    for (const auto& c : cases) {
        const BlockDpResult r = solve_block_graph(c.g);
        CHECK(r.weight == c.expected);
        CHECK(is_roman3_dominating(c.g, r.witness));
        CHECK(labeling_weight(r.witness) == c.expected);
    }
    const BlockDpResult hub = solve_block_graph(sample_block_graph());
    CHECK(hub.witness == Labeling(std::vector<Label>{0, 0, 3, 0, 0, 0, 0, 2}));
}

TEST_CASE("non-block graphs are rejected with the offending block") {
    try {
        solve_block_graph(cycle_graph(4));
        FAIL("expected rejection");
    } catch (const NotBlockGraphError& e) {
        CHECK(e.members() == std::vector<Vertex>{0, 1, 2, 3});
    }
    // A diamond: two triangles sharing an edge.
    const Graph diamond(4, std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}});
    CHECK_THROWS_AS(run_block_dp(diamond), NotBlockGraphError);
}

TEST_CASE("recorded choices replay to the stored values") {
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        const Graph g = gen_block_graph(seed, 5 + seed % 20, 2 + seed % 5);
        const BlockDpRun run = run_block_dp(g);
        for (std::size_t id = 0; id < run.nodes.size(); ++id) {
            for (std::size_t s = 0; s < kStateCount; ++s) {
                CHECK(replay_choice(run, id, state_at(s)) == run.nodes[id].states.weights[s]);
            }
        }
    }
}

TEST_CASE("large block graphs produce valid witnesses") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const Graph g = gen_block_graph(seed, 300, 2 + seed % 8);
        const BlockDpResult r = solve_block_graph(g);
        CHECK(is_roman3_dominating(g, r.witness));
        CHECK(labeling_weight(r.witness) == r.weight);
    }
}
