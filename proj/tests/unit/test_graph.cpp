#include <doctest.h>

#include "r3d/generators.hpp"
#include "r3d/graph.hpp"

using namespace r3d;

TEST_CASE("graph normalizes edges") {
    const std::vector<Edge> edges{{3, 1}, {1, 3}, {0, 2}, {2, 1}};
    const Graph g(4, edges);
    CHECK(g.order() == 4);
    CHECK(g.size() == 3);
    CHECK(g.edges() == std::vector<Edge>{{0, 2}, {1, 2}, {1, 3}});
    CHECK(g.has_edge(3, 1));
    CHECK_FALSE(g.has_edge(0, 1));
    CHECK(g.degree(1) == 2);
    CHECK(std::vector<Vertex>(g.neighbors(1).begin(), g.neighbors(1).end()) == std::vector<Vertex>{2, 3});
}

TEST_CASE("graph rejects loops and bad ids") {
    const std::vector<Edge> loop{{1, 1}};
    CHECK_THROWS_AS(Graph(2, loop), GraphError);
    const std::vector<Edge> out{{0, 5}};
    CHECK_THROWS_AS(Graph(2, out), GraphError);
}

TEST_CASE("induced subgraph renumbers in the given order") {
    const Graph p = path_graph(5);
    const std::vector<Vertex> keep{3, 2, 4};
    const Graph h = induced_subgraph(p, keep);
    CHECK(h.order() == 3);
    CHECK(h.edges() == std::vector<Edge>{{0, 1}, {0, 2}});
}

TEST_CASE("labeling range checks") {
    Labeling f(3);
    CHECK_THROWS(f.set(0, 4));
    CHECK_THROWS(f.set(7, 1));
    CHECK_THROWS(Labeling(std::vector<Label>{0, 5}));
    f.set(1, 3);
    CHECK(f[1] == 3);
    CHECK(labeling_weight(f) == 3);
}

TEST_CASE("verification lists every violation") {
    const Graph p = path_graph(3);
    const Labeling f(std::vector<Label>{1, 1, 0});
    const auto report = verify_labeling(p, f);
    CHECK_FALSE(report.valid);
    REQUIRE(report.violations.size() == 3);
    CHECK(report.violations[0] == Violation{0, 2, 1});
    CHECK(report.violations[1] == Violation{1, 2, 1});
    CHECK(report.violations[2] == Violation{2, 3, 1});
    CHECK_THROWS(verify_labeling(p, Labeling(2)));
}

TEST_CASE("valid labelings") {
    const Graph star = star_graph(4);
    Labeling f(5);
    f.set(0, 3);
    CHECK(is_roman3_dominating(star, f));
    CHECK(open_label_sum(star, f, 1) == 3);
    CHECK(closed_label_sum(star, f, 0) == 3);
    f.set(0, 2);
    CHECK_FALSE(is_roman3_dominating(star, f));

    const Graph k1 = complete_graph(1);
    CHECK(is_roman3_dominating(k1, Labeling(1, 2)));
    CHECK_FALSE(is_roman3_dominating(k1, Labeling(1, 1)));
    CHECK(is_roman3_dominating(Graph{}, Labeling{}));
}

TEST_CASE("components and domination") {
    const Graph g = disjoint_union(path_graph(3), complete_graph(2));
    std::size_t count = 0;
    const auto comp = connected_components(g, &count);
    CHECK(count == 2);
    CHECK(comp == std::vector<std::size_t>{0, 0, 0, 1, 1});
    const std::vector<Vertex> good{1, 3};
    const std::vector<Vertex> bad{0, 4};
    CHECK(is_dominating_set(g, good));
    CHECK_FALSE(is_dominating_set(g, bad));
}
