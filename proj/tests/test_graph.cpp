#include <doctest.h>

#include "helpers.hpp"
#include "qrkg/graph.hpp"

using namespace qrkg;
using namespace qrkg::testing;

TEST_SUITE("graph") {

TEST_CASE("canonical form: sorted, deduplicated, i < j") {
    auto g = UndirectedGraph::from_edges(4, {{2, 1}, {1, 2}, {3, 0}, {0, 1}});
    const std::vector<std::pair<int, int>> want{{0, 1}, {0, 3}, {1, 2}};
    CHECK(g.edges() == want);
    CHECK(g.has_edge(1, 2));
    CHECK(g.has_edge(2, 1));
    CHECK(!g.has_edge(0, 2));
    CHECK(g.degree(1) == 2);
}

TEST_CASE("rejects self-loops and out-of-range endpoints") {
    CHECK_THROWS(UndirectedGraph::from_edges(3, {{1, 1}}));
    CHECK_THROWS(UndirectedGraph::from_edges(3, {{0, 3}}));
    CHECK_THROWS(UndirectedGraph::from_edges(3, {{-1, 0}}));
}

TEST_CASE("neighbor lists are sorted") {
    auto g = UndirectedGraph::from_edges(5, {{4, 2}, {2, 0}, {2, 3}, {2, 1}});
    auto nb = g.neighbors(2);
    const std::vector<int> want{0, 1, 3, 4};
    CHECK(std::vector<int>(nb.begin(), nb.end()) == want);
}

TEST_CASE("completeness probe") {
    CHECK(complete_graph(5).is_complete());
    CHECK(!cycle_graph(5).is_complete());
    CHECK(complete_graph(1).is_complete());
}

}  // TEST_SUITE
