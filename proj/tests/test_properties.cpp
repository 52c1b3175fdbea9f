#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"
#include "qrkg/properties.hpp"

using namespace qrkg;
using namespace qrkg::testing;

namespace {
const Budget kGenerous{100'000'000};

PropertySpec conn(int k) { return {PropertyKind::KConnectivity, k}; }
PropertySpec robust(int k) { return {PropertyKind::KRobustness, k}; }
const PropertySpec kHamSpec{PropertyKind::HamiltonCycle, 0};
const PropertySpec kPmSpec{PropertyKind::PerfectMatching, 0};
}  // namespace

TEST_SUITE("properties") {

TEST_CASE("property spelling round-trips") {
    for (const char* text : {"minked:2", "kconn:3", "krobust:1", "ham", "pm"})
        CHECK(PropertySpec::parse(text).to_string() == text);
    CHECK_THROWS(PropertySpec::parse("kconn"));     // k required
    CHECK_THROWS(PropertySpec::parse("ham:2"));     // k not applicable
    CHECK_THROWS(PropertySpec::parse("kconn:0"));
    CHECK_THROWS(PropertySpec::parse("conn:2"));
}

TEST_CASE("min degree basics") {
    CHECK(min_degree(path_graph(3)) == 1);
    CHECK(min_degree(complete_graph(4)) == 3);
    CHECK(min_degree(empty_graph(5)) == 0);
}

TEST_CASE("k-connectivity: hand-picked graphs") {
    CHECK(is_k_connected(complete_graph(4), 3).verdict == Verdict::Yes);
    CHECK(is_k_connected(complete_graph(3), 5).verdict == Verdict::Yes);  // tiny-complete convention

    const auto c5 = cycle_graph(5);
    CHECK(is_k_connected(c5, 2).verdict == Verdict::Yes);
    const auto no3 = is_k_connected(c5, 3);
    CHECK(no3.verdict == Verdict::No);
    CHECK(verify_certificate(c5, conn(3), no3));
    CHECK(no3.cut.size() == 2);
    CHECK(!c5.has_edge(no3.cut[0], no3.cut[1]));  // two non-adjacent cycle vertices

    const auto star = star_graph(4);
    const auto no2 = is_k_connected(star, 2);
    CHECK(no2.verdict == Verdict::No);
    CHECK(no2.cut == std::vector<int>{0});
}

TEST_CASE("k-connectivity: disconnected graphs carry an empty cut") {
    auto g = UndirectedGraph::from_edges(4, {{0, 1}, {2, 3}});
    const auto out = is_k_connected(g, 1);
    CHECK(out.verdict == Verdict::No);
    CHECK(out.cut.empty());
    CHECK(verify_certificate(g, conn(1), out));
}

TEST_CASE("k-connectivity: flow path on a 3-connected graph") {
    // K_5 minus a perfect-matching-ish pair of edges stays 3-connected
    auto g = UndirectedGraph::from_edges(
        5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {2, 4}, {3, 4}});
    CHECK(is_k_connected(g, 3).verdict == Verdict::Yes);
    const auto out4 = is_k_connected(g, 4);
    CHECK(out4.verdict == Verdict::No);
    CHECK(verify_certificate(g, conn(4), out4));
}

TEST_CASE("k-robustness: connectivity equivalence at k = 1") {
    CHECK(is_k_robust(cycle_graph(6), 1, kGenerous).verdict == Verdict::Yes);
    auto split = UndirectedGraph::from_edges(5, {{0, 1}, {2, 3}, {3, 4}});
    const auto out = is_k_robust(split, 1, kGenerous);
    CHECK(out.verdict == Verdict::No);
    CHECK(verify_certificate(split, robust(1), out));
}

TEST_CASE("k-robustness: K4 flips between k = 2 and k = 3") {
    const auto k4 = complete_graph(4);
    CHECK(is_k_robust(k4, 2, kGenerous).verdict == Verdict::Yes);
    const auto out = is_k_robust(k4, 3, kGenerous);
    CHECK(out.verdict == Verdict::No);
    CHECK(verify_certificate(k4, robust(3), out));
    CHECK(out.set_a.size() == 2);
    CHECK(out.set_b.size() == 2);
}

TEST_CASE("k-robustness: bridged triangles are not 2-robust") {
    const auto g = two_triangles_bridged();
    const auto out = is_k_robust(g, 2, kGenerous);
    CHECK(out.verdict == Verdict::No);
    CHECK(verify_certificate(g, robust(2), out));
}

TEST_CASE("k-robustness: large-n search finds cut-style violations") {
    // path of 40 nodes: not 2-connected, so not 2-robust
    const auto g = path_graph(40);
    const auto out = is_k_robust(g, 2, kGenerous);
    CHECK(out.verdict == Verdict::No);
    CHECK(verify_certificate(g, robust(2), out));
}

TEST_CASE("k-robustness: large-n without a certificate stays Unknown") {
    const auto g = complete_graph(20);  // 10-robust in truth, above exhaustive bound
    const auto out = is_k_robust(g, 3, kGenerous);
    CHECK(out.verdict == Verdict::Unknown);
    CHECK(out.work > 0);
}

TEST_CASE("hamilton: cycles, degree obstructions, Petersen") {
    const auto c7 = cycle_graph(7);
    const auto yes = has_hamilton_cycle(c7, kGenerous);
    CHECK(yes.verdict == Verdict::Yes);
    CHECK(verify_certificate(c7, kHamSpec, yes));

    CHECK(has_hamilton_cycle(path_graph(5), kGenerous).verdict == Verdict::No);  // degree-1 node

    const auto petersen = petersen_graph();
    CHECK(has_hamilton_cycle(petersen, kGenerous).verdict == Verdict::No);

    CHECK_THROWS(has_hamilton_cycle(path_graph(2), kGenerous));
}

TEST_CASE("hamilton: complete bipartite K_{3,4} fails by exact search") {
    std::vector<std::pair<int, int>> edges;
    for (int a = 0; a < 3; ++a)
        for (int b = 3; b < 7; ++b) edges.emplace_back(a, b);
    const auto g = UndirectedGraph::from_edges(7, std::move(edges));
    CHECK(has_hamilton_cycle(g, kGenerous).verdict == Verdict::No);
}

TEST_CASE("hamilton: a three-unit budget can never reach Yes at n = 24") {
    // building a 24-node path alone costs more than three work units, so
    // only the free necessary conditions (No) or budget exhaustion remain
    const auto g = random_graph(24, 0.3, 321);
    const auto out = has_hamilton_cycle(g, Budget{3});
    CHECK(out.verdict != Verdict::Yes);
    if (out.verdict == Verdict::Unknown) CHECK(out.work >= 3);
}

TEST_CASE("perfect matching: hand-picked graphs") {
    const auto single = UndirectedGraph::from_edges(2, {{0, 1}});
    const auto yes = has_perfect_matching(single);
    CHECK(yes.verdict == Verdict::Yes);
    CHECK(verify_certificate(single, kPmSpec, yes));

    CHECK(has_perfect_matching(cycle_graph(3)).verdict == Verdict::No);  // odd order

    const auto c6 = has_perfect_matching(cycle_graph(6));
    CHECK(c6.verdict == Verdict::Yes);
    CHECK(verify_certificate(cycle_graph(6), kPmSpec, c6));

    CHECK(has_perfect_matching(star_graph(3)).verdict == Verdict::No);
}

TEST_CASE("perfect matching: blossom handles odd components correctly") {
    // two triangles bridged: perfect matching exists (0-1, 2-3, 4-5)
    const auto g = two_triangles_bridged();
    const auto out = has_perfect_matching(g);
    CHECK(out.verdict == Verdict::Yes);
    CHECK(verify_certificate(g, kPmSpec, out));
}

TEST_CASE("implication chain on decisive verdicts") {
    Xoshiro256 gen(777);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 4 + static_cast<int>(gen.next_below(5)) * 2;  // even, 4..12
        const double p = 0.15 + 0.08 * static_cast<double>(gen.next_below(10));
        const auto g = random_graph(n, p, 1000 + trial);

        for (int k = 1; k <= 3; ++k) {
            if (is_k_robust(g, k, kGenerous).verdict == Verdict::Yes)
                CHECK(is_k_connected(g, k).verdict == Verdict::Yes);
            if (is_k_connected(g, k).verdict == Verdict::Yes) CHECK(min_degree(g) >= k);
        }
        if (n >= 3 && has_hamilton_cycle(g, kGenerous).verdict == Verdict::Yes) {
            CHECK(min_degree(g) >= 2);
            CHECK(is_k_connected(g, 2).verdict == Verdict::Yes);
        }
        if (has_perfect_matching(g).verdict == Verdict::Yes) CHECK(min_degree(g) >= 1);
    }
}

TEST_CASE("monotonicity: adding an edge never flips Yes to No") {
    Xoshiro256 gen(888);
    for (int trial = 0; trial < 120; ++trial) {
        const int n = 6;
        const auto g = random_graph(n, 0.4, 2000 + trial);
        // pick a random absent pair
        int u = -1, v = -1;
        for (int attempts = 0; attempts < 50 && u < 0; ++attempts) {
            const int a = static_cast<int>(gen.next_below(n));
            const int b = static_cast<int>(gen.next_below(n));
            if (a != b && !g.has_edge(a, b)) { u = std::min(a, b); v = std::max(a, b); }
        }
        if (u < 0) continue;
        auto edges = g.edges();
        edges.emplace_back(u, v);
        const auto augmented = UndirectedGraph::from_edges(n, std::move(edges));

        const std::vector<PropertySpec> specs{conn(2), robust(2), kHamSpec, kPmSpec,
                                              {PropertyKind::MinDegreeAtLeast, 2}};
        for (const auto& spec : specs) {
            const auto before = check_property(g, spec, kGenerous);
            if (before.verdict != Verdict::Yes) continue;
            const auto after = check_property(augmented, spec, kGenerous);
            CHECK(after.verdict == Verdict::Yes);
        }
    }
}

TEST_CASE("certificate verifier rejects forgeries") {
    const auto c5 = cycle_graph(5);
    CheckOutcome fake;
    fake.verdict = Verdict::No;
    fake.cut = {0, 1};  // removing adjacent pair of C5 leaves a path: still connected
    CHECK(!verify_certificate(c5, conn(3), fake));

    fake = CheckOutcome{};
    fake.verdict = Verdict::Yes;
    fake.cycle = {0, 1, 2, 3, 3};
    CHECK(!verify_certificate(c5, kHamSpec, fake));

    fake = CheckOutcome{};
    fake.verdict = Verdict::Yes;
    fake.matching = {{0, 2}};  // non-edge
    CHECK(!verify_certificate(UndirectedGraph::from_edges(2, {{0, 1}}), kPmSpec, fake));
}

}  // TEST_SUITE
