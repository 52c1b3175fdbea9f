#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "qrkg/graph.hpp"

namespace qrkg {

enum class PropertyKind {
    MinDegreeAtLeast,
    KConnectivity,
    KRobustness,
    HamiltonCycle,
    PerfectMatching,
};

/// Which property is asked. k is required for the first three kinds and
/// must be absent (zero) otherwise.
struct PropertySpec {
    PropertyKind kind = PropertyKind::KConnectivity;
    int k = 0;

    void validate() const;
    bool needs_k() const;

    /// Flag/CSV spelling: minked:k, kconn:k, krobust:k, ham, pm.
    std::string to_string() const;
    static PropertySpec parse(const std::string& text);
};

enum class Verdict { Yes, No, Unknown };

std::string to_string(Verdict v);

/// Deterministic work cap for the two checkers with exponential exact
/// paths (k-robustness, Hamilton cycle). Counted in node expansions /
/// subset evaluations, never wall-clock.
struct Budget {
    std::uint64_t max_work = 5'000'000;
};

/// Decisive or certified three-valued answer. Populated certificate fields
/// depend on (kind, verdict):
///   KConnectivity/No  -> cut (a separating set of < k nodes)
///   KRobustness/No    -> set_a, set_b (a violating subset pair)
///   HamiltonCycle/Yes -> cycle (node order)
///   PerfectMatching/Yes -> matching (n/2 edges)
/// Unknown carries only the work counter and is permitted for KRobustness
/// and HamiltonCycle only.
struct CheckOutcome {
    Verdict verdict = Verdict::Unknown;
    std::vector<int> cut;
    std::vector<int> cycle;
    std::vector<std::pair<int, int>> matching;
    std::vector<int> set_a;
    std::vector<int> set_b;
    std::uint64_t work = 0;
};

int min_degree(const UndirectedGraph& g);

/// Decisive. Convention for tiny graphs: a complete graph is k-connected
/// for every k (the removal-of-(k-1)-nodes formulation holds vacuously);
/// a non-complete graph on n <= k nodes is not, and the certificate is the
/// complement of a non-adjacent pair. k = 1 and k = 2 take linear-time
/// paths (BFS, articulation points); k >= 3 runs unit-capacity max-flow on
/// the node-split digraph against a fixed k-node anchor set.
CheckOutcome is_k_connected(const UndirectedGraph& g, int k);

/// Yes only from exhaustive verification (n <= 16, bitmask enumeration);
/// No from a verified violating pair (exhaustive search, a cut of the
/// k-connectivity checker, or candidate-pair search); otherwise Unknown.
CheckOutcome is_k_robust(const UndirectedGraph& g, int k, const Budget& budget);

/// Yes from a found cycle (rotation-extension heuristic, then exact
/// backtracking); No from necessary conditions (min degree >= 2,
/// 2-connectivity, forced-edge propagation) or exhausted backtracking;
/// Unknown when the budget runs out first. Requires n >= 3.
CheckOutcome has_hamilton_cycle(const UndirectedGraph& g, const Budget& budget);

/// Decisive via maximum matching in general graphs (blossom contraction);
/// Yes iff the matching covers all nodes. Odd n is No by convention.
CheckOutcome has_perfect_matching(const UndirectedGraph& g);

/// Dispatch on spec.kind.
CheckOutcome check_property(const UndirectedGraph& g, const PropertySpec& spec,
                            const Budget& budget);

/// Re-verifies a returned certificate against the graph, independently of
/// the checker that produced it.
bool verify_certificate(const UndirectedGraph& g, const PropertySpec& spec,
                        const CheckOutcome& outcome);

// internal reuse: maximum matching over the whole graph (pairs i < j)
std::vector<std::pair<int, int>> maximum_matching(const UndirectedGraph& g);

}  // namespace qrkg
