#pragma once

#include "qrkg/graph.hpp"
#include "qrkg/model.hpp"
#include "qrkg/rng.hpp"

namespace qrkg {

/// Draws the n key rings: each ring a uniform random K-subset of [0, P),
/// rings mutually independent, stored sorted ascending. Uses Floyd's
/// rejection-free distinct-subset algorithm (fixed, so seeds are portable
/// across versions).
KeyAssignment sample_key_assignment(const ModelParams& params, const RngSeed& seed);

/// |S_i ∩ S_j| by sorted-list intersection. Rejects i == j or ids out of
/// range.
int shared_key_count(const KeyAssignment& a, int i, int j);

/// Edge rule: (i, j) present iff shared_key_count(a, i, j) >= q.
/// Sparse construction through a per-key inverted index with per-pair
/// co-occurrence counting: expected cost Θ(n²K²/P) rather than Θ(n²K).
UndirectedGraph build_graph(const KeyAssignment& a);

/// Same edge rule evaluated densely: per-node pool bitsets and pairwise
/// popcounts over all n(n-1)/2 pairs. Only for n <= 256; kept as the
/// oracle route for conformance tests.
UndirectedGraph build_graph_dense(const KeyAssignment& a);

/// One G_q(n, K, P) realization; deterministic in seed.
UndirectedGraph sample_rkg(const ModelParams& params, const RngSeed& seed);

/// One Erdos-Renyi realization via geometric skip sampling over the
/// lexicographic pair index.
UndirectedGraph sample_er(const ErParams& params, const RngSeed& seed);

/// One binomial q-intersection realization: Binomial(P, x) rings via skip
/// sampling, then the shared-key edge rule.
UndirectedGraph sample_binomial_intersection(const BinomialIntersectionParams& params,
                                             const RngSeed& seed);

}  // namespace qrkg
