#pragma once

#include <cstdint>
#include <vector>

namespace qrkg {

/// Parameters of the q-composite random key graph G_q(n, K, P):
/// n nodes, each holding a uniform random K-subset of a P-key pool,
/// with an edge between two nodes iff they share at least q keys.
struct ModelParams {
    std::int64_t n = 0;  // node count, >= 2
    int q = 1;           // intersection threshold, >= 1
    std::int64_t K = 0;  // key ring size
    std::int64_t P = 0;  // key pool size

    /// Throws std::invalid_argument unless 1 <= q <= K <= P and n >= 2.
    void validate() const;
};

/// Erdos-Renyi G(n, s): every pair gets an edge independently with
/// probability s.
struct ErParams {
    std::int64_t n = 0;
    double s = 0.0;

    void validate() const;
};

/// Binomial q-intersection graph H_q(n, x, P): every key of the P-pool is
/// added to every node independently with probability x; edge iff the two
/// rings share at least q keys.
struct BinomialIntersectionParams {
    std::int64_t n = 0;
    double x = 0.0;
    std::int64_t P = 0;
    int q = 1;

    void validate() const;
};

/// Per-node key rings; the randomness source of the model. Rings are kept
/// sorted ascending (canonical form).
struct KeyAssignment {
    ModelParams params;
    std::vector<std::vector<std::uint32_t>> rings;
};

}  // namespace qrkg
