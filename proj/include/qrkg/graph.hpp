#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace qrkg {

/// Simple undirected graph on nodes 0..n-1. Immutable after construction;
/// safe to share read-only across threads. Edges are stored once as (i, j)
/// with i < j in lexicographic order, plus a CSR adjacency for traversal.
class UndirectedGraph {
public:
    UndirectedGraph() = default;

    /// Canonicalizes: sorts, deduplicates, rejects self-loops and
    /// out-of-range endpoints.
    static UndirectedGraph from_edges(int n, std::vector<std::pair<int, int>> edges);

    int n() const { return n_; }
    std::int64_t num_edges() const { return static_cast<std::int64_t>(edges_.size()); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    int degree(int v) const { return offsets_[v + 1] - offsets_[v]; }

    std::span<const int> neighbors(int v) const {
        return {adjacency_.data() + offsets_[v],
                static_cast<std::size_t>(offsets_[v + 1] - offsets_[v])};
    }

    /// Binary search over the (sorted) neighbor list of the lower-degree
    /// endpoint.
    bool has_edge(int u, int v) const;

    bool is_complete() const {
        return num_edges() == static_cast<std::int64_t>(n_) * (n_ - 1) / 2;
    }

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<int> offsets_;
    std::vector<int> adjacency_;
};

}  // namespace qrkg
