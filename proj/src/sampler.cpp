#include "qrkg/sampler.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace qrkg {

void ModelParams::validate() const {
    if (n < 2) throw std::invalid_argument("rkg params: n must be >= 2");
    if (q < 1) throw std::invalid_argument("rkg params: q must be >= 1");
    if (K < q) throw std::invalid_argument("rkg params: K must be >= q");
    if (P < K) throw std::invalid_argument("rkg params: P must be >= K");
}

void ErParams::validate() const {
    if (n < 2) throw std::invalid_argument("er params: n must be >= 2");
    if (!(s >= 0.0 && s <= 1.0)) throw std::invalid_argument("er params: s must be in [0,1]");
}

void BinomialIntersectionParams::validate() const {
    if (n < 2) throw std::invalid_argument("binq params: n must be >= 2");
    if (!(x >= 0.0 && x <= 1.0)) throw std::invalid_argument("binq params: x must be in [0,1]");
    if (P < 1) throw std::invalid_argument("binq params: P must be >= 1");
    if (q < 1) throw std::invalid_argument("binq params: q must be >= 1");
}

namespace {

// Floyd's algorithm: uniform K-subset of [0, P) without rejection.
std::vector<std::uint32_t> sample_subset(std::int64_t K, std::int64_t P, Xoshiro256& rng) {
    std::unordered_set<std::uint32_t> chosen;
    chosen.reserve(static_cast<std::size_t>(K) * 2);
    for (std::int64_t j = P - K; j < P; ++j) {
        const auto t = static_cast<std::uint32_t>(rng.next_below(static_cast<std::uint64_t>(j) + 1));
        if (!chosen.insert(t).second) chosen.insert(static_cast<std::uint32_t>(j));
    }
    std::vector<std::uint32_t> ring(chosen.begin(), chosen.end());
    std::sort(ring.begin(), ring.end());
    return ring;
}

// Builds the graph for arbitrary rings (fixed-size or binomial) through the
// key -> holders inverted index.
UndirectedGraph graph_from_rings(int n, int q, std::int64_t P,
                                 const std::vector<std::vector<std::uint32_t>>& rings) {
    // counting sort of (key, holder) incidences into holder lists per key
    std::vector<std::uint32_t> key_count(static_cast<std::size_t>(P) + 1, 0);
    std::size_t total = 0;
    for (const auto& ring : rings) {
        total += ring.size();
        for (auto key : ring) ++key_count[key + 1];
    }
    std::vector<std::size_t> offset(static_cast<std::size_t>(P) + 1, 0);
    for (std::int64_t k = 0; k < P; ++k) offset[k + 1] = offset[k] + key_count[k + 1];
    std::vector<std::uint32_t> holders(total);
    {
        std::vector<std::size_t> cursor(offset.begin(), offset.end() - 1);
        for (int v = 0; v < n; ++v)
            for (auto key : rings[v]) holders[cursor[key]++] = static_cast<std::uint32_t>(v);
    }

    // pair co-occurrence counts; holders of one key are in increasing node
    // order, so i < j without swaps
    std::unordered_map<std::uint64_t, std::uint32_t> shared;
    shared.reserve(total);
    std::vector<std::pair<int, int>> edges;
    const auto nq = static_cast<std::uint32_t>(q);
    for (std::int64_t k = 0; k < P; ++k) {
        for (std::size_t a = offset[k]; a < offset[k + 1]; ++a) {
            for (std::size_t b = a + 1; b < offset[k + 1]; ++b) {
                const std::uint64_t code =
                    static_cast<std::uint64_t>(holders[a]) << 32 | holders[b];
                if (++shared[code] == nq)
                    edges.emplace_back(static_cast<int>(holders[a]), static_cast<int>(holders[b]));
            }
        }
    }
    return UndirectedGraph::from_edges(n, std::move(edges));
}

}  // namespace

KeyAssignment sample_key_assignment(const ModelParams& params, const RngSeed& seed) {
    params.validate();
    Xoshiro256 rng(seed);
    KeyAssignment a;
    a.params = params;
    a.rings.reserve(static_cast<std::size_t>(params.n));
    for (std::int64_t v = 0; v < params.n; ++v)
        a.rings.push_back(sample_subset(params.K, params.P, rng));
    return a;
}

int shared_key_count(const KeyAssignment& a, int i, int j) {
    const auto n = static_cast<std::int64_t>(a.rings.size());
    if (i == j) throw std::invalid_argument("shared_key_count: i == j");
    if (i < 0 || j < 0 || i >= n || j >= n)
        throw std::invalid_argument("shared_key_count: node id out of range");
    const auto& ri = a.rings[static_cast<std::size_t>(i)];
    const auto& rj = a.rings[static_cast<std::size_t>(j)];
    int count = 0;
    std::size_t p = 0, q = 0;
    while (p < ri.size() && q < rj.size()) {
        if (ri[p] < rj[q]) ++p;
        else if (ri[p] > rj[q]) ++q;
        else { ++count; ++p; ++q; }
    }
    return count;
}

UndirectedGraph build_graph(const KeyAssignment& a) {
    a.params.validate();
    return graph_from_rings(static_cast<int>(a.params.n), a.params.q, a.params.P, a.rings);
}

UndirectedGraph build_graph_dense(const KeyAssignment& a) {
    a.params.validate();
    const int n = static_cast<int>(a.params.n);
    if (n > 256) throw std::invalid_argument("build_graph_dense: n must be <= 256");
    const std::size_t words = static_cast<std::size_t>(a.params.P + 63) / 64;
    std::vector<std::uint64_t> masks(static_cast<std::size_t>(n) * words, 0);
    for (int v = 0; v < n; ++v)
        for (auto key : a.rings[static_cast<std::size_t>(v)])
            masks[static_cast<std::size_t>(v) * words + key / 64] |= 1ULL << (key % 64);

    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            int count = 0;
            const auto* mi = masks.data() + static_cast<std::size_t>(i) * words;
            const auto* mj = masks.data() + static_cast<std::size_t>(j) * words;
            for (std::size_t w = 0; w < words; ++w) count += std::popcount(mi[w] & mj[w]);
            if (count >= a.params.q) edges.emplace_back(i, j);
        }
    }
    return UndirectedGraph::from_edges(n, std::move(edges));
}

UndirectedGraph sample_rkg(const ModelParams& params, const RngSeed& seed) {
    return build_graph(sample_key_assignment(params, seed));
}

UndirectedGraph sample_er(const ErParams& params, const RngSeed& seed) {
    params.validate();
    const std::int64_t pairs = params.n * (params.n - 1) / 2;
    std::vector<std::pair<int, int>> edges;
    if (params.s >= 1.0) {
        edges.reserve(static_cast<std::size_t>(pairs));
        for (int i = 0; i < params.n; ++i)
            for (int j = i + 1; j < params.n; ++j) edges.emplace_back(i, j);
    } else if (params.s > 0.0) {
        Xoshiro256 rng(seed);
        // geometric skips over the lexicographic pair index
        const double log1ms = std::log1p(-params.s);
        double idx = -1.0;
        while (true) {
            const double u = rng.next_double();
            idx += 1.0 + std::floor(std::log1p(-u) / log1ms);
            if (idx >= static_cast<double>(pairs)) break;
            auto e = static_cast<std::int64_t>(idx);
            // invert e = offset(i) + (j - i - 1)
            std::int64_t i = 0, row = params.n - 1;
            while (e >= row) { e -= row; ++i; --row; }
            edges.emplace_back(static_cast<int>(i), static_cast<int>(i + 1 + e));
        }
    }
    return UndirectedGraph::from_edges(static_cast<int>(params.n), std::move(edges));
}

UndirectedGraph sample_binomial_intersection(const BinomialIntersectionParams& params,
                                             const RngSeed& seed) {
    params.validate();
    Xoshiro256 rng(seed);
    const int n = static_cast<int>(params.n);
    std::vector<std::vector<std::uint32_t>> rings(static_cast<std::size_t>(n));
    if (params.x >= 1.0) {
        for (auto& ring : rings) {
            ring.resize(static_cast<std::size_t>(params.P));
            for (std::int64_t k = 0; k < params.P; ++k) ring[static_cast<std::size_t>(k)] =
                static_cast<std::uint32_t>(k);
        }
    } else if (params.x > 0.0) {
        const double log1mx = std::log1p(-params.x);
        for (auto& ring : rings) {
            double idx = -1.0;
            while (true) {
                const double u = rng.next_double();
                idx += 1.0 + std::floor(std::log1p(-u) / log1mx);
                if (idx >= static_cast<double>(params.P)) break;
                ring.push_back(static_cast<std::uint32_t>(idx));
            }
        }
    }
    return graph_from_rings(n, params.q, params.P, rings);
}

}  // namespace qrkg
