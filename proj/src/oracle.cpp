#include <algorithm>
#include <bit>
#include <stdexcept>
#include <vector>

#include "qrkg/oracle.hpp"

namespace qrkg {

namespace {

bool connected_after_removal(const UndirectedGraph& g, std::uint32_t removed_mask) {
    const int n = g.n();
    int start = -1;
    for (int v = 0; v < n; ++v)
        if (!(removed_mask >> v & 1)) { start = v; break; }
    if (start == -1) return true;  // nothing left
    std::uint32_t seen = 1u << start;
    std::vector<int> queue{start};
    for (std::size_t head = 0; head < queue.size(); ++head)
        for (int w : g.neighbors(queue[head]))
            if (!(removed_mask >> w & 1) && !(seen >> w & 1)) {
                seen |= 1u << w;
                queue.push_back(w);
            }
    const int remaining = n - std::popcount(removed_mask);
    return std::popcount(seen) == remaining;
}

bool oracle_k_connected(const UndirectedGraph& g, int k) {
    const int n = g.n();
    // every removal of at most k-1 nodes must leave a connected graph
    const std::uint32_t full = (1u << n) - 1;
    for (std::uint32_t mask = 0; mask <= full; ++mask) {
        if (std::popcount(mask) >= k) continue;
        if (!connected_after_removal(g, mask)) return false;
    }
    return true;
}

bool oracle_hamilton_recurse(const UndirectedGraph& g, std::vector<int>& path,
                             std::vector<char>& used) {
    const int n = g.n();
    if (static_cast<int>(path.size()) == n)
        return g.has_edge(path.back(), path.front());
    for (int v = 1; v < n; ++v) {
        if (used[v] || !g.has_edge(path.back(), v)) continue;
        used[v] = 1;
        path.push_back(v);
        if (oracle_hamilton_recurse(g, path, used)) return true;
        path.pop_back();
        used[v] = 0;
    }
    return false;
}

bool oracle_hamilton(const UndirectedGraph& g) {
    std::vector<int> path{0};
    std::vector<char> used(g.n(), 0);
    used[0] = 1;
    return oracle_hamilton_recurse(g, path, used);
}

bool oracle_matching_recurse(const UndirectedGraph& g, std::uint32_t covered) {
    const int n = g.n();
    int v = -1;
    for (int u = 0; u < n; ++u)
        if (!(covered >> u & 1)) { v = u; break; }
    if (v == -1) return true;
    for (int w : g.neighbors(v)) {
        if (covered >> w & 1) continue;
        if (oracle_matching_recurse(g, covered | (1u << v) | (1u << w))) return true;
    }
    return false;
}

bool oracle_k_robust(const UndirectedGraph& g, int k) {
    const int n = g.n();
    std::vector<std::uint32_t> nbr(n, 0);
    for (int v = 0; v < n; ++v)
        for (int w : g.neighbors(v)) nbr[v] |= 1u << w;
    const auto escapes = [&](std::uint32_t set) {
        for (std::uint32_t rest = set; rest;) {
            const int v = std::countr_zero(rest);
            rest &= rest - 1;
            if (std::popcount(nbr[v] & ~set) >= k) return true;
        }
        return false;
    };
    const std::uint32_t full = (n == 32) ? 0xffffffffu : ((1u << n) - 1);
    for (std::uint32_t a = 1; a <= full; ++a) {
        if (escapes(a)) continue;
        const std::uint32_t complement = full & ~a;
        for (std::uint32_t b = complement; b; b = (b - 1) & complement)
            if (!escapes(b)) return false;
    }
    return true;
}

CheckOutcome verdict_only(bool yes) {
    CheckOutcome out;
    out.verdict = yes ? Verdict::Yes : Verdict::No;
    return out;
}

}  // namespace

CheckOutcome oracle_check(const UndirectedGraph& g, const PropertySpec& spec) {
    spec.validate();
    const int bound = spec.kind == PropertyKind::KRobustness ? 16 : 12;
    if (g.n() > bound) throw std::invalid_argument("oracle_check: n above oracle bound");
    if (g.n() < 1) throw std::invalid_argument("oracle_check: empty graph");
    switch (spec.kind) {
        case PropertyKind::MinDegreeAtLeast: {
            int md = g.degree(0);
            for (int v = 1; v < g.n(); ++v) md = std::min(md, g.degree(v));
            return verdict_only(md >= spec.k);
        }
        case PropertyKind::KConnectivity:
            return verdict_only(oracle_k_connected(g, spec.k));
        case PropertyKind::KRobustness:
            return verdict_only(oracle_k_robust(g, spec.k));
        case PropertyKind::HamiltonCycle:
            if (g.n() < 3) throw std::invalid_argument("oracle_check: hamilton needs n >= 3");
            return verdict_only(oracle_hamilton(g));
        case PropertyKind::PerfectMatching:
            if (g.n() % 2 != 0) return verdict_only(false);
            return verdict_only(oracle_matching_recurse(g, 0));
    }
    throw std::logic_error("oracle_check: bad kind");
}

}  // namespace qrkg
