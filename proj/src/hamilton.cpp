#include <algorithm>
#include <stdexcept>
#include <vector>

#include "qrkg/properties.hpp"
#include "qrkg/rng.hpp"

namespace qrkg {

namespace {

constexpr std::uint64_t kHeuristicStream = 0x48414d494c544f4eULL;  // fixed: pure in (g, budget)

// Degree-2 vertices force both incident edges onto any Hamilton cycle.
// Three forced edges at one vertex, or a forced subcycle shorter than n,
// rule the cycle out. Cheap and catches most sparse non-Hamiltonian
// graphs that pass the degree/cut prechecks.
bool forced_edges_contradict(const UndirectedGraph& g) {
    const int n = g.n();
    std::vector<int> forced_deg(n, 0);
    std::vector<std::pair<int, int>> forced;
    for (int v = 0; v < n; ++v) {
        if (g.degree(v) != 2) continue;
        for (int w : g.neighbors(v)) {
            if (v < w || g.degree(w) != 2) {
                forced.emplace_back(v, w);
            }
        }
    }
    std::sort(forced.begin(), forced.end(), [](auto a, auto b) {
        if (a.first > a.second) std::swap(a.first, a.second);
        if (b.first > b.second) std::swap(b.first, b.second);
        return a < b;
    });
    // adjacency of the forced subgraph
    std::vector<std::vector<int>> fadj(n);
    for (auto [v, w] : forced) {
        if (std::find(fadj[v].begin(), fadj[v].end(), w) != fadj[v].end()) continue;
        fadj[v].push_back(w);
        fadj[w].push_back(v);
        if (static_cast<int>(fadj[v].size()) > 2 || static_cast<int>(fadj[w].size()) > 2)
            return true;
    }
    // walk forced paths; a closed forced cycle covering < n vertices is fatal
    std::vector<char> seen(n, 0);
    for (int v = 0; v < n; ++v) {
        if (seen[v] || fadj[v].size() != 2) continue;
        int length = 0;
        int prev = -1, cur = v;
        bool closed = false;
        while (!seen[cur]) {
            seen[cur] = 1;
            ++length;
            if (fadj[cur].size() != 2) break;
            const int next = (fadj[cur][0] == prev) ? fadj[cur][1] : fadj[cur][0];
            prev = cur;
            cur = next;
            if (cur == v) { closed = true; break; }
        }
        if (closed && length < n) return true;
    }
    return false;
}

// Rotation-extension heuristic with restarts. Returns a Hamilton cycle or
// empty. Work is counted per extension/rotation step against the budget
// share given to the heuristic.
std::vector<int> posa_search(const UndirectedGraph& g, std::uint64_t max_work,
                             std::uint64_t& work) {
    const int n = g.n();
    Xoshiro256 rng(kHeuristicStream);
    std::vector<int> path, pos(n);
    std::vector<char> on_path(n);

    const int restarts = 24;
    for (int attempt = 0; attempt < restarts && work < max_work; ++attempt) {
        path.clear();
        std::fill(on_path.begin(), on_path.end(), 0);
        const int start = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n)));
        path.push_back(start);
        on_path[start] = 1;
        pos[start] = 0;

        const std::uint64_t stall_limit = static_cast<std::uint64_t>(n) * 64;
        std::uint64_t stalls = 0;
        while (work < max_work && stalls < stall_limit) {
            const int tail = path.back();
            // extend if possible
            int fresh = -1;
            auto nb = g.neighbors(tail);
            const auto pick = rng.next_below(nb.size());
            for (std::size_t d = 0; d < nb.size(); ++d) {
                const int w = nb[(pick + d) % nb.size()];
                if (!on_path[w]) { fresh = w; break; }
            }
            ++work;
            if (fresh != -1) {
                pos[fresh] = static_cast<int>(path.size());
                path.push_back(fresh);
                on_path[fresh] = 1;
                stalls = 0;
                if (static_cast<int>(path.size()) == n) {
                    if (g.has_edge(path.back(), path.front())) return path;
                    // try a closing rotation: neighbor u of tail at position i
                    // with path[i+1] adjacent to the head
                    for (int u : g.neighbors(path.back())) {
                        const int i = pos[u];
                        if (i + 1 < n && g.has_edge(path[i + 1], path.front())) {
                            std::reverse(path.begin() + i + 1, path.end());
                            for (int p = i + 1; p < n; ++p) pos[path[p]] = p;
                            return path;
                        }
                        ++work;
                    }
                }
                continue;
            }
            // rotate: pick a random on-path neighbor u of the tail, reverse
            // the segment after it; the vertex after u becomes the new tail
            if (nb.empty()) break;
            const int u = nb[rng.next_below(nb.size())];
            const int i = pos[u];
            if (i + 1 >= static_cast<int>(path.size())) { ++stalls; continue; }
            std::reverse(path.begin() + i + 1, path.end());
            for (int p = i + 1; p < static_cast<int>(path.size()); ++p) pos[path[p]] = p;
            ++stalls;
            ++work;
        }
    }
    return {};
}

// Exact backtracking over paths anchored at vertex 0, visiting neighbors in
// degree order. Prunes on unvisited vertices that lost all usable exits.
// Decides No only by exhausting the search space within budget.
class HamiltonBacktracker {
public:
    HamiltonBacktracker(const UndirectedGraph& g, std::uint64_t max_work, std::uint64_t& work)
        : g_(g), n_(g.n()), max_work_(max_work), work_(work), visited_(n_, 0) {
        order_.resize(n_);
        for (int v = 0; v < n_; ++v) order_[v] = v;
    }

    // Verdict::Yes with cycle, Verdict::No, or Unknown on budget exhaustion.
    Verdict solve(std::vector<int>& cycle) {
        path_.reserve(n_);
        path_.push_back(0);
        visited_[0] = 1;
        const Verdict v = extend();
        if (v == Verdict::Yes) cycle = path_;
        return v;
    }

private:
    Verdict extend() {
        if (++work_ > max_work_) return Verdict::Unknown;
        if (static_cast<int>(path_.size()) == n_)
            return g_.has_edge(path_.back(), 0) ? Verdict::Yes : Verdict::No;
        const int tail = path_.back();
        for (int w : g_.neighbors(tail)) {
            if (visited_[w]) continue;
            if (!viable_after(w)) continue;
            visited_[w] = 1;
            path_.push_back(w);
            const Verdict v = extend();
            if (v != Verdict::No) return v;
            path_.pop_back();
            visited_[w] = 0;
        }
        return Verdict::No;
    }

    // after moving to w, every unvisited vertex still needs >= 2 usable
    // endpoints among {unvisited, w, start}, and the start vertex needs
    // one free edge left for closing; fewer can never be threaded
    bool viable_after(int w) {
        visited_[w] = 1;
        bool ok = true;
        for (int u : g_.neighbors(w)) {
            if (visited_[u] && u != 0) continue;
            const int needed = (u == 0) ? 1 : 2;
            int usable = 0;
            for (int x : g_.neighbors(u)) {
                if (!visited_[x] || x == w || (x == 0 && u != 0)) {
                    if (++usable >= needed) break;
                }
            }
            if (usable < needed) { ok = false; break; }
        }
        visited_[w] = 0;
        return ok;
    }

    const UndirectedGraph& g_;
    int n_;
    std::uint64_t max_work_;
    std::uint64_t& work_;
    std::vector<char> visited_;
    std::vector<int> path_, order_;
};

}  // namespace

CheckOutcome has_hamilton_cycle(const UndirectedGraph& g, const Budget& budget) {
    if (g.n() < 3) throw std::invalid_argument("has_hamilton_cycle: n must be >= 3");
    CheckOutcome out;

    if (min_degree(g) < 2) {
        out.verdict = Verdict::No;
        return out;
    }
    {
        const CheckOutcome two_conn = is_k_connected(g, 2);
        if (two_conn.verdict == Verdict::No) {
            out.verdict = Verdict::No;
            return out;
        }
    }
    if (forced_edges_contradict(g)) {
        out.verdict = Verdict::No;
        return out;
    }

    // heuristic Yes pass, then exact completion for the remainder
    const std::uint64_t heuristic_share = std::max<std::uint64_t>(budget.max_work / 4, 1);
    auto cycle = posa_search(g, heuristic_share, out.work);
    if (!cycle.empty()) {
        out.verdict = Verdict::Yes;
        out.cycle = std::move(cycle);
        return out;
    }

    HamiltonBacktracker exact(g, budget.max_work, out.work);
    out.verdict = exact.solve(out.cycle);
    return out;
}

}  // namespace qrkg
