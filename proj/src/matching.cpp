#include <algorithm>
#include <vector>

#include "qrkg/properties.hpp"

namespace qrkg {

namespace {

// Maximum matching in a general graph: augmenting-path search with blossom
// contraction (Galil's presentation). O(V^3), fine at the n <= a few
// thousand scales this toolkit sweeps.
class Blossom {
public:
    explicit Blossom(const UndirectedGraph& g)
        : g_(g), n_(g.n()), match_(n_, -1), parent_(n_, -1), base_(n_, 0) {}

    std::vector<std::pair<int, int>> run() {
        for (int v = 0; v < n_; ++v)
            if (match_[v] == -1) try_augment(v);
        std::vector<std::pair<int, int>> result;
        for (int v = 0; v < n_; ++v)
            if (match_[v] > v) result.emplace_back(v, match_[v]);
        return result;
    }

private:
    int lowest_common_ancestor(int a, int b) {
        std::vector<char> used(n_, 0);
        for (;;) {
            a = base_[a];
            used[a] = 1;
            if (match_[a] == -1) break;
            a = parent_[match_[a]];
        }
        for (;;) {
            b = base_[b];
            if (used[b]) return b;
            b = parent_[match_[b]];
        }
    }

    void mark_path(int v, int b, int child, std::vector<char>& blossom) {
        while (base_[v] != b) {
            blossom[base_[v]] = 1;
            blossom[base_[match_[v]]] = 1;
            parent_[v] = child;
            child = match_[v];
            v = parent_[match_[v]];
        }
    }

    int find_augmenting_path(int root) {
        std::fill(parent_.begin(), parent_.end(), -1);
        std::vector<char> used(n_, 0);
        for (int v = 0; v < n_; ++v) base_[v] = v;
        used[root] = 1;
        std::vector<int> queue{root};
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const int v = queue[head];
            for (int to : g_.neighbors(v)) {
                if (base_[v] == base_[to] || match_[v] == to) continue;
                if (to == root || (match_[to] != -1 && parent_[match_[to]] != -1)) {
                    // odd cycle: contract the blossom
                    const int b = lowest_common_ancestor(v, to);
                    std::vector<char> blossom(n_, 0);
                    mark_path(v, b, to, blossom);
                    mark_path(to, b, v, blossom);
                    for (int u = 0; u < n_; ++u) {
                        if (blossom[base_[u]]) {
                            base_[u] = b;
                            if (!used[u]) {
                                used[u] = 1;
                                queue.push_back(u);
                            }
                        }
                    }
                } else if (parent_[to] == -1) {
                    parent_[to] = v;
                    if (match_[to] == -1) return to;
                    used[match_[to]] = 1;
                    queue.push_back(match_[to]);
                }
            }
        }
        return -1;
    }

    void try_augment(int root) {
        const int leaf = find_augmenting_path(root);
        if (leaf == -1) return;
        int v = leaf;
        while (v != -1) {
            const int pv = parent_[v];
            const int next = match_[pv];
            match_[v] = pv;
            match_[pv] = v;
            v = next;
        }
    }

    const UndirectedGraph& g_;
    int n_;
    std::vector<int> match_, parent_, base_;
};

}  // namespace

std::vector<std::pair<int, int>> maximum_matching(const UndirectedGraph& g) {
    if (g.n() == 0) return {};
    return Blossom(g).run();
}

CheckOutcome has_perfect_matching(const UndirectedGraph& g) {
    CheckOutcome out;
    if (g.n() % 2 != 0) {
        out.verdict = Verdict::No;
        return out;
    }
    auto matching = maximum_matching(g);
    if (static_cast<int>(matching.size()) * 2 == g.n()) {
        out.verdict = Verdict::Yes;
        out.matching = std::move(matching);
    } else {
        out.verdict = Verdict::No;
    }
    return out;
}

}  // namespace qrkg
