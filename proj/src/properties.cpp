#include <algorithm>
#include <stdexcept>
#include <vector>

#include "qrkg/properties.hpp"

namespace qrkg {

bool PropertySpec::needs_k() const {
    return kind == PropertyKind::MinDegreeAtLeast || kind == PropertyKind::KConnectivity ||
           kind == PropertyKind::KRobustness;
}

void PropertySpec::validate() const {
    if (needs_k()) {
        if (k < 1) throw std::invalid_argument("property: k must be >= 1");
    } else if (k != 0) {
        throw std::invalid_argument("property: k not applicable");
    }
}

std::string PropertySpec::to_string() const {
    switch (kind) {
        case PropertyKind::MinDegreeAtLeast: return "minked:" + std::to_string(k);
        case PropertyKind::KConnectivity: return "kconn:" + std::to_string(k);
        case PropertyKind::KRobustness: return "krobust:" + std::to_string(k);
        case PropertyKind::HamiltonCycle: return "ham";
        case PropertyKind::PerfectMatching: return "pm";
    }
    throw std::logic_error("property: bad kind");
}

PropertySpec PropertySpec::parse(const std::string& text) {
    std::string name = text;
    int k = 0;
    if (const auto colon = text.find(':'); colon != std::string::npos) {
        name = text.substr(0, colon);
        const std::string arg = text.substr(colon + 1);
        if (arg.empty() || arg.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("property: bad k in '" + text + "'");
        k = std::stoi(arg);
    }
    PropertySpec spec;
    if (name == "minked") spec.kind = PropertyKind::MinDegreeAtLeast;
    else if (name == "kconn") spec.kind = PropertyKind::KConnectivity;
    else if (name == "krobust") spec.kind = PropertyKind::KRobustness;
    else if (name == "ham") spec.kind = PropertyKind::HamiltonCycle;
    else if (name == "pm") spec.kind = PropertyKind::PerfectMatching;
    else throw std::invalid_argument("property: unknown name '" + name + "'");
    spec.k = k;
    spec.validate();
    return spec;
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Yes: return "yes";
        case Verdict::No: return "no";
        case Verdict::Unknown: return "unknown";
    }
    throw std::logic_error("bad verdict");
}

CheckOutcome check_property(const UndirectedGraph& g, const PropertySpec& spec,
                            const Budget& budget) {
    spec.validate();
    switch (spec.kind) {
        case PropertyKind::MinDegreeAtLeast: {
            CheckOutcome out;
            out.verdict = min_degree(g) >= spec.k ? Verdict::Yes : Verdict::No;
            return out;
        }
        case PropertyKind::KConnectivity: return is_k_connected(g, spec.k);
        case PropertyKind::KRobustness: return is_k_robust(g, spec.k, budget);
        case PropertyKind::HamiltonCycle: return has_hamilton_cycle(g, budget);
        case PropertyKind::PerfectMatching: return has_perfect_matching(g);
    }
    throw std::logic_error("property: bad kind");
}

namespace {

bool verify_cut(const UndirectedGraph& g, int k, const std::vector<int>& cut) {
    if (static_cast<int>(cut.size()) >= k) return false;
    std::vector<char> removed(g.n(), 0);
    for (int v : cut) {
        if (v < 0 || v >= g.n() || removed[v]) return false;
        removed[v] = 1;
    }
    int start = -1;
    for (int v = 0; v < g.n(); ++v)
        if (!removed[v]) { start = v; break; }
    if (start == -1) return false;
    std::vector<char> seen(g.n(), 0);
    std::vector<int> queue{start};
    seen[start] = 1;
    int reached = 1;
    for (std::size_t head = 0; head < queue.size(); ++head)
        for (int w : g.neighbors(queue[head]))
            if (!seen[w] && !removed[w]) {
                seen[w] = 1;
                ++reached;
                queue.push_back(w);
            }
    const int remaining = g.n() - static_cast<int>(cut.size());
    return reached < remaining;
}

bool verify_violating_pair(const UndirectedGraph& g, int k, const std::vector<int>& a,
                           const std::vector<int>& b) {
    if (a.empty() || b.empty()) return false;
    std::vector<int> where(g.n(), 0);
    for (int v : a) {
        if (v < 0 || v >= g.n() || where[v] != 0) return false;
        where[v] = 1;
    }
    for (int v : b) {
        if (v < 0 || v >= g.n() || where[v] != 0) return false;
        where[v] = 2;
    }
    const auto no_escape = [&](const std::vector<int>& members, int side) {
        for (int v : members) {
            int outside = 0;
            for (int w : g.neighbors(v))
                if (where[w] != side) ++outside;
            if (outside >= k) return false;
        }
        return true;
    };
    return no_escape(a, 1) && no_escape(b, 2);
}

bool verify_cycle(const UndirectedGraph& g, const std::vector<int>& cycle) {
    if (static_cast<int>(cycle.size()) != g.n() || g.n() < 3) return false;
    std::vector<char> seen(g.n(), 0);
    for (int v : cycle) {
        if (v < 0 || v >= g.n() || seen[v]) return false;
        seen[v] = 1;
    }
    for (std::size_t i = 0; i < cycle.size(); ++i)
        if (!g.has_edge(cycle[i], cycle[(i + 1) % cycle.size()])) return false;
    return true;
}

bool verify_matching(const UndirectedGraph& g, const std::vector<std::pair<int, int>>& matching) {
    if (static_cast<int>(matching.size()) * 2 != g.n()) return false;
    std::vector<char> covered(g.n(), 0);
    for (const auto& [u, v] : matching) {
        if (u < 0 || v < 0 || u >= g.n() || v >= g.n()) return false;
        if (covered[u] || covered[v] || !g.has_edge(u, v)) return false;
        covered[u] = covered[v] = 1;
    }
    return true;
}

}  // namespace

bool verify_certificate(const UndirectedGraph& g, const PropertySpec& spec,
                        const CheckOutcome& outcome) {
    switch (spec.kind) {
        case PropertyKind::KConnectivity:
            if (outcome.verdict == Verdict::No) return verify_cut(g, spec.k, outcome.cut);
            return outcome.verdict == Verdict::Yes;
        case PropertyKind::KRobustness:
            if (outcome.verdict == Verdict::No)
                return verify_violating_pair(g, spec.k, outcome.set_a, outcome.set_b);
            return true;
        case PropertyKind::HamiltonCycle:
            if (outcome.verdict == Verdict::Yes) return verify_cycle(g, outcome.cycle);
            return true;
        case PropertyKind::PerfectMatching:
            if (outcome.verdict == Verdict::Yes) return verify_matching(g, outcome.matching);
            return outcome.verdict == Verdict::No;
        case PropertyKind::MinDegreeAtLeast:
            return outcome.verdict != Verdict::Unknown;
    }
    return false;
}

}  // namespace qrkg
