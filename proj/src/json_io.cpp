#include <stdexcept>

#include "qrkg/json_io.hpp"

namespace qrkg {

ordered_json params_to_json(const AnyParams& params) {
    ordered_json j;
    if (const auto* rkg = std::get_if<ModelParams>(&params)) {
        j["n"] = rkg->n;
        j["q"] = rkg->q;
        j["K"] = rkg->K;
        j["P"] = rkg->P;
    } else if (const auto* er = std::get_if<ErParams>(&params)) {
        j["n"] = er->n;
        j["s"] = er->s;
    } else {
        const auto& b = std::get<BinomialIntersectionParams>(params);
        j["n"] = b.n;
        j["x"] = b.x;
        j["P"] = b.P;
        j["q"] = b.q;
    }
    return j;
}

ordered_json graph_to_json(const UndirectedGraph& g, ModelKind model, const AnyParams& params,
                           std::uint64_t seed) {
    ordered_json doc;
    doc["n"] = g.n();
    doc["model"] = to_string(model);
    doc["params"] = params_to_json(params);
    doc["seed"] = seed;
    auto edges = ordered_json::array();
    for (const auto& [u, v] : g.edges()) edges.push_back(ordered_json::array({u, v}));
    doc["edges"] = std::move(edges);
    return doc;
}

UndirectedGraph graph_from_json(const ordered_json& doc) {
    if (!doc.contains("n") || !doc.contains("edges"))
        throw std::invalid_argument("graph json: missing n or edges");
    const int n = doc.at("n").get<int>();
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : doc.at("edges")) {
        if (!e.is_array() || e.size() != 2)
            throw std::invalid_argument("graph json: bad edge entry");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return UndirectedGraph::from_edges(n, std::move(edges));
}

ordered_json outcome_to_json(const PropertySpec& spec, const CheckOutcome& outcome) {
    ordered_json doc;
    doc["verdict"] = to_string(outcome.verdict);
    ordered_json cert;
    switch (spec.kind) {
        case PropertyKind::KConnectivity:
            if (outcome.verdict == Verdict::No) cert["cut"] = outcome.cut;
            break;
        case PropertyKind::KRobustness:
            if (outcome.verdict == Verdict::No) {
                cert["a"] = outcome.set_a;
                cert["b"] = outcome.set_b;
            }
            break;
        case PropertyKind::HamiltonCycle:
            if (outcome.verdict == Verdict::Yes) cert["cycle"] = outcome.cycle;
            break;
        case PropertyKind::PerfectMatching:
            if (outcome.verdict == Verdict::Yes) {
                auto edges = ordered_json::array();
                for (const auto& [u, v] : outcome.matching)
                    edges.push_back(ordered_json::array({u, v}));
                cert["matching"] = std::move(edges);
            }
            break;
        case PropertyKind::MinDegreeAtLeast:
            break;
    }
    doc["certificate"] = std::move(cert);
    doc["work"] = outcome.work;
    return doc;
}

ordered_json sweep_point_to_json(const SweepPoint& pt) {
    ordered_json j;
    j["model"] = to_string(pt.model);
    j["params"] = params_to_json(pt.params);
    j["property"] = pt.property.to_string();
    if (pt.property.needs_k()) j["k"] = pt.property.k;
    if (pt.eps) j["eps"] = *pt.eps;
    j["samples"] = pt.samples;
    j["yes"] = pt.yes;
    j["no"] = pt.no;
    j["unknown"] = pt.unknown;
    j["emp_prob"] = pt.emp_prob;
    j["emp_lo"] = pt.emp_lo;
    j["emp_hi"] = pt.emp_hi;
    j["wilson_lo"] = pt.wilson_lo;
    j["wilson_hi"] = pt.wilson_hi;
    if (pt.predicted) j["predicted_prob"] = *pt.predicted;
    else j["predicted_prob"] = nullptr;
    j["seed"] = pt.seed;
    return j;
}

}  // namespace qrkg
