#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qrkg/config.hpp"
#include "qrkg/json_io.hpp"
#include "qrkg/montecarlo.hpp"
#include "qrkg/oracle.hpp"
#include "qrkg/sampler.hpp"
#include "qrkg/theory.hpp"

namespace py = pybind11;
using namespace qrkg;

namespace {

RngSeed seed_of(std::uint64_t base, std::uint32_t context, std::uint32_t point,
                std::uint32_t sample) {
    return RngSeed{base, context, point, sample};
}

py::dict outcome_dict(const PropertySpec& spec, const CheckOutcome& outcome) {
    py::dict d;
    d["verdict"] = to_string(outcome.verdict);
    py::dict cert;
    if (spec.kind == PropertyKind::KConnectivity && outcome.verdict == Verdict::No)
        cert["cut"] = outcome.cut;
    if (spec.kind == PropertyKind::KRobustness && outcome.verdict == Verdict::No) {
        cert["a"] = outcome.set_a;
        cert["b"] = outcome.set_b;
    }
    if (spec.kind == PropertyKind::HamiltonCycle && outcome.verdict == Verdict::Yes)
        cert["cycle"] = outcome.cycle;
    if (spec.kind == PropertyKind::PerfectMatching && outcome.verdict == Verdict::Yes)
        cert["matching"] = outcome.matching;
    d["certificate"] = cert;
    d["work"] = outcome.work;
    return d;
}

py::dict point_dict(const SweepPoint& pt) {
    py::dict d;
    d["model"] = to_string(pt.model);
    d["property"] = pt.property.to_string();
    d["samples"] = pt.samples;
    d["yes"] = pt.yes;
    d["no"] = pt.no;
    d["unknown"] = pt.unknown;
    d["emp_prob"] = pt.emp_prob;
    d["emp_lo"] = pt.emp_lo;
    d["emp_hi"] = pt.emp_hi;
    d["wilson_lo"] = pt.wilson_lo;
    d["wilson_hi"] = pt.wilson_hi;
    if (pt.predicted) d["predicted_prob"] = *pt.predicted;
    else d["predicted_prob"] = py::none();
    d["seed"] = pt.seed;
    if (const auto* rkg = std::get_if<ModelParams>(&pt.params)) {
        d["n"] = rkg->n;
        d["q"] = rkg->q;
        d["K"] = rkg->K;
        d["P"] = rkg->P;
    } else if (const auto* er = std::get_if<ErParams>(&pt.params)) {
        d["n"] = er->n;
        d["s"] = er->s;
    } else {
        const auto& b = std::get<BinomialIntersectionParams>(pt.params);
        d["n"] = b.n;
        d["x"] = b.x;
        d["P"] = b.P;
        d["q"] = b.q;
    }
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "q-composite random key graph toolkit: samplers, property checkers, "
              "closed-form thresholds and Monte-Carlo experiments";

    py::class_<UndirectedGraph>(m, "Graph")
        .def_property_readonly("n", &UndirectedGraph::n)
        .def_property_readonly("num_edges", &UndirectedGraph::num_edges)
        .def("edges", [](const UndirectedGraph& g) { return g.edges(); })
        .def("degree", &UndirectedGraph::degree, py::arg("v"))
        .def("has_edge", &UndirectedGraph::has_edge, py::arg("u"), py::arg("v"))
        .def("neighbors",
             [](const UndirectedGraph& g, int v) {
                 auto nb = g.neighbors(v);
                 return std::vector<int>(nb.begin(), nb.end());
             },
             py::arg("v"))
        .def("__repr__", [](const UndirectedGraph& g) {
            return "Graph(n=" + std::to_string(g.n()) +
                   ", edges=" + std::to_string(g.num_edges()) + ")";
        });

    m.def("graph_from_edges",
          [](int n, const std::vector<std::pair<int, int>>& edges) {
              return UndirectedGraph::from_edges(n, edges);
          },
          py::arg("n"), py::arg("edges"));

    m.def("sample_rkg",
          [](std::int64_t n, int q, std::int64_t K, std::int64_t P, std::uint64_t seed,
             std::uint32_t context, std::uint32_t point, std::uint32_t sample) {
              return sample_rkg({n, q, K, P}, seed_of(seed, context, point, sample));
          },
          py::arg("n"), py::arg("q"), py::arg("K"), py::arg("P"), py::arg("seed") = 0,
          py::arg("context") = 0, py::arg("point") = 0, py::arg("sample") = 0);

    m.def("sample_er",
          [](std::int64_t n, double s, std::uint64_t seed, std::uint32_t context,
             std::uint32_t point, std::uint32_t sample) {
              return sample_er({n, s}, seed_of(seed, context, point, sample));
          },
          py::arg("n"), py::arg("s"), py::arg("seed") = 0, py::arg("context") = 0,
          py::arg("point") = 0, py::arg("sample") = 0);

    m.def("sample_binomial_intersection",
          [](std::int64_t n, double x, std::int64_t P, int q, std::uint64_t seed,
             std::uint32_t context, std::uint32_t point, std::uint32_t sample) {
              return sample_binomial_intersection({n, x, P, q},
                                                  seed_of(seed, context, point, sample));
          },
          py::arg("n"), py::arg("x"), py::arg("P"), py::arg("q"), py::arg("seed") = 0,
          py::arg("context") = 0, py::arg("point") = 0, py::arg("sample") = 0);

    m.def("sample_key_rings",
          [](std::int64_t n, int q, std::int64_t K, std::int64_t P, std::uint64_t seed) {
              return sample_key_assignment({n, q, K, P}, RngSeed{seed, 0, 0, 0}).rings;
          },
          py::arg("n"), py::arg("q"), py::arg("K"), py::arg("P"), py::arg("seed") = 0);

    m.def("min_degree", &min_degree, py::arg("graph"));

    m.def("check",
          [](const UndirectedGraph& g, const std::string& property, std::uint64_t budget) {
              const PropertySpec spec = PropertySpec::parse(property);
              return outcome_dict(spec, check_property(g, spec, Budget{budget}));
          },
          py::arg("graph"), py::arg("property"), py::arg("budget") = Budget{}.max_work,
          "decide minked:k | kconn:k | krobust:k | ham | pm with certificates");

    m.def("oracle_check",
          [](const UndirectedGraph& g, const std::string& property) {
              const PropertySpec spec = PropertySpec::parse(property);
              return outcome_dict(spec, oracle_check(g, spec));
          },
          py::arg("graph"), py::arg("property"));

    m.def("exact_edge_probability", &exact_edge_probability, py::arg("q"), py::arg("K"),
          py::arg("P"));
    m.def("asymptotic_edge_probability", &asymptotic_edge_probability, py::arg("q"), py::arg("K"),
          py::arg("P"));
    m.def("er_coupling_probability", &er_coupling_probability, py::arg("q"), py::arg("K"),
          py::arg("P"));

    m.def("deviation",
          [](std::int64_t n, int q, std::int64_t K, std::int64_t P, const std::string& property) {
              const Deviation dev = deviation({n, q, K, P}, PropertySpec::parse(property));
              py::dict d;
              d["kappa"] = dev.kappa;
              d["scaling"] = dev.scaling;
              d["alpha"] = dev.alpha;
              return d;
          },
          py::arg("n"), py::arg("q"), py::arg("K"), py::arg("P"), py::arg("property"));

    m.def("limit_probability",
          [](const std::string& property, double alpha) -> py::object {
              const auto limit = limit_probability(PropertySpec::parse(property), alpha);
              if (limit.indeterminate()) return py::none();
              return py::float_(*limit.value);
          },
          py::arg("property"), py::arg("alpha"));

    m.def("critical_key_ring",
          [](int q, std::int64_t n, std::int64_t P, const std::string& property, double p) {
              return critical_key_ring(q, n, P, PropertySpec::parse(property), p).value;
          },
          py::arg("q"), py::arg("n"), py::arg("P"), py::arg("property"), py::arg("p"));
    m.def("critical_key_pool",
          [](int q, std::int64_t n, std::int64_t K, const std::string& property, double p) {
              return critical_key_pool(q, n, K, PropertySpec::parse(property), p).value;
          },
          py::arg("q"), py::arg("n"), py::arg("K"), py::arg("property"), py::arg("p"));
    m.def("critical_node_count",
          [](int q, std::int64_t K, std::int64_t P, const std::string& property, double p) {
              return critical_node_count(q, K, P, PropertySpec::parse(property), p).value;
          },
          py::arg("q"), py::arg("K"), py::arg("P"), py::arg("property"), py::arg("p"));

    m.def("predicted_width",
          [](int q, std::int64_t n, std::int64_t P, const std::string& property, double eps) {
              return predicted_width(q, n, P, PropertySpec::parse(property), eps);
          },
          py::arg("q"), py::arg("n"), py::arg("P"), py::arg("property"), py::arg("eps"));

    m.def("estimate_point",
          [](std::int64_t n, int q, std::int64_t K, std::int64_t P, const std::string& property,
             int samples, std::uint64_t seed, std::uint64_t budget, int threads) {
              return point_dict(estimate_point({n, q, K, P}, PropertySpec::parse(property),
                                               samples, seed, Budget{budget}, threads));
          },
          py::arg("n"), py::arg("q"), py::arg("K"), py::arg("P"), py::arg("property"),
          py::arg("samples") = 500, py::arg("seed") = 0, py::arg("budget") = Budget{}.max_work,
          py::arg("threads") = 0);

    m.def("sweep_csv",
          [](const std::string& config_text) {
              const SweepConfig config = sweep_config_from_map(parse_flat_config(config_text));
              return sweep_csv(sweep(config));
          },
          py::arg("config_text"),
          "run a sweep described by flat key=value text; returns the CSV");

    m.def("graph_json",
          [](const UndirectedGraph& g) {
              ordered_json doc;
              doc["n"] = g.n();
              auto edges = ordered_json::array();
              for (const auto& [u, v] : g.edges()) edges.push_back(ordered_json::array({u, v}));
              doc["edges"] = std::move(edges);
              return doc.dump();
          },
          py::arg("graph"));

    m.attr("__version__") = kToolVersion;
}
