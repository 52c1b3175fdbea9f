#include <doctest.h>

#include <cmath>

#include "qrkg/montecarlo.hpp"
#include "qrkg/rng.hpp"
#include "qrkg/theory.hpp"

using namespace qrkg;

namespace {
const PropertySpec kConn1{PropertyKind::KConnectivity, 1};
const PropertySpec kConn2{PropertyKind::KConnectivity, 2};
const PropertySpec kHamSpec{PropertyKind::HamiltonCycle, 0};
const PropertySpec kPmSpec{PropertyKind::PerfectMatching, 0};
}  // namespace

TEST_SUITE("montecarlo") {

TEST_CASE("complete-pool points are always connected") {
    const SweepPoint pt = estimate_point({40, 1, 12, 12}, kConn1, 100, 5, Budget{}, 2);
    CHECK(pt.yes == 100);
    CHECK(pt.emp_prob == 1.0);
    CHECK(pt.unknown == 0);
}

TEST_CASE("vanishing scaling gives empty-ish graphs and zero connectivity") {
    const SweepPoint pt = estimate_point({100, 1, 1, 1000000}, kConn1, 100, 6, Budget{});
    CHECK(pt.yes == 0);
    CHECK(pt.emp_prob == 0.0);
}

TEST_CASE("count conservation and interval shape at a transitional point") {
    const SweepPoint pt = estimate_point({60, 1, 5, 120}, kConn1, 400, 7, Budget{});
    CHECK(pt.yes + pt.no + pt.unknown == 400);
    CHECK(pt.emp_lo == pt.emp_prob);
    CHECK(pt.emp_hi >= pt.emp_lo);
    CHECK(pt.wilson_lo <= pt.emp_prob);
    CHECK(pt.wilson_hi >= pt.emp_prob);
    CHECK(pt.unknown == 0);  // connectivity is decisive
}

TEST_CASE("results are independent of the thread count") {
    const std::vector<PropertySpec> specs{kConn2, kHamSpec, kPmSpec};
    const AnyParams params = ModelParams{120, 2, 14, 260};
    const auto serial = estimate_point_multi(params, specs, 160, 99, Budget{}, 1);
    const auto parallel = estimate_point_multi(params, specs, 160, 99, Budget{}, 8);
    REQUIRE(serial.size() == parallel.size());
    for (std::size_t i = 0; i < serial.size(); ++i) {
        CHECK(serial[i].yes == parallel[i].yes);
        CHECK(serial[i].no == parallel[i].no);
        CHECK(serial[i].unknown == parallel[i].unknown);
        CHECK(sweep_csv_row(serial[i]) == sweep_csv_row(parallel[i]));
    }
}

TEST_CASE("sweep axis monotonicity in K within Monte-Carlo noise") {
    SweepConfig config;
    config.model = ModelKind::Rkg;
    config.rkg = {150, 1, 0, 400};
    config.axis = 'K';
    config.axis_from = 2;
    config.axis_to = 10;
    config.axis_step = 2;
    config.properties = {kConn1};
    config.samples = 250;
    config.base_seed = 11;
    const auto points = sweep(config);
    REQUIRE(points.size() == 5);
    for (std::size_t i = 1; i < points.size(); ++i) {
        const double a = points[i - 1].emp_prob, b = points[i].emp_prob;
        const double noise =
            3.0 * std::sqrt(std::max(a * (1 - a), b * (1 - b)) / config.samples + 1e-9);
        CHECK(b >= a - noise);
    }
    // prediction column populated for rkg sweeps
    for (const auto& pt : points) CHECK(pt.predicted.has_value());
}

TEST_CASE("sweep rejects bad configs") {
    SweepConfig config;
    config.rkg = {100, 1, 5, 200};
    config.axis = 'K';
    config.axis_from = 10;
    config.axis_to = 5;
    config.properties = {kConn1};
    CHECK_THROWS(sweep(config));  // empty axis

    config.axis_to = 15;
    config.properties.clear();
    CHECK_THROWS(sweep(config));  // no properties

    config.properties = {kPmSpec};
    config.rkg.n = 101;
    config.axis_from = 5;
    config.axis_to = 10;
    CHECK_THROWS(sweep(config));  // odd n under pm
}

TEST_CASE("estimate rejects perfect matching at odd n") {
    CHECK_THROWS(estimate_point({101, 1, 5, 100}, kPmSpec, 10, 1, Budget{}));
}

TEST_CASE("wilson interval: frozen values and coverage calibration") {
    const auto [lo, hi] = wilson_interval(50, 100);
    CHECK(lo == doctest::Approx(0.40383).epsilon(1e-3));
    CHECK(hi == doctest::Approx(0.59617).epsilon(1e-3));
    const auto [lo0, hi0] = wilson_interval(0, 100);
    CHECK(lo0 == 0.0);
    CHECK(hi0 > 0.0);

    // coverage on synthetic Bernoulli streams
    for (const double p : {0.1, 0.5, 0.9}) {
        Xoshiro256 rng(static_cast<std::uint64_t>(p * 1000) + 3);
        const int reps = 600, trials = 200;
        int covered = 0;
        for (int r = 0; r < reps; ++r) {
            int successes = 0;
            for (int t = 0; t < trials; ++t)
                if (rng.next_double() < p) ++successes;
            const auto [wl, wh] = wilson_interval(successes, trials);
            if (wl <= p && p <= wh) ++covered;
        }
        const double coverage = static_cast<double>(covered) / reps;
        CHECK(coverage > 0.91);   // nominal 0.95, binomial noise at 600 reps
        CHECK(coverage <= 1.0);
    }
}

TEST_CASE("csv schema is exact and rows format stably") {
    CHECK(sweep_csv_header() ==
          "model,q,n,K,P,property,k,eps,samples,yes,no,unknown,emp_prob,emp_lo,emp_hi,"
          "wilson_lo,wilson_hi,predicted_prob,seed");
    const SweepPoint pt = estimate_point({40, 1, 12, 12}, kConn1, 10, 5, Budget{});
    const std::string row = sweep_csv_row(pt);
    CHECK(row.substr(0, 4) == "rkg,");
    CHECK(row.find(",kconn:1,1,,10,10,0,0,1.000000,") != std::string::npos);
}

TEST_CASE("transition width on the q=1 linear-pool regime is tiny") {
    const auto est = empirical_transition_width(1, 300, 300, kConn1, 0.1, 200, 21, Budget{}, 0);
    CHECK(est.k_minus >= 1);
    CHECK(est.k_plus >= est.k_minus);
    CHECK(est.width <= 2);  // 0-or-1 regime, small-n slack of one
    CHECK(est.points.size() >= static_cast<std::size_t>(est.k_plus));
    for (const auto& pt : est.points) CHECK(pt.eps == 0.1);
    // scan bookkeeping honors the definitions
    const auto& at = est.points;
    CHECK(at[static_cast<std::size_t>(est.k_minus) - 1].emp_prob >= 0.1);
    if (est.k_minus >= 2) CHECK(at[static_cast<std::size_t>(est.k_minus) - 2].emp_prob < 0.1);
}

TEST_CASE("transition width rejects eps >= 1/2") {
    CHECK_THROWS(empirical_transition_width(1, 100, 100, kConn1, 0.5, 50, 1, Budget{}));
}

TEST_CASE("coupling: degenerate complete-graph edge probability") {
    const auto res = coupling_experiment(1, 12, 12, 30, kConn1, 80, 13, Budget{});
    CHECK(res.er_edge_probability == doctest::Approx(1.0));
    CHECK(res.rkg.emp_prob == 1.0);
    CHECK(res.er.emp_prob == 1.0);
}

TEST_CASE("coupling: three-valued robustness propagates as intervals, no hard claim") {
    const auto res = coupling_experiment(1, 6, 60, 24, {PropertyKind::KRobustness, 2}, 40, 17,
                                         Budget{200000});
    CHECK(res.rkg.yes + res.rkg.no + res.rkg.unknown == 40);
    CHECK(res.rkg.emp_hi >= res.rkg.emp_lo);
}

}  // TEST_SUITE
