#include <doctest.h>

#include <cmath>
#include <limits>
#include <tuple>
#include <vector>

#include "qrkg/rng.hpp"
#include "qrkg/theory.hpp"

using namespace qrkg;

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
const PropertySpec kConn1{PropertyKind::KConnectivity, 1};
const PropertySpec kConn2{PropertyKind::KConnectivity, 2};
const PropertySpec kConn3{PropertyKind::KConnectivity, 3};
const PropertySpec kRob2{PropertyKind::KRobustness, 2};
const PropertySpec kHam{PropertyKind::HamiltonCycle, 0};
const PropertySpec kPm{PropertyKind::PerfectMatching, 0};
const PropertySpec kMinDeg2{PropertyKind::MinDegreeAtLeast, 2};
}  // namespace

TEST_SUITE("theory") {

TEST_CASE("hypergeometric tail: hand values") {
    CHECK(exact_edge_probability(1, 1, 2) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(exact_edge_probability(2, 2, 4) == doctest::Approx(1.0 / 6).epsilon(1e-12));
    CHECK(exact_edge_probability(1, 3, 3) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK_THROWS(exact_edge_probability(2, 1, 10));   // q > K
    CHECK_THROWS(exact_edge_probability(1, 11, 10));  // K > P
}

TEST_CASE("log-gamma route agrees with the exact-rational oracle to 12 digits") {
    const std::vector<std::tuple<int, int, int>> grid{{1, 20, 10000},  {2, 30, 10000},
                                                      {3, 40, 20000},  {2, 88, 50000},
                                                      {1, 9, 5000},    {3, 300, 250000}};
    for (const auto& [q, K, P] : grid) {
        const double fast = exact_edge_probability(q, K, P);
        const double slow = exact_edge_probability_rational(q, K, P);
        CHECK(std::abs(fast - slow) <= 1e-12 * slow);
    }
}

TEST_CASE("frozen oracle values") {
    CHECK(exact_edge_probability(2, 30, 10000) ==
          doctest::Approx(0.0035923303067794043).epsilon(1e-11));
    CHECK(exact_edge_probability(1, 20, 10000) ==
          doctest::Approx(0.03928567164878572).epsilon(1e-11));
    CHECK(exact_edge_probability(3, 40, 20000) ==
          doctest::Approx(6.955802530976172e-05).epsilon(1e-11));
    CHECK(exact_edge_probability(2, 88, 50000) ==
          doctest::Approx(0.010627359557898845).epsilon(1e-11));
}

TEST_CASE("q = 1 reduces to one minus the disjointness ratio") {
    const std::vector<std::pair<int, int>> cases{{9, 5000}, {20, 40000}, {30, 1000}};
    for (const auto& [K, P] : cases) {
        const double direct = 1.0 - std::exp(log_binomial(P - K, K) - log_binomial(P, K));
        CHECK(exact_edge_probability(1, K, P) == doctest::Approx(direct).epsilon(1e-10));
    }
}

TEST_CASE("asymptotic form: direct substitutions") {
    CHECK(asymptotic_edge_probability(1, 10, 100) == doctest::Approx(1.0));
    CHECK(asymptotic_edge_probability(2, 30, 10000) == doctest::Approx(0.00405).epsilon(1e-12));
}

TEST_CASE("asymptotic error: small for q=1, decays like q^2/K for q >= 2") {
    // q = 1 on the K >= 20, K^2/P <= 0.01 grid stays below 5%
    const std::vector<std::pair<int, int>> grid_q1{{20, 40000}, {20, 400000}, {50, 250000}, {100, 1000000}};
    for (const auto& [K, P] : grid_q1) {
        const double b = exact_edge_probability(1, K, P);
        CHECK(std::abs(b - asymptotic_edge_probability(1, K, P)) / b < 0.05);
    }
    // q = 2: the spec's 5%-by-K=20 guess is contradicted by the exact
    // oracle; the honest behavior is ~2q^2/K, halving as K doubles
    // (frozen oracle values at K^2/P = 0.005)
    const double e20 = 0.111015, e40 = 0.055105, e80 = 0.028730, e160 = 0.015914;
    const std::vector<std::pair<int, double>> grid_q2{{20, e20}, {40, e40}, {80, e80}, {160, e160}};
    for (const auto& [K, want] : grid_q2) {
        const int P = static_cast<int>(static_cast<double>(K) * K / 0.005);
        const double b = exact_edge_probability(2, K, P);
        const double rel = std::abs(b - asymptotic_edge_probability(2, K, P)) / b;
        CHECK(rel == doctest::Approx(want).epsilon(1e-3));
    }
    CHECK(e160 < e80);
    CHECK(e80 < e40);
    CHECK(e40 < e20);
    // the paper's worked design point: 12.86%, not the spec's guessed 2%
    const double b = exact_edge_probability(2, 88, 50000);
    const double rel = std::abs(b - asymptotic_edge_probability(2, 88, 50000)) / b;
    CHECK(rel == doctest::Approx(0.12858769242313442).epsilon(1e-6));
}

TEST_CASE("edge probability grid: in range and monotone") {
    Xoshiro256 gen(5150);
    for (int i = 0; i < 200; ++i) {
        const int q = 1 + static_cast<int>(gen.next_below(3));
        const int K = q + static_cast<int>(gen.next_below(60));
        const int P = K + static_cast<int>(gen.next_below(5000));
        const double b = exact_edge_probability(q, K, P);
        REQUIRE(b >= 0.0);
        REQUIRE(b <= 1.0);
        if (K + 1 <= P) CHECK(exact_edge_probability(q, K + 1, P) >= b - 1e-12);
        CHECK(exact_edge_probability(q, K, P + 1) <= b + 1e-12);
    }
}

TEST_CASE("kappa mapping") {
    CHECK(kappa_of(kConn3) == 3);
    CHECK(kappa_of(kRob2) == 2);
    CHECK(kappa_of(kMinDeg2) == 2);
    CHECK(kappa_of(kHam) == 2);
    CHECK(kappa_of(kPm) == 1);
}

TEST_CASE("deviation: direct substitution with scaling one") {
    const Deviation dev = deviation({1000, 1, 100, 10000}, kConn1);
    CHECK(dev.kappa == 1);
    CHECK(dev.scaling == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(dev.alpha == doctest::Approx(993.0922447210179).epsilon(1e-12));
}

TEST_CASE("deviation: high-precision cross-check at the design point") {
    // n (1/q!) K^{2q} P^{-q} - ln n - ln ln n with q=2, K=88, P=50000
    // = 1000 * 88^4 / (2 * 50000^2) - ln 1000 - ln ln 1000
    const double expected =
        1000.0 * std::pow(88.0, 4) / (2.0 * std::pow(50000.0, 2)) - std::log(1000.0) -
        std::log(std::log(1000.0));
    const Deviation dev = deviation({1000, 2, 88, 50000}, kConn2);
    CHECK(dev.alpha == doctest::Approx(expected).epsilon(1e-12));
    CHECK_THROWS(deviation({2, 2, 3, 10}, kConn2));  // ln ln n needs n >= 3 when kappa >= 2
}

TEST_CASE("threshold alignment across the theorems") {
    const ModelParams params{1000, 2, 88, 50000};
    CHECK(deviation(params, kRob2).alpha == deviation(params, kConn2).alpha);
    CHECK(deviation(params, kHam).alpha == deviation(params, kConn2).alpha);
    CHECK(deviation(params, kPm).alpha == deviation(params, kConn1).alpha);
    CHECK(deviation(params, kMinDeg2).alpha == deviation(params, kConn2).alpha);
}

TEST_CASE("limit probabilities") {
    CHECK(*limit_probability(kConn2, kInf).value == 1.0);
    CHECK(*limit_probability(kConn2, -kInf).value == 0.0);
    CHECK(*limit_probability(kConn2, 0.0).value == doctest::Approx(std::exp(-1.0)).epsilon(1e-12));
    CHECK(*limit_probability(kConn3, 0.0).value ==
          doctest::Approx(std::exp(-0.5)).epsilon(1e-12));
    CHECK(*limit_probability(kRob2, kInf).value == 1.0);
    CHECK(*limit_probability(kRob2, -kInf).value == 0.0);
    CHECK(limit_probability(kRob2, 0.7).indeterminate());

    // strictly increasing in alpha, endpoints approached
    double prev = 0.0;
    for (double alpha = -6.0; alpha <= 8.0; alpha += 0.25) {
        const double v = *limit_probability(kHam, alpha).value;
        CHECK(v > prev);
        prev = v;
    }
    CHECK(prev > 0.999);
}

TEST_CASE("critical key ring: worked design points") {
    CHECK(critical_key_ring(2, 1000, 50000, kConn2, 0.99).value == 91);
    CHECK(critical_key_ring(2, 1000, 50000, kConn3, 0.99).value == 93);
    CHECK(critical_key_ring(2, 1000, 50000, kConn2, 0.5).value == 83);
    CHECK(critical_key_ring(2, 1000, 50000, kPm, 0.5).value == 78);
}

TEST_CASE("critical key pool and node count: worked design points") {
    CHECK(critical_key_pool(2, 1000, 88, kConn2, 0.99).value == 47232);
    CHECK(critical_node_count(3, 300, 250000, kConn2, 0.99).value == 1816);
}

TEST_CASE("critical key ring at astronomically large n inverts the closed form") {
    const auto crit = critical_key_ring(1, 1000000000000LL, 1000000000000000LL, kConn1, 0.5);
    CHECK(crit.value == 168);
}

TEST_CASE("round trip: pool then ring returns no larger ring") {
    const auto pool = critical_key_pool(2, 1000, 88, kConn2, 0.99);
    const auto ring = critical_key_ring(2, 1000, pool.value, kConn2, 0.99);
    CHECK(ring.value <= 88);
}

TEST_CASE("solver self-consistency on a fuzzed grid") {
    Xoshiro256 gen(606);
    int done = 0;
    while (done < 60) {
        const int q = 1 + static_cast<int>(gen.next_below(3));
        const std::int64_t n = 50 + static_cast<std::int64_t>(gen.next_below(20000));
        const std::int64_t P = 500 + static_cast<std::int64_t>(gen.next_below(200000));
        const int kappa = 1 + static_cast<int>(gen.next_below(4));
        const double p = 0.05 + 0.9 * (gen.next() >> 11) * 0x1.0p-53;
        const PropertySpec spec{PropertyKind::KConnectivity, kappa};
        const double ta = -std::log(std::tgamma(kappa) * std::log(1.0 / p));

        CriticalParams crit;
        try {
            crit = critical_key_ring(q, n, P, spec, p);
        } catch (const std::exception&) {
            continue;  // unreachable target on this draw
        }
        if (crit.clamped) continue;
        ++done;
        const auto alpha_of = [&](std::int64_t K) {
            return deviation({n, q, K, P}, spec).alpha;
        };
        CHECK(alpha_of(crit.value) >= ta);
        if (crit.value > q) CHECK(alpha_of(crit.value - 1) < ta);

        const auto pool = critical_key_pool(q, n, crit.value, spec, p);
        if (!pool.clamped) {
            const auto alpha_pool = [&](std::int64_t P2) {
                return deviation({n, q, crit.value, P2}, spec).alpha;
            };
            CHECK(alpha_pool(pool.value) >= ta);
            CHECK(alpha_pool(pool.value + 1) < ta);
        }
    }
}

TEST_CASE("critical node count: monotone in the target probability") {
    std::int64_t prev = 0;
    for (const double p : {0.1, 0.3, 0.5, 0.7, 0.9, 0.99}) {
        const auto crit = critical_node_count(2, 88, 50000, kConn2, p);
        CHECK(crit.value >= prev);
        // boundary self-consistency
        const double ta = -std::log(std::log(1.0 / p));
        CHECK(deviation({crit.value, 2, 88, 50000}, kConn2).alpha >= ta);
        if (crit.value > 3)
            CHECK(deviation({crit.value - 1, 2, 88, 50000}, kConn2).alpha < ta);
        prev = crit.value;
    }
}

TEST_CASE("predicted width: symmetric limit and regime comparisons") {
    CHECK(predicted_width(1, 2000, 2000, kConn1, 0.49999) < 1e-3);
    const double w_q1 = predicted_width(1, 2000, 2000, kConn1, 0.1);
    CHECK(w_q1 < 1.0);  // the 0-or-1 regime at P = Theta(n)
    const double q2_width = predicted_width(2, 1000, 50000, kConn2, 0.1);
    const double q1_matched = predicted_width(1, 1000, 50000, kConn1, 0.1);
    CHECK(q2_width > q1_matched);
    CHECK_THROWS(predicted_width(1, 2000, 2000, kConn1, 0.5));
}

TEST_CASE("width regimes") {
    CHECK(width_regime(1, PoolGrowthClass::LinearButSubLog) == WidthRegime::ZeroOrOne);
    CHECK(width_regime(1, PoolGrowthClass::ThetaNLogN) == WidthRegime::Bounded);
    CHECK(width_regime(1, PoolGrowthClass::OmegaNLogN) == WidthRegime::Unbounded);
    CHECK(width_regime(2, PoolGrowthClass::LinearButSubLog) == WidthRegime::Unbounded);
    CHECK(width_regime(2, PoolGrowthClass::ThetaNLogN) == WidthRegime::Unbounded);
    CHECK(width_regime(3, PoolGrowthClass::OmegaNLogN) == WidthRegime::Unbounded);
}

TEST_CASE("er coupling probability is the exact edge probability") {
    CHECK(er_coupling_probability(1, 1, 2) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(er_coupling_probability(2, 88, 50000) ==
          doctest::Approx(exact_edge_probability(2, 88, 50000)).epsilon(1e-15));
    // ratio against the first-order form at the design point, frozen from
    // the rational oracle (the spec's [1 +/- 0.02] guess does not hold)
    const double factor =
        er_coupling_probability(2, 88, 50000) / asymptotic_edge_probability(2, 88, 50000);
    CHECK(factor == doctest::Approx(0.8860631803036499).epsilon(1e-9));
}

TEST_CASE("binomial upper tail") {
    // P[Bin(4, 0.5) >= 2] = 11/16
    CHECK(binomial_upper_tail(4, 0.5, 2) == doctest::Approx(11.0 / 16).epsilon(1e-12));
    CHECK(binomial_upper_tail(10, 0.0, 1) == 0.0);
    CHECK(binomial_upper_tail(10, 1.0, 3) == 1.0);
    CHECK(binomial_upper_tail(10, 0.3, 0) == 1.0);
}

}  // TEST_SUITE
