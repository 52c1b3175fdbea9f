#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

#include "qrkg/theory.hpp"

namespace qrkg {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double factorial(int m) {
    double f = 1.0;
    for (int i = 2; i <= m; ++i) f *= i;
    return f;
}

void check_edge_params(int q, std::int64_t K, std::int64_t P) {
    if (q < 1 || K < q || P < K)
        throw std::invalid_argument("edge probability: need 1 <= q <= K <= P");
}

double log_ln_n(std::int64_t n) { return std::log(std::log(static_cast<double>(n))); }

}  // namespace

double log_binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || k > n) return -kInf;
    if (k == 0 || k == n) return 0.0;
    return std::lgamma(static_cast<double>(n) + 1) - std::lgamma(static_cast<double>(k) + 1) -
           std::lgamma(static_cast<double>(n - k) + 1);
}

namespace {

long double log_binomial_ld(std::int64_t n, std::int64_t k) {
    if (k < 0 || k > n) return -std::numeric_limits<long double>::infinity();
    if (k == 0 || k == n) return 0.0L;
    return lgammal(static_cast<long double>(n) + 1) - lgammal(static_cast<long double>(k) + 1) -
           lgammal(static_cast<long double>(n - k) + 1);
}

}  // namespace

double exact_edge_probability(int q, std::int64_t K, std::int64_t P) {
    check_edge_params(q, K, P);
    // First admissible overlap; below it one of the coefficients vanishes.
    const std::int64_t u0 = std::max<std::int64_t>(q, 2 * K - P);
    // Head term in extended precision, successors by the exact ratio
    //   t(u+1)/t(u) = (K-u)^2 / ((u+1)(P-2K+u+1)),
    // so the lgammal error enters once instead of once per term.
    const long double log_head = log_binomial_ld(K, u0) + log_binomial_ld(P - K, K - u0) -
                                 log_binomial_ld(P, K);
    long double term = expl(log_head);
    long double sum = 0.0L, carry = 0.0L;
    for (std::int64_t u = u0; u <= K; ++u) {
        const long double y = term - carry;
        const long double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
        if (term < sum * 1e-22L && u > u0) break;  // tail below long-double resolution
        const long double numer = static_cast<long double>(K - u) * static_cast<long double>(K - u);
        const long double denom =
            static_cast<long double>(u + 1) * static_cast<long double>(P - 2 * K + u + 1);
        if (denom <= 0.0L) break;
        term *= numer / denom;
    }
    return std::min(static_cast<double>(sum), 1.0);
}

double exact_edge_probability_rational(int q, std::int64_t K, std::int64_t P) {
    check_edge_params(q, K, P);
    using boost::multiprecision::cpp_int;
    const auto binom = [](std::int64_t n, std::int64_t k) -> cpp_int {
        if (k < 0 || k > n) return 0;
        k = std::min(k, n - k);
        cpp_int r = 1;
        for (std::int64_t i = 0; i < k; ++i) {
            r *= n - i;
            r /= i + 1;
        }
        return r;
    };
    cpp_int numer = 0;
    for (std::int64_t u = q; u <= K; ++u) numer += binom(K, u) * binom(P - K, K - u);
    const cpp_int denom = binom(P, K);
    // scaled integer division keeps ~28 significant digits before the cast
    cpp_int scale = 1;
    for (int i = 0; i < 28; ++i) scale *= 10;
    const cpp_int scaled = numer * scale / denom;
    return scaled.convert_to<double>() / scale.convert_to<double>();
}

double asymptotic_edge_probability(int q, std::int64_t K, std::int64_t P) {
    if (q < 1 || K < 1 || P < 1) throw std::invalid_argument("edge probability: bad parameters");
    const double ratio = static_cast<double>(K) * static_cast<double>(K) / static_cast<double>(P);
    return std::pow(ratio, q) / factorial(q);
}

int kappa_of(const PropertySpec& spec) {
    spec.validate();
    switch (spec.kind) {
        case PropertyKind::MinDegreeAtLeast:
        case PropertyKind::KConnectivity:
        case PropertyKind::KRobustness:
            return spec.k;
        case PropertyKind::HamiltonCycle:
            return 2;
        case PropertyKind::PerfectMatching:
            return 1;
    }
    throw std::logic_error("kappa_of: bad kind");
}

Deviation deviation(const ModelParams& params, const PropertySpec& spec) {
    params.validate();
    Deviation dev;
    dev.kappa = kappa_of(spec);
    if (dev.kappa >= 2 && params.n < 3)
        throw std::invalid_argument("deviation: n >= 3 required when kappa >= 2");
    const double log_scaling = 2.0 * params.q * std::log(static_cast<double>(params.K)) -
                               params.q * std::log(static_cast<double>(params.P)) -
                               std::lgamma(params.q + 1.0);
    dev.scaling = std::exp(log_scaling);
    dev.alpha = static_cast<double>(params.n) * dev.scaling - std::log(static_cast<double>(params.n)) -
                (dev.kappa - 1) * log_ln_n(params.n);
    return dev;
}

Deviation deviation_from_edge_probability(std::int64_t n, double edge_probability, int kappa) {
    if (n < 2 || (kappa >= 2 && n < 3))
        throw std::invalid_argument("deviation: n too small");
    if (!(edge_probability >= 0.0 && edge_probability <= 1.0))
        throw std::invalid_argument("deviation: edge probability outside [0,1]");
    Deviation dev;
    dev.kappa = kappa;
    dev.scaling = edge_probability;
    dev.alpha = static_cast<double>(n) * edge_probability - std::log(static_cast<double>(n)) -
                (kappa - 1) * log_ln_n(n);
    return dev;
}

LimitProbability limit_probability(const PropertySpec& spec, double alpha) {
    spec.validate();
    const int kappa = kappa_of(spec);
    if (spec.kind == PropertyKind::KRobustness) {
        if (alpha == -kInf) return {0.0};
        if (alpha == kInf) return {1.0};
        return {std::nullopt};  // the theorem is a zero-one law only
    }
    if (alpha == -kInf) return {0.0};
    if (alpha == kInf) return {1.0};
    return {std::exp(-std::exp(-alpha) / factorial(kappa - 1))};
}

namespace {

// target deviation for "property with probability at least p"
double target_alpha(int kappa, double p) {
    if (!(p > 0.0 && p < 1.0))
        throw std::invalid_argument("critical parameters: p must be in (0,1)");
    return -std::log(factorial(kappa - 1) * std::log(1.0 / p));
}

double alpha_at(int q, double n, double K, double P, int kappa) {
    const double log_scaling =
        2.0 * q * std::log(K) - q * std::log(P) - std::lgamma(q + 1.0);
    return n * std::exp(log_scaling) - std::log(n) - (kappa - 1) * std::log(std::log(n));
}

void check_solver_inputs(int q, std::int64_t n, double p) {
    if (q < 1) throw std::invalid_argument("critical parameters: q must be >= 1");
    if (n < 3) throw std::invalid_argument("critical parameters: n must be >= 3");
    if (!(p > 0.0 && p < 1.0))
        throw std::invalid_argument("critical parameters: p must be in (0,1)");
}

}  // namespace

CriticalParams critical_key_ring(int q, std::int64_t n, std::int64_t P, const PropertySpec& spec,
                                 double p) {
    check_solver_inputs(q, n, p);
    if (P < q) throw std::invalid_argument("critical_key_ring: P must be >= q");
    const int kappa = kappa_of(spec);
    const double ta = target_alpha(kappa, p);
    const double bracket =
        std::log(static_cast<double>(n)) + (kappa - 1) * log_ln_n(n) + ta;
    if (bracket < 0.0)
        throw std::domain_error("critical_key_ring: target unreachable (negative root argument)");

    const double nd = static_cast<double>(n), Pd = static_cast<double>(P);
    double guess = std::sqrt(Pd) * std::pow(std::tgamma(q + 1.0) * bracket / nd, 1.0 / (2.0 * q));
    std::int64_t K = static_cast<std::int64_t>(std::ceil(guess));
    K = std::clamp<std::int64_t>(K, q, P);
    // boundary repair against floating error in the closed form
    while (K > q && alpha_at(q, nd, static_cast<double>(K - 1), Pd, kappa) >= ta) --K;
    while (K < P && alpha_at(q, nd, static_cast<double>(K), Pd, kappa) < ta) ++K;

    CriticalParams out;
    out.solved_for = 'K';
    out.value = K;
    out.target_probability = p;
    out.property = spec;
    out.clamped = alpha_at(q, nd, static_cast<double>(K), Pd, kappa) < ta;
    return out;
}

CriticalParams critical_key_pool(int q, std::int64_t n, std::int64_t K, const PropertySpec& spec,
                                 double p) {
    check_solver_inputs(q, n, p);
    if (K < q) throw std::invalid_argument("critical_key_pool: K must be >= q");
    const int kappa = kappa_of(spec);
    const double ta = target_alpha(kappa, p);
    const double bracket =
        std::log(static_cast<double>(n)) + (kappa - 1) * log_ln_n(n) + ta;
    if (bracket <= 0.0)
        throw std::domain_error("critical_key_pool: target unreachable (nonpositive root argument)");

    const double nd = static_cast<double>(n), Kd = static_cast<double>(K);
    const double guess =
        Kd * Kd * std::pow(nd / (std::tgamma(q + 1.0) * bracket), 1.0 / q);
    auto P = static_cast<std::int64_t>(std::floor(guess));
    P = std::max<std::int64_t>(P, K);
    while (alpha_at(q, nd, Kd, static_cast<double>(P + 1), kappa) >= ta) ++P;
    while (P > K && alpha_at(q, nd, Kd, static_cast<double>(P), kappa) < ta) --P;

    CriticalParams out;
    out.solved_for = 'P';
    out.value = P;
    out.target_probability = p;
    out.property = spec;
    out.clamped = alpha_at(q, nd, Kd, static_cast<double>(P), kappa) < ta;
    return out;
}

CriticalParams critical_node_count(int q, std::int64_t K, std::int64_t P, const PropertySpec& spec,
                                   double p) {
    if (q < 1 || K < q || P < K)
        throw std::invalid_argument("critical_node_count: need 1 <= q <= K <= P");
    const int kappa = kappa_of(spec);
    const double ta = target_alpha(kappa, p);
    const double Kd = static_cast<double>(K), Pd = static_cast<double>(P);
    const auto meets = [&](std::int64_t n) {
        return alpha_at(q, static_cast<double>(n), Kd, Pd, kappa) >= ta;
    };

    CriticalParams out;
    out.solved_for = 'n';
    out.target_probability = p;
    out.property = spec;

    // the deviation is not monotone in n at the very bottom; scan there
    for (std::int64_t n = 3; n <= 20; ++n) {
        if (meets(n)) {
            out.value = n;
            return out;
        }
    }
    // beyond the dip the predicate flips false -> true exactly once
    constexpr std::int64_t kCap = 1'000'000'000'000LL;
    std::int64_t lo = 20, hi = 40;
    while (!meets(hi)) {
        lo = hi;
        hi *= 2;
        if (hi > kCap)
            throw std::domain_error("critical_node_count: no solution up to 1e12");
    }
    while (lo + 1 < hi) {
        const std::int64_t mid = lo + (hi - lo) / 2;
        (meets(mid) ? hi : lo) = mid;
    }
    out.value = hi;
    return out;
}

double predicted_width(int q, std::int64_t n, std::int64_t P, const PropertySpec& spec,
                       double eps) {
    if (!(eps > 0.0 && eps < 0.5))
        throw std::invalid_argument("predicted_width: eps must be in (0, 1/2)");
    spec.validate();
    const double nd = static_cast<double>(n);
    const double c1_minus_c2 = std::log(std::log(1.0 / eps) / std::log(1.0 / (1.0 - eps)));
    return std::sqrt(static_cast<double>(P)) * std::pow(nd, -1.0 / (2.0 * q)) *
           std::pow(std::log(nd), (1.0 - 2.0 * q) / (2.0 * q)) * c1_minus_c2 *
           std::pow(std::tgamma(q + 1.0), 1.0 / (2.0 * q)) / (2.0 * q);
}

WidthRegime width_regime(int q, PoolGrowthClass growth) {
    if (q < 1) throw std::invalid_argument("width_regime: q must be >= 1");
    if (q >= 2) return WidthRegime::Unbounded;
    switch (growth) {
        case PoolGrowthClass::LinearButSubLog: return WidthRegime::ZeroOrOne;
        case PoolGrowthClass::ThetaNLogN: return WidthRegime::Bounded;
        case PoolGrowthClass::OmegaNLogN: return WidthRegime::Unbounded;
    }
    throw std::logic_error("width_regime: bad growth class");
}

double er_coupling_probability(int q, std::int64_t K, std::int64_t P) {
    return exact_edge_probability(q, K, P);
}

double binomial_upper_tail(std::int64_t trials, double prob, int threshold) {
    if (threshold <= 0) return 1.0;
    if (prob <= 0.0) return 0.0;
    if (prob >= 1.0) return trials >= threshold ? 1.0 : 0.0;
    if (threshold > trials) return 0.0;
    // complement of the lower tail; threshold is small (q <= a few) here
    double lower = 0.0;
    for (int u = 0; u < threshold; ++u) {
        const double log_term = log_binomial(trials, u) + u * std::log(prob) +
                                (trials - u) * std::log1p(-prob);
        lower += std::exp(log_term);
    }
    return std::max(0.0, 1.0 - lower);
}

}  // namespace qrkg
