#pragma once

#include <cstdint>
#include <optional>

#include "qrkg/model.hpp"
#include "qrkg/properties.hpp"

namespace qrkg {

/// ln C(n, k) through lgamma; 0 when the coefficient is degenerate-1,
/// -inf when it is zero.
double log_binomial(std::int64_t n, std::int64_t k);

/// Edge probability of G_q(n, K, P): the hypergeometric overlap tail
///   sum_{u=q}^{K} C(K,u) C(P-K, K-u) / C(P, K),
/// evaluated in log space with compensated summation.
double exact_edge_probability(int q, std::int64_t K, std::int64_t P);

/// The same tail evaluated in exact big-integer rationals. Slow; the
/// oracle route for conformance tests.
double exact_edge_probability_rational(int q, std::int64_t K, std::int64_t P);

/// First-order edge probability (1/q!) (K^2/P)^q. Valid as K grows with
/// K^2/P -> 0; the error decays like q^2/K, so small-K evaluations can be
/// far off (kept defined anyway).
double asymptotic_edge_probability(int q, std::int64_t K, std::int64_t P);

/// Order of the minimum-degree requirement driving each property:
/// k for min-degree / k-connectivity / k-robustness, 2 for Hamilton
/// cycles, 1 for perfect matchings.
int kappa_of(const PropertySpec& spec);

/// Finite-n deviation of the model from the critical scaling:
///   alpha = n * (1/q!) K^{2q} / P^q - ln n - (kappa-1) ln ln n.
/// The property probability tends to exp(-e^{-alpha}/(kappa-1)!) when
/// alpha converges.
struct Deviation {
    int kappa = 1;
    double scaling = 0.0;
    double alpha = 0.0;
};

Deviation deviation(const ModelParams& params, const PropertySpec& spec);

/// Same rearrangement driven by a concrete per-pair edge probability
/// instead of the closed-form scaling; used to attach predictions to the
/// Erdos-Renyi and binomial-intersection models.
Deviation deviation_from_edge_probability(std::int64_t n, double edge_probability, int kappa);

/// Limit probability at a given deviation limit. KRobustness admits only
/// the zero-one endpoints; a finite alpha leaves it indeterminate.
struct LimitProbability {
    std::optional<double> value;
    bool indeterminate() const { return !value.has_value(); }
};

LimitProbability limit_probability(const PropertySpec& spec, double alpha);

/// Critical design parameters: minimal K / maximal P / minimal n such that
/// the deviation meets the target alpha = -ln((kappa-1)! ln(1/p)).
struct CriticalParams {
    char solved_for = 'K';
    std::int64_t value = 0;
    double target_probability = 0.0;
    PropertySpec property;
    bool clamped = false;  // the [q, P] / [K, inf) clamp had to bind
};

CriticalParams critical_key_ring(int q, std::int64_t n, std::int64_t P, const PropertySpec& spec,
                                 double p);
CriticalParams critical_key_pool(int q, std::int64_t n, std::int64_t K, const PropertySpec& spec,
                                 double p);
CriticalParams critical_node_count(int q, std::int64_t K, std::int64_t P, const PropertySpec& spec,
                                   double p);

/// Transition-width prediction
///   P^{1/2} n^{-1/(2q)} (ln n)^{(1-2q)/(2q)} (c1-c2) (q!)^{1/(2q)} / (2q)
/// with c1 - c2 pinned to ln(ln(1/eps) / ln(1/(1-eps))), the limiting
/// choice of the two free constants; an extrapolation, not a stated value.
double predicted_width(int q, std::int64_t n, std::int64_t P, const PropertySpec& spec,
                       double eps);

/// Growth class of the key pool against n.
enum class PoolGrowthClass {
    LinearButSubLog,  // Theta(n) and o(n ln n)
    ThetaNLogN,       // Theta(n ln n)
    OmegaNLogN,       // omega(n ln n)
};

enum class WidthRegime {
    ZeroOrOne,  // 0 or 1 for every n sufficiently large
    Bounded,    // Theta(1)
    Unbounded,  // omega(1)
};

WidthRegime width_regime(int q, PoolGrowthClass growth);

/// Edge probability used when coupling against an Erdos-Renyi graph.
/// Defined as the exact edge probability (the paper's unspecified
/// 1 - o(1/ln n) correction is dropped, making the empirical coupling
/// check slightly stricter).
double er_coupling_probability(int q, std::int64_t K, std::int64_t P);

/// Upper tail P[Binomial(trials, prob) >= threshold], evaluated stably;
/// the edge probability of the binomial q-intersection model is
/// binomial_upper_tail(P, x^2, q).
double binomial_upper_tail(std::int64_t trials, double prob, int threshold);

}  // namespace qrkg
