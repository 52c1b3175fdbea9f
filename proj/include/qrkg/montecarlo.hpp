#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qrkg/model.hpp"
#include "qrkg/properties.hpp"
#include "qrkg/rng.hpp"

namespace qrkg {

enum class ModelKind { Rkg, Er, Binq };

std::string to_string(ModelKind m);

using AnyParams = std::variant<ModelParams, ErParams, BinomialIntersectionParams>;

/// Monte-Carlo result for one parameter point and one property.
/// yes + no + unknown = samples always; emp_prob = yes/samples; the
/// interval [emp_lo, emp_hi] = [yes, yes+unknown]/samples brackets the
/// truth under any resolution of the Unknowns; the Wilson interval is the
/// 95% score interval on emp_prob.
struct SweepPoint {
    ModelKind model = ModelKind::Rkg;
    AnyParams params;
    PropertySpec property;
    int samples = 0;
    std::int64_t yes = 0;
    std::int64_t no = 0;
    std::int64_t unknown = 0;
    double emp_prob = 0.0;
    double emp_lo = 0.0;
    double emp_hi = 0.0;
    double wilson_lo = 0.0;
    double wilson_hi = 0.0;
    std::optional<double> predicted;
    std::uint64_t seed = 0;
    std::optional<double> eps;  // set by width estimation contexts
};

/// Sweep description: one model, one moving axis, one or more properties
/// evaluated on shared per-sample graphs.
struct SweepConfig {
    ModelKind model = ModelKind::Rkg;
    ModelParams rkg;                       // base parameters (axis value overwritten)
    ErParams er;
    BinomialIntersectionParams binq;
    char axis = 'K';                       // 'K' | 'P' | 'n'
    std::int64_t axis_from = 0;
    std::int64_t axis_to = 0;
    std::int64_t axis_step = 1;
    std::vector<PropertySpec> properties;
    int samples = 500;                     // per point
    std::uint64_t base_seed = 0;
    Budget budget;
    int threads = 0;                       // 0 = hardware concurrency

    void validate() const;
};

/// Estimates one point: `samples` graphs with per-sample seeds
/// (base, context, point, sample), checker verdict counting. The result is
/// independent of execution order and thread count.
SweepPoint estimate_point(const ModelParams& params, const PropertySpec& spec, int samples,
                          std::uint64_t base_seed, const Budget& budget, int threads = 0,
                          std::uint32_t context = kCtxSweep, std::uint32_t point_index = 0);

/// Same, with all properties evaluated against the same sampled graphs.
std::vector<SweepPoint> estimate_point_multi(const AnyParams& params,
                                             const std::vector<PropertySpec>& specs, int samples,
                                             std::uint64_t base_seed, const Budget& budget,
                                             int threads = 0, std::uint32_t context = kCtxSweep,
                                             std::uint32_t point_index = 0);

/// One SweepPoint per (axis value x property), with theory predictions
/// attached.
std::vector<SweepPoint> sweep(const SweepConfig& config);

/// Empirical transition thresholds of a K-scan:
/// K- = minimal K whose point estimate reaches eps, K+ = the same for
/// 1-eps. Point estimates decide; each threshold is re-estimated once at
/// doubled samples on an independent stream and the outcome recorded.
struct TransitionWidthEstimate {
    double eps = 0.0;
    std::int64_t k_minus = 0;
    std::int64_t k_plus = 0;
    std::int64_t width = 0;
    bool k_minus_confirmed = false;
    bool k_plus_confirmed = false;
    double k_minus_confirm_prob = 0.0;
    double k_plus_confirm_prob = 0.0;
    std::vector<SweepPoint> points;  // per scanned K
};

TransitionWidthEstimate empirical_transition_width(int q, std::int64_t n, std::int64_t P,
                                                   const PropertySpec& spec, double eps,
                                                   int samples, std::uint64_t base_seed,
                                                   const Budget& budget, int threads = 0);

/// Estimates P[G_q has I] and P[G_ER(n, er_coupling_probability) has I] on
/// independent seed streams.
struct CouplingResult {
    SweepPoint rkg;
    SweepPoint er;
    double er_edge_probability = 0.0;
    double difference = 0.0;  // rkg.emp_prob - er.emp_prob
};

CouplingResult coupling_experiment(int q, std::int64_t K, std::int64_t P, std::int64_t n,
                                   const PropertySpec& spec, int samples, std::uint64_t base_seed,
                                   const Budget& budget, int threads = 0);

/// Exact CSV schema:
/// model,q,n,K,P,property,k,eps,samples,yes,no,unknown,emp_prob,emp_lo,
/// emp_hi,wilson_lo,wilson_hi,predicted_prob,seed
std::string sweep_csv_header();
std::string sweep_csv_row(const SweepPoint& point);
std::string sweep_csv(const std::vector<SweepPoint>& points);

/// 95% Wilson score interval.
std::pair<double, double> wilson_interval(std::int64_t successes, std::int64_t trials);

}  // namespace qrkg
