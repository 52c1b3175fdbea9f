#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <thread>

#include "qrkg/montecarlo.hpp"
#include "qrkg/sampler.hpp"
#include "qrkg/theory.hpp"

namespace qrkg {

std::string to_string(ModelKind m) {
    switch (m) {
        case ModelKind::Rkg: return "rkg";
        case ModelKind::Er: return "er";
        case ModelKind::Binq: return "binq";
    }
    throw std::logic_error("bad model kind");
}

void SweepConfig::validate() const {
    if (axis != 'K' && axis != 'P' && axis != 'n')
        throw std::invalid_argument("sweep: axis must be one of K, P, n");
    if (axis_step < 1) throw std::invalid_argument("sweep: step must be >= 1");
    if (axis_to < axis_from) throw std::invalid_argument("sweep: empty axis range");
    if (samples < 1) throw std::invalid_argument("sweep: samples must be >= 1");
    if (properties.empty()) throw std::invalid_argument("sweep: no properties given");
    for (const auto& spec : properties) spec.validate();
    if (model != ModelKind::Rkg && axis != 'n')
        throw std::invalid_argument("sweep: only the n axis applies to er/binq models");
    if (model == ModelKind::Er && axis == 'P')
        throw std::invalid_argument("sweep: er model has no P parameter");
    // perfect-matching experiments need an even node count at every point
    const bool has_pm = std::any_of(properties.begin(), properties.end(), [](const auto& s) {
        return s.kind == PropertyKind::PerfectMatching;
    });
    if (has_pm) {
        std::int64_t n0;
        if (axis == 'n') n0 = axis_from;
        else if (model == ModelKind::Rkg) n0 = rkg.n;
        else if (model == ModelKind::Er) n0 = er.n;
        else n0 = binq.n;
        const bool even_everywhere =
            axis != 'n' ? (n0 % 2 == 0) : (n0 % 2 == 0 && axis_step % 2 == 0);
        if (!even_everywhere)
            throw std::invalid_argument("sweep: perfect matching requires even n across the axis");
    }
}

namespace {

UndirectedGraph sample_any(const AnyParams& params, const RngSeed& seed) {
    return std::visit(
        [&](const auto& p) -> UndirectedGraph {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, ModelParams>) return sample_rkg(p, seed);
            else if constexpr (std::is_same_v<T, ErParams>) return sample_er(p, seed);
            else return sample_binomial_intersection(p, seed);
        },
        params);
}

std::int64_t node_count_of(const AnyParams& params) {
    return std::visit([](const auto& p) { return p.n; }, params);
}

struct Counts {
    std::int64_t yes = 0, no = 0, unknown = 0;
};

// parallel map over sample indices with commutative count aggregation;
// identical results at any thread count
std::vector<Counts> run_samples(const AnyParams& params, const std::vector<PropertySpec>& specs,
                                int samples, std::uint64_t base_seed, const Budget& budget,
                                int threads, std::uint32_t context, std::uint32_t point_index) {
    for (const auto& spec : specs) {
        spec.validate();
        if (spec.kind == PropertyKind::PerfectMatching && node_count_of(params) % 2 != 0)
            throw std::invalid_argument("estimate: perfect matching requires even n");
    }
    std::visit([](const auto& p) { p.validate(); }, params);

    int worker_count = threads > 0 ? threads : static_cast<int>(std::thread::hardware_concurrency());
    worker_count = std::clamp(worker_count, 1, std::max(1, samples));

    std::vector<std::vector<Counts>> partial(
        static_cast<std::size_t>(worker_count), std::vector<Counts>(specs.size()));

    const auto worker = [&](int w) {
        auto& mine = partial[static_cast<std::size_t>(w)];
        for (int s = w; s < samples; s += worker_count) {
            const RngSeed seed{base_seed, context, point_index, static_cast<std::uint32_t>(s)};
            const UndirectedGraph g = sample_any(params, seed);
            for (std::size_t i = 0; i < specs.size(); ++i) {
                const CheckOutcome out = check_property(g, specs[i], budget);
                switch (out.verdict) {
                    case Verdict::Yes: ++mine[i].yes; break;
                    case Verdict::No: ++mine[i].no; break;
                    case Verdict::Unknown: ++mine[i].unknown; break;
                }
            }
        }
    };

    if (worker_count == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(worker_count));
        for (int w = 0; w < worker_count; ++w) pool.emplace_back(worker, w);
        for (auto& t : pool) t.join();
    }

    std::vector<Counts> total(specs.size());
    for (const auto& part : partial)
        for (std::size_t i = 0; i < specs.size(); ++i) {
            total[i].yes += part[i].yes;
            total[i].no += part[i].no;
            total[i].unknown += part[i].unknown;
        }
    return total;
}

std::optional<double> predict(const AnyParams& params, const PropertySpec& spec) {
    const int kappa = kappa_of(spec);
    Deviation dev;
    if (const auto* rkg = std::get_if<ModelParams>(&params)) {
        if (kappa >= 2 && rkg->n < 3) return std::nullopt;
        dev = deviation(*rkg, spec);
    } else if (const auto* er = std::get_if<ErParams>(&params)) {
        if (kappa >= 2 && er->n < 3) return std::nullopt;
        dev = deviation_from_edge_probability(er->n, er->s, kappa);
    } else {
        const auto& b = std::get<BinomialIntersectionParams>(params);
        if (kappa >= 2 && b.n < 3) return std::nullopt;
        const double edge = binomial_upper_tail(b.P, b.x * b.x, b.q);
        dev = deviation_from_edge_probability(b.n, edge, kappa);
    }
    const LimitProbability limit = limit_probability(spec, dev.alpha);
    if (limit.indeterminate()) return std::nullopt;
    return limit.value;
}

SweepPoint make_point(ModelKind model, const AnyParams& params, const PropertySpec& spec,
                      int samples, const Counts& counts, std::uint64_t base_seed) {
    SweepPoint pt;
    pt.model = model;
    pt.params = params;
    pt.property = spec;
    pt.samples = samples;
    pt.yes = counts.yes;
    pt.no = counts.no;
    pt.unknown = counts.unknown;
    const double s = static_cast<double>(samples);
    pt.emp_prob = static_cast<double>(counts.yes) / s;
    pt.emp_lo = pt.emp_prob;
    pt.emp_hi = static_cast<double>(counts.yes + counts.unknown) / s;
    std::tie(pt.wilson_lo, pt.wilson_hi) = wilson_interval(counts.yes, samples);
    pt.predicted = predict(params, spec);
    pt.seed = base_seed;
    return pt;
}

ModelKind kind_of(const AnyParams& params) {
    if (std::holds_alternative<ModelParams>(params)) return ModelKind::Rkg;
    if (std::holds_alternative<ErParams>(params)) return ModelKind::Er;
    return ModelKind::Binq;
}

}  // namespace

std::pair<double, double> wilson_interval(std::int64_t successes, std::int64_t trials) {
    if (trials <= 0) return {0.0, 1.0};
    constexpr double z = 1.959963984540054;  // 97.5% normal quantile
    const double nd = static_cast<double>(trials);
    const double phat = static_cast<double>(successes) / nd;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / nd;
    const double center = phat + z2 / (2.0 * nd);
    const double margin = z * std::sqrt(phat * (1.0 - phat) / nd + z2 / (4.0 * nd * nd));
    const double lo = std::min(phat, std::max(0.0, (center - margin) / denom));
    const double hi = std::max(phat, std::min(1.0, (center + margin) / denom));
    return {lo, hi};
}

SweepPoint estimate_point(const ModelParams& params, const PropertySpec& spec, int samples,
                          std::uint64_t base_seed, const Budget& budget, int threads,
                          std::uint32_t context, std::uint32_t point_index) {
    const AnyParams any = params;
    const auto counts =
        run_samples(any, {spec}, samples, base_seed, budget, threads, context, point_index);
    return make_point(ModelKind::Rkg, any, spec, samples, counts[0], base_seed);
}

std::vector<SweepPoint> estimate_point_multi(const AnyParams& params,
                                             const std::vector<PropertySpec>& specs, int samples,
                                             std::uint64_t base_seed, const Budget& budget,
                                             int threads, std::uint32_t context,
                                             std::uint32_t point_index) {
    const auto counts =
        run_samples(params, specs, samples, base_seed, budget, threads, context, point_index);
    std::vector<SweepPoint> points;
    points.reserve(specs.size());
    for (std::size_t i = 0; i < specs.size(); ++i)
        points.push_back(make_point(kind_of(params), params, specs[i], samples, counts[i], base_seed));
    return points;
}

std::vector<SweepPoint> sweep(const SweepConfig& config) {
    config.validate();
    std::vector<SweepPoint> result;
    std::uint32_t point_index = 0;
    for (std::int64_t value = config.axis_from; value <= config.axis_to;
         value += config.axis_step, ++point_index) {
        AnyParams params;
        if (config.model == ModelKind::Rkg) {
            ModelParams p = config.rkg;
            if (config.axis == 'K') p.K = value;
            else if (config.axis == 'P') p.P = value;
            else p.n = value;
            params = p;
        } else if (config.model == ModelKind::Er) {
            ErParams p = config.er;
            p.n = value;
            params = p;
        } else {
            BinomialIntersectionParams p = config.binq;
            if (config.axis == 'P') p.P = value;
            else p.n = value;
            params = p;
        }
        auto points = estimate_point_multi(params, config.properties, config.samples,
                                           config.base_seed, config.budget, config.threads,
                                           kCtxSweep, point_index);
        result.insert(result.end(), points.begin(), points.end());
    }
    return result;
}

TransitionWidthEstimate empirical_transition_width(int q, std::int64_t n, std::int64_t P,
                                                   const PropertySpec& spec, double eps,
                                                   int samples, std::uint64_t base_seed,
                                                   const Budget& budget, int threads) {
    if (!(eps > 0.0 && eps < 0.5))
        throw std::invalid_argument("transition width: eps must be in (0, 1/2)");
    spec.validate();

    TransitionWidthEstimate est;
    est.eps = eps;
    const auto scan_cap = static_cast<std::int64_t>(
        std::ceil(std::sqrt(static_cast<double>(P))));

    std::int64_t k_minus = -1, k_plus = -1;
    for (std::int64_t K = q; K <= P; ++K) {
        ModelParams params{n, q, K, P};
        SweepPoint pt = estimate_point(params, spec, samples, base_seed, budget, threads,
                                       kCtxWidthScan, static_cast<std::uint32_t>(K));
        pt.eps = eps;
        est.points.push_back(pt);
        if (k_minus < 0 && pt.emp_prob >= eps) k_minus = K;
        if (pt.emp_prob >= 1.0 - eps) {
            k_plus = K;
            break;
        }
        if (K >= scan_cap && k_plus < 0)
            throw std::runtime_error(
                "transition width: scan cap ceil(sqrt(P)) reached without crossing 1-eps");
    }
    est.k_minus = k_minus;
    est.k_plus = k_plus;
    est.width = k_plus - k_minus;

    // confirmation pass at doubled samples on an independent stream
    const auto confirm = [&](std::int64_t K, double level, bool& flag, double& prob) {
        ModelParams params{n, q, K, P};
        const SweepPoint pt = estimate_point(params, spec, samples * 2, base_seed, budget, threads,
                                             kCtxWidthConfirm, static_cast<std::uint32_t>(K));
        prob = pt.emp_prob;
        flag = pt.emp_prob >= level;
    };
    confirm(k_minus, eps, est.k_minus_confirmed, est.k_minus_confirm_prob);
    confirm(k_plus, 1.0 - eps, est.k_plus_confirmed, est.k_plus_confirm_prob);
    return est;
}

CouplingResult coupling_experiment(int q, std::int64_t K, std::int64_t P, std::int64_t n,
                                   const PropertySpec& spec, int samples, std::uint64_t base_seed,
                                   const Budget& budget, int threads) {
    spec.validate();
    const ModelParams rkg_params{n, q, K, P};
    rkg_params.validate();

    CouplingResult result;
    result.er_edge_probability = er_coupling_probability(q, K, P);

    {
        const auto counts = run_samples(AnyParams(rkg_params), {spec}, samples, base_seed, budget,
                                        threads, kCtxCoupleRkg, 0);
        result.rkg =
            make_point(ModelKind::Rkg, AnyParams(rkg_params), spec, samples, counts[0], base_seed);
    }
    {
        const ErParams er_params{n, result.er_edge_probability};
        const auto counts = run_samples(AnyParams(er_params), {spec}, samples, base_seed, budget,
                                        threads, kCtxCoupleEr, 0);
        result.er =
            make_point(ModelKind::Er, AnyParams(er_params), spec, samples, counts[0], base_seed);
    }
    result.difference = result.rkg.emp_prob - result.er.emp_prob;
    return result;
}

namespace {

std::string format_prob(double p) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", p);
    return buf;
}

}  // namespace

std::string sweep_csv_header() {
    return "model,q,n,K,P,property,k,eps,samples,yes,no,unknown,emp_prob,emp_lo,emp_hi,"
           "wilson_lo,wilson_hi,predicted_prob,seed";
}

std::string sweep_csv_row(const SweepPoint& pt) {
    std::string q, n, K, P;
    if (const auto* rkg = std::get_if<ModelParams>(&pt.params)) {
        q = std::to_string(rkg->q);
        n = std::to_string(rkg->n);
        K = std::to_string(rkg->K);
        P = std::to_string(rkg->P);
    } else if (const auto* er = std::get_if<ErParams>(&pt.params)) {
        n = std::to_string(er->n);
    } else {
        const auto& b = std::get<BinomialIntersectionParams>(pt.params);
        q = std::to_string(b.q);
        n = std::to_string(b.n);
        P = std::to_string(b.P);
    }
    std::string eps;
    if (pt.eps) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%g", *pt.eps);
        eps = buf;
    }
    std::string row = to_string(pt.model) + "," + q + "," + n + "," + K + "," + P + "," +
                      pt.property.to_string() + "," +
                      (pt.property.needs_k() ? std::to_string(pt.property.k) : std::string()) +
                      "," + eps + "," + std::to_string(pt.samples) + "," + std::to_string(pt.yes) +
                      "," + std::to_string(pt.no) + "," + std::to_string(pt.unknown) + "," +
                      format_prob(pt.emp_prob) + "," + format_prob(pt.emp_lo) + "," +
                      format_prob(pt.emp_hi) + "," + format_prob(pt.wilson_lo) + "," +
                      format_prob(pt.wilson_hi) + "," +
                      (pt.predicted ? format_prob(*pt.predicted) : std::string()) + "," +
                      std::to_string(pt.seed);
    return row;
}

std::string sweep_csv(const std::vector<SweepPoint>& points) {
    std::string out = sweep_csv_header() + "\n";
    for (const auto& pt : points) out += sweep_csv_row(pt) + "\n";
    return out;
}

}  // namespace qrkg
