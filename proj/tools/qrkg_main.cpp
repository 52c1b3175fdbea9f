// Command-line surface of the toolkit: sampling, property checking, theory
// predictions, critical-parameter solving, Monte-Carlo sweeps, transition
// widths and coupling comparisons. Every artifact embeds the resolved
// configuration, the seed and the tool version.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "qrkg/config.hpp"
#include "qrkg/json_io.hpp"
#include "qrkg/oracle.hpp"
#include "qrkg/sampler.hpp"
#include "qrkg/theory.hpp"

namespace {

using namespace qrkg;

ordered_json provenance(const std::string& command) {
    ordered_json j;
    j["tool"] = kToolName;
    j["version"] = kToolVersion;
    j["command"] = command;
    return j;
}

void emit(const ordered_json& doc, const std::string& out_path) {
    if (out_path.empty() || out_path == "-") {
        std::cout << doc.dump(2) << "\n";
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file '" + out_path + "'");
    out << doc.dump(2) << "\n";
}

void write_text(const std::string& text, const std::string& out_path) {
    if (out_path.empty() || out_path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file '" + out_path + "'");
    out << text;
}

PropertySpec property_from_flags(std::string property, int k) {
    if (property.find(':') == std::string::npos && k > 0)
        property += ":" + std::to_string(k);
    return PropertySpec::parse(property);
}

// ---- sample ----------------------------------------------------------

struct SampleArgs {
    std::string model = "rkg";
    std::int64_t n = 0, K = 0, P = 0;
    int q = 1;
    double s = -1.0, x = -1.0;
    std::uint64_t seed = 0;
    std::string out;
};

int run_sample(const SampleArgs& args) {
    const RngSeed seed{args.seed, kCtxCli, 0, 0};
    UndirectedGraph g;
    ModelKind kind;
    AnyParams params;
    if (args.model == "rkg") {
        ModelParams p{args.n, args.q, args.K, args.P};
        g = sample_rkg(p, seed);
        kind = ModelKind::Rkg;
        params = p;
    } else if (args.model == "er") {
        if (args.s < 0) throw CLI::ValidationError("--s is required for --model er");
        ErParams p{args.n, args.s};
        g = sample_er(p, seed);
        kind = ModelKind::Er;
        params = p;
    } else if (args.model == "binq") {
        if (args.x < 0) throw CLI::ValidationError("--x is required for --model binq");
        BinomialIntersectionParams p{args.n, args.x, args.P, args.q};
        g = sample_binomial_intersection(p, seed);
        kind = ModelKind::Binq;
        params = p;
    } else {
        throw CLI::ValidationError("unknown model '" + args.model + "'");
    }
    emit(graph_to_json(g, kind, params, args.seed), args.out);
    return 0;
}

// ---- check -----------------------------------------------------------

int run_check(const std::string& in_path, const std::string& property, int k,
              std::uint64_t budget_work, bool use_oracle, const std::string& out) {
    std::ifstream in(in_path);
    if (!in) throw std::runtime_error("cannot open graph file '" + in_path + "'");
    ordered_json doc = ordered_json::parse(in);
    const UndirectedGraph g = graph_from_json(doc);
    const PropertySpec spec = property_from_flags(property, k);
    const CheckOutcome outcome =
        use_oracle ? oracle_check(g, spec) : check_property(g, spec, Budget{budget_work});

    ordered_json result = provenance("check");
    result["input"] = in_path;
    result["property"] = spec.to_string();
    result["budget"] = budget_work;
    result["result"] = outcome_to_json(spec, outcome);
    emit(result, out);
    return 0;
}

// ---- predict ---------------------------------------------------------

int run_predict(const std::string& property, int k, std::int64_t n, int q, std::int64_t K,
                std::int64_t P, const std::string& out) {
    const PropertySpec spec = property_from_flags(property, k);
    const ModelParams params{n, q, K, P};
    const Deviation dev = deviation(params, spec);
    const LimitProbability limit = limit_probability(spec, dev.alpha);

    ordered_json result = provenance("predict");
    result["params"] = params_to_json(AnyParams(params));
    result["property"] = spec.to_string();
    result["kappa"] = dev.kappa;
    result["scaling"] = dev.scaling;
    result["alpha"] = dev.alpha;
    if (limit.indeterminate()) result["limit_probability"] = "indeterminate";
    else result["limit_probability"] = *limit.value;
    result["exact_edge_probability"] = exact_edge_probability(q, K, P);
    result["asymptotic_edge_probability"] = asymptotic_edge_probability(q, K, P);
    emit(result, out);
    return 0;
}

// ---- threshold -------------------------------------------------------

int run_threshold(const std::string& solve, const std::string& property, int k, int q,
                  std::int64_t n, std::int64_t K, std::int64_t P, double p,
                  const std::string& out) {
    const PropertySpec spec = property_from_flags(property, k);
    CriticalParams critical;
    if (solve == "K") critical = critical_key_ring(q, n, P, spec, p);
    else if (solve == "P") critical = critical_key_pool(q, n, K, spec, p);
    else if (solve == "n") critical = critical_node_count(q, K, P, spec, p);
    else throw CLI::ValidationError("--solve must be K, P or n");

    ordered_json result = provenance("threshold");
    result["solve"] = solve;
    result["property"] = spec.to_string();
    result["q"] = q;
    if (solve != "n") result["n"] = n;
    if (solve != "K") result["K"] = K;
    if (solve != "P") result["P"] = P;
    result["p"] = p;
    result["value"] = critical.value;
    result["clamped"] = critical.clamped;
    emit(result, out);
    return 0;
}

// ---- sweep -----------------------------------------------------------

ordered_json sweep_document(const SweepConfig& config, const std::vector<SweepPoint>& points) {
    ordered_json doc = provenance("sweep");
    ordered_json cfg;
    cfg["model"] = to_string(config.model);
    if (config.model == ModelKind::Rkg) cfg["params"] = params_to_json(AnyParams(config.rkg));
    else if (config.model == ModelKind::Er) cfg["params"] = params_to_json(AnyParams(config.er));
    else cfg["params"] = params_to_json(AnyParams(config.binq));
    cfg["axis"] = std::string(1, config.axis);
    cfg["from"] = config.axis_from;
    cfg["to"] = config.axis_to;
    cfg["step"] = config.axis_step;
    auto props = ordered_json::array();
    for (const auto& spec : config.properties) props.push_back(spec.to_string());
    cfg["properties"] = std::move(props);
    cfg["samples"] = config.samples;
    cfg["seed"] = config.base_seed;
    cfg["budget"] = config.budget.max_work;
    doc["config"] = std::move(cfg);

    // the vertical-line critical values of the paper figures, p = 0.5
    if (config.model == ModelKind::Rkg) {
        ordered_json critical;
        for (const auto& spec : config.properties) {
            try {
                CriticalParams c;
                if (config.axis == 'K')
                    c = critical_key_ring(config.rkg.q, config.rkg.n, config.rkg.P, spec, 0.5);
                else if (config.axis == 'P')
                    c = critical_key_pool(config.rkg.q, config.rkg.n, config.rkg.K, spec, 0.5);
                else
                    c = critical_node_count(config.rkg.q, config.rkg.K, config.rkg.P, spec, 0.5);
                critical[spec.to_string()] = c.value;
            } catch (const std::exception&) {
                critical[spec.to_string()] = nullptr;
            }
        }
        doc["critical_at_half"] = std::move(critical);
    }

    auto rows = ordered_json::array();
    for (const auto& pt : points) rows.push_back(sweep_point_to_json(pt));
    doc["points"] = std::move(rows);
    return doc;
}

int run_sweep(const SweepConfig& config, const std::string& out_csv, const std::string& out_json) {
    const std::vector<SweepPoint> points = sweep(config);
    write_text(sweep_csv(points), out_csv);
    if (!out_json.empty()) emit(sweep_document(config, points), out_json);
    return 0;
}

// ---- width -----------------------------------------------------------

int run_width(int q, std::int64_t n, std::int64_t P, const std::string& property, int k,
              double eps, int samples, std::uint64_t seed, std::uint64_t budget_work, int threads,
              const std::string& out, const std::string& points_out) {
    const PropertySpec spec = property_from_flags(property, k);
    const TransitionWidthEstimate est = empirical_transition_width(
        q, n, P, spec, eps, samples, seed, Budget{budget_work}, threads);

    ordered_json result = provenance("width");
    result["q"] = q;
    result["n"] = n;
    result["P"] = P;
    result["property"] = spec.to_string();
    result["eps"] = eps;
    result["samples"] = samples;
    result["seed"] = seed;
    result["K_minus"] = est.k_minus;
    result["K_plus"] = est.k_plus;
    result["width"] = est.width;
    result["K_minus_confirmed"] = est.k_minus_confirmed;
    result["K_plus_confirmed"] = est.k_plus_confirmed;
    result["K_minus_confirm_prob"] = est.k_minus_confirm_prob;
    result["K_plus_confirm_prob"] = est.k_plus_confirm_prob;
    result["predicted_width"] = predicted_width(q, n, P, spec, eps);
    emit(result, out);
    if (!points_out.empty()) write_text(sweep_csv(est.points), points_out);
    return 0;
}

// ---- couple ----------------------------------------------------------

int run_couple(int q, std::int64_t K, std::int64_t P, std::int64_t n, const std::string& property,
               int k, int samples, std::uint64_t seed, std::uint64_t budget_work, int threads,
               const std::string& out) {
    const PropertySpec spec = property_from_flags(property, k);
    const CouplingResult res =
        coupling_experiment(q, K, P, n, spec, samples, seed, Budget{budget_work}, threads);

    ordered_json result = provenance("couple");
    result["q"] = q;
    result["K"] = K;
    result["P"] = P;
    result["n"] = n;
    result["property"] = spec.to_string();
    result["samples"] = samples;
    result["seed"] = seed;
    result["er_edge_probability"] = res.er_edge_probability;
    result["rkg"] = sweep_point_to_json(res.rkg);
    result["er"] = sweep_point_to_json(res.er);
    result["difference"] = res.difference;
    emit(result, out);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"q-composite random key graph toolkit"};
    app.require_subcommand(1);

    // sample
    SampleArgs sample_args;
    auto* cmd_sample = app.add_subcommand("sample", "sample one graph and emit canonical JSON");
    cmd_sample->add_option("--model", sample_args.model, "rkg | er | binq")->required();
    cmd_sample->add_option("--n", sample_args.n, "node count")->required();
    cmd_sample->add_option("--q", sample_args.q, "intersection threshold");
    cmd_sample->add_option("--K", sample_args.K, "key ring size");
    cmd_sample->add_option("--P", sample_args.P, "key pool size");
    cmd_sample->add_option("--s", sample_args.s, "er edge probability");
    cmd_sample->add_option("--x", sample_args.x, "binq key inclusion probability");
    cmd_sample->add_option("--seed", sample_args.seed, "base seed");
    cmd_sample->add_option("--out", sample_args.out, "output path (default stdout)");

    // check
    std::string check_in, check_property, check_out;
    int check_k = 0;
    std::uint64_t check_budget = Budget{}.max_work;
    bool check_oracle = false;
    auto* cmd_check = app.add_subcommand("check", "decide a property of a stored graph");
    cmd_check->add_option("--in", check_in, "graph JSON path")->required();
    cmd_check->add_option("--property", check_property, "minked:k|kconn:k|krobust:k|ham|pm")
        ->required();
    cmd_check->add_option("--k", check_k, "property order (alternative to :k suffix)");
    cmd_check->add_option("--budget", check_budget, "work budget for three-valued checkers");
    cmd_check->add_flag("--oracle", check_oracle, "use the exhaustive small-n oracle");
    cmd_check->add_option("--out", check_out, "output path (default stdout)");

    // predict
    std::string predict_property, predict_out;
    int predict_k = 0, predict_q = 1;
    std::int64_t predict_n = 0, predict_K = 0, predict_P = 0;
    auto* cmd_predict = app.add_subcommand("predict", "deviation and limit probability");
    cmd_predict->add_option("--property", predict_property)->required();
    cmd_predict->add_option("--k", predict_k);
    cmd_predict->add_option("--n", predict_n)->required();
    cmd_predict->add_option("--q", predict_q)->required();
    cmd_predict->add_option("--K", predict_K)->required();
    cmd_predict->add_option("--P", predict_P)->required();
    cmd_predict->add_option("--out", predict_out);

    // threshold
    std::string th_solve, th_property, th_out;
    int th_k = 0, th_q = 1;
    std::int64_t th_n = 0, th_K = 0, th_P = 0;
    double th_p = 0.5;
    auto* cmd_threshold = app.add_subcommand("threshold", "critical design parameter");
    cmd_threshold->add_option("--solve", th_solve, "K | P | n")->required();
    cmd_threshold->add_option("--property", th_property)->required();
    cmd_threshold->add_option("--k", th_k);
    cmd_threshold->add_option("--q", th_q)->required();
    cmd_threshold->add_option("--n", th_n);
    cmd_threshold->add_option("--K", th_K);
    cmd_threshold->add_option("--P", th_P);
    cmd_threshold->add_option("--p", th_p, "target probability")->required();
    cmd_threshold->add_option("--out", th_out);

    // sweep
    std::string sweep_config_path, sweep_out, sweep_json;
    std::string sweep_model, sweep_axis, sweep_properties;
    std::int64_t sw_n = -1, sw_K = -1, sw_P = -1, sw_from = -1, sw_to = -1, sw_step = -1;
    int sw_q = -1, sw_samples = -1, sw_threads = -1;
    double sw_s = -1.0, sw_x = -1.0;
    std::int64_t sw_seed = -1, sw_budget = -1;
    auto* cmd_sweep = app.add_subcommand("sweep", "Monte-Carlo parameter sweep");
    cmd_sweep->add_option("--config", sweep_config_path, "flat key=value preset file");
    cmd_sweep->add_option("--model", sweep_model);
    cmd_sweep->add_option("--axis", sweep_axis, "K | P | n");
    cmd_sweep->add_option("--from", sw_from);
    cmd_sweep->add_option("--to", sw_to);
    cmd_sweep->add_option("--step", sw_step);
    cmd_sweep->add_option("--q", sw_q);
    cmd_sweep->add_option("--n", sw_n);
    cmd_sweep->add_option("--K", sw_K);
    cmd_sweep->add_option("--P", sw_P);
    cmd_sweep->add_option("--s", sw_s);
    cmd_sweep->add_option("--x", sw_x);
    cmd_sweep->add_option("--properties", sweep_properties, "comma list, e.g. kconn:2,ham,pm");
    cmd_sweep->add_option("--samples", sw_samples);
    cmd_sweep->add_option("--seed", sw_seed);
    cmd_sweep->add_option("--budget", sw_budget);
    cmd_sweep->add_option("--threads", sw_threads, "worker threads (never changes results)");
    cmd_sweep->add_option("--out", sweep_out, "CSV output path (default stdout)");
    cmd_sweep->add_option("--json", sweep_json, "JSON mirror with config echo");

    // width
    int w_q = 1, w_k = 0, w_samples = 500, w_threads = 0;
    std::int64_t w_n = 0, w_P = 0;
    double w_eps = 0.1;
    std::uint64_t w_seed = 0, w_budget = Budget{}.max_work;
    std::string w_property, w_out, w_points_out;
    auto* cmd_width = app.add_subcommand("width", "empirical transition width");
    cmd_width->add_option("--q", w_q)->required();
    cmd_width->add_option("--n", w_n)->required();
    cmd_width->add_option("--P", w_P)->required();
    cmd_width->add_option("--property", w_property)->required();
    cmd_width->add_option("--k", w_k);
    cmd_width->add_option("--eps", w_eps)->required();
    cmd_width->add_option("--samples", w_samples);
    cmd_width->add_option("--seed", w_seed);
    cmd_width->add_option("--budget", w_budget);
    cmd_width->add_option("--threads", w_threads);
    cmd_width->add_option("--out", w_out);
    cmd_width->add_option("--points-out", w_points_out, "per-K CSV");

    // couple
    int c_q = 1, c_k = 0, c_samples = 500, c_threads = 0;
    std::int64_t c_K = 0, c_P = 0, c_n = 0;
    std::uint64_t c_seed = 0, c_budget = Budget{}.max_work;
    std::string c_property, c_out;
    auto* cmd_couple = app.add_subcommand("couple", "RKG vs coupled Erdos-Renyi comparison");
    cmd_couple->add_option("--q", c_q)->required();
    cmd_couple->add_option("--K", c_K)->required();
    cmd_couple->add_option("--P", c_P)->required();
    cmd_couple->add_option("--n", c_n)->required();
    cmd_couple->add_option("--property", c_property)->required();
    cmd_couple->add_option("--k", c_k);
    cmd_couple->add_option("--samples", c_samples);
    cmd_couple->add_option("--seed", c_seed);
    cmd_couple->add_option("--budget", c_budget);
    cmd_couple->add_option("--threads", c_threads);
    cmd_couple->add_option("--out", c_out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;  // usage errors exit 1
    }

    try {
        if (cmd_sample->parsed()) return run_sample(sample_args);
        if (cmd_check->parsed())
            return run_check(check_in, check_property, check_k, check_budget, check_oracle,
                             check_out);
        if (cmd_predict->parsed())
            return run_predict(predict_property, predict_k, predict_n, predict_q, predict_K,
                               predict_P, predict_out);
        if (cmd_threshold->parsed())
            return run_threshold(th_solve, th_property, th_k, th_q, th_n, th_K, th_P, th_p,
                                 th_out);
        if (cmd_sweep->parsed()) {
            std::map<std::string, std::string> kv;
            if (!sweep_config_path.empty()) kv = load_config_file(sweep_config_path);
            // flags override, and the fixed value of the moving axis must
            // not also be pinned by a flag
            const char axis_flag = !sweep_axis.empty() ? sweep_axis[0]
                                   : kv.count("axis")  ? kv.at("axis")[0]
                                                       : 'K';
            if (axis_flag == 'K' && sw_K >= 0)
                throw CLI::ValidationError("conflicting flags: --axis K together with --K");
            if (axis_flag == 'P' && sw_P >= 0)
                throw CLI::ValidationError("conflicting flags: --axis P together with --P");
            if (axis_flag == 'n' && sw_n >= 0)
                throw CLI::ValidationError("conflicting flags: --axis n together with --n");
            if (!sweep_model.empty()) kv["model"] = sweep_model;
            if (!sweep_axis.empty()) kv["axis"] = sweep_axis;
            if (!sweep_properties.empty()) kv["properties"] = sweep_properties;
            const auto set_int = [&kv](const char* key, std::int64_t v) {
                if (v >= 0) kv[key] = std::to_string(v);
            };
            set_int("from", sw_from);
            set_int("to", sw_to);
            set_int("step", sw_step);
            set_int("q", sw_q);
            set_int("n", sw_n);
            set_int("K", sw_K);
            set_int("P", sw_P);
            set_int("samples", sw_samples);
            set_int("seed", sw_seed);
            set_int("budget", sw_budget);
            set_int("threads", sw_threads);
            if (sw_s >= 0) kv["s"] = std::to_string(sw_s);
            if (sw_x >= 0) kv["x"] = std::to_string(sw_x);
            const SweepConfig config = sweep_config_from_map(kv);
            return run_sweep(config, sweep_out, sweep_json);
        }
        if (cmd_width->parsed())
            return run_width(w_q, w_n, w_P, w_property, w_k, w_eps, w_samples, w_seed, w_budget,
                             w_threads, w_out, w_points_out);
        if (cmd_couple->parsed())
            return run_couple(c_q, c_K, c_P, c_n, c_property, c_k, c_samples, c_seed, c_budget,
                              c_threads, c_out);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 1;
}
