#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "qrkg/config.hpp"

namespace qrkg {

namespace {

const std::set<std::string> kKnownKeys = {
    "model", "q", "n",       "K",       "P",    "s",      "x",
    "axis",  "from", "to",   "step",    "properties", "samples", "seed",
    "budget", "threads",
};

std::string strip(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

std::int64_t to_int(const std::string& key, const std::string& value) {
    try {
        std::size_t used = 0;
        const std::int64_t v = std::stoll(value, &used);
        if (used != value.size()) throw std::invalid_argument("");
        return v;
    } catch (...) {
        throw std::invalid_argument("config: bad integer for '" + key + "': " + value);
    }
}

double to_real(const std::string& key, const std::string& value) {
    try {
        std::size_t used = 0;
        const double v = std::stod(value, &used);
        if (used != value.size()) throw std::invalid_argument("");
        return v;
    } catch (...) {
        throw std::invalid_argument("config: bad number for '" + key + "': " + value);
    }
}

}  // namespace

std::map<std::string, std::string> parse_flat_config(const std::string& text) {
    std::map<std::string, std::string> kv;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        line = strip(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config line " + std::to_string(lineno) +
                                        ": expected key = value");
        const std::string key = strip(line.substr(0, eq));
        const std::string value = strip(line.substr(eq + 1));
        if (!kKnownKeys.count(key))
            throw std::invalid_argument("config line " + std::to_string(lineno) +
                                        ": unknown key '" + key + "'");
        if (kv.count(key))
            throw std::invalid_argument("config line " + std::to_string(lineno) +
                                        ": duplicate key '" + key + "'");
        kv[key] = value;
    }
    return kv;
}

std::map<std::string, std::string> load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("config: cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_flat_config(buffer.str());
}

SweepConfig sweep_config_from_map(const std::map<std::string, std::string>& kv) {
    SweepConfig config;
    const auto get = [&](const char* key) -> const std::string* {
        const auto it = kv.find(key);
        return it == kv.end() ? nullptr : &it->second;
    };

    if (const auto* v = get("model")) {
        if (*v == "rkg") config.model = ModelKind::Rkg;
        else if (*v == "er") config.model = ModelKind::Er;
        else if (*v == "binq") config.model = ModelKind::Binq;
        else throw std::invalid_argument("config: unknown model '" + *v + "'");
    }
    if (const auto* v = get("axis")) {
        if (v->size() != 1 || (v->front() != 'K' && v->front() != 'P' && v->front() != 'n'))
            throw std::invalid_argument("config: axis must be K, P or n");
        config.axis = v->front();
    }
    if (const auto* v = get("q")) {
        config.rkg.q = static_cast<int>(to_int("q", *v));
        config.binq.q = config.rkg.q;
    }
    if (const auto* v = get("n")) {
        config.rkg.n = to_int("n", *v);
        config.er.n = config.rkg.n;
        config.binq.n = config.rkg.n;
    }
    if (const auto* v = get("K")) config.rkg.K = to_int("K", *v);
    if (const auto* v = get("P")) {
        config.rkg.P = to_int("P", *v);
        config.binq.P = config.rkg.P;
    }
    if (const auto* v = get("s")) config.er.s = to_real("s", *v);
    if (const auto* v = get("x")) config.binq.x = to_real("x", *v);
    if (const auto* v = get("from")) config.axis_from = to_int("from", *v);
    if (const auto* v = get("to")) config.axis_to = to_int("to", *v);
    if (const auto* v = get("step")) config.axis_step = to_int("step", *v);
    if (const auto* v = get("samples")) config.samples = static_cast<int>(to_int("samples", *v));
    if (const auto* v = get("seed"))
        config.base_seed = static_cast<std::uint64_t>(to_int("seed", *v));
    if (const auto* v = get("budget"))
        config.budget.max_work = static_cast<std::uint64_t>(to_int("budget", *v));
    if (const auto* v = get("threads")) config.threads = static_cast<int>(to_int("threads", *v));
    if (const auto* v = get("properties")) {
        config.properties.clear();
        std::istringstream list(*v);
        std::string item;
        while (std::getline(list, item, ',')) {
            item = strip(item);
            if (!item.empty()) config.properties.push_back(PropertySpec::parse(item));
        }
    }
    return config;
}

}  // namespace qrkg
