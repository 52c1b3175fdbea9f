#pragma once

#include <map>
#include <string>

#include "qrkg/montecarlo.hpp"

namespace qrkg {

inline constexpr const char* kToolName = "qrkg";
inline constexpr const char* kToolVersion = "0.1.0";

/// Flat sweep-config text: one `key = value` per line, # comments, blank
/// lines allowed. Unknown keys and duplicate keys are errors (no silent
/// typos). Recognized keys: model, q, n, K, P, s, x, axis, from, to, step,
/// properties, samples, seed, budget, threads.
std::map<std::string, std::string> parse_flat_config(const std::string& text);

std::map<std::string, std::string> load_config_file(const std::string& path);

/// Builds a SweepConfig from defaults overridden by the key/value map.
SweepConfig sweep_config_from_map(const std::map<std::string, std::string>& kv);

}  // namespace qrkg
