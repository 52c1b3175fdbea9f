#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "qrkg/graph.hpp"
#include "qrkg/montecarlo.hpp"
#include "qrkg/properties.hpp"

namespace qrkg {

using ordered_json = nlohmann::ordered_json;

/// Canonical graph document:
/// {"n":…, "model":"rkg|er|binq", "params":{…}, "seed":…, "edges":[[i,j],…]}
/// with i < j and lexicographic edge order; byte-stable for a given seed.
ordered_json graph_to_json(const UndirectedGraph& g, ModelKind model, const AnyParams& params,
                           std::uint64_t seed);

/// Reads back a graph document (only n/edges are required).
UndirectedGraph graph_from_json(const ordered_json& doc);

ordered_json params_to_json(const AnyParams& params);

/// {"verdict":"yes|no|unknown","certificate":{…},"work":…}
ordered_json outcome_to_json(const PropertySpec& spec, const CheckOutcome& outcome);

ordered_json sweep_point_to_json(const SweepPoint& point);

}  // namespace qrkg
