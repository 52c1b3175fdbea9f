#pragma once

#include "qrkg/properties.hpp"

namespace qrkg {

/// Exhaustive reference decision, deliberately naive and independent of the
/// production checkers: k-connectivity by deleting every subset of fewer
/// than k nodes, Hamilton cycles by anchored permutation search, matchings
/// by full enumeration, robustness by scanning all disjoint nonempty subset
/// pairs. Bounds: n <= 12 (n <= 16 for KRobustness). Inputs above the bound
/// are rejected.
CheckOutcome oracle_check(const UndirectedGraph& g, const PropertySpec& spec);

}  // namespace qrkg
