#pragma once

#include <json.hpp>

#include "twobridge/oracle.hpp"
#include "twobridge/riley.hpp"
#include "twobridge/torsion.hpp"

namespace twobridge {

using Json = nlohmann::ordered_json;

Json complex_json(std::complex<double> z);

/// Sorted list of records [e1, e2, e3, coefficient-as-decimal-string].
Json multipoly_json(const MultiPoly& p);
MultiPoly multipoly_from_json(const nlohmann::json& j);

Json riley_json(const RileyData& data);
Json report_json(const TorsionReport& report);
Json statistics_json(const RileyData& data, const SumStatistics& stats, const RunConfig& cfg);
Json oracle_json(const RileyData& data, const OracleComparison& comparison, const RunConfig& cfg);
Json cochain_json(const CochainData& cochain);

/// Pass verdict used by the verify command: vanishing residual for
/// hyperbolic forms, -2q agreement for torus forms.
bool verify_passes(const RileyData& data, const SumStatistics& stats, const Tolerances& tol);

}  // namespace twobridge
