#pragma once

// JSON schemas for boundary data, series, solutions and reports.
//
// Boundary data:
//   {"r1": 0.5, "r2": 2.0, "kind": "dirichlet"|"neumann",
//    "inner": {"a0": 0, "a": [...], "b": [...]} | {"samples": [...]},
//    "outer": {...}}
//
// Series:
//   {"r1": ..., "r2": ..., "A": ..., "B": ...,
//    "modes": [{"k": 1, "C": ..., "D": ..., "E": ..., "G": ...}, ...]}
//
// Neumann solution: series fields plus "C" and
//   "normalization": {"r": ..., "theta": ...}.

#include <nlohmann/json_fwd.hpp>

#include "hd/conformal.hpp"
#include "hd/duality.hpp"
#include "hd/fourier.hpp"
#include "hd/series.hpp"
#include "hd/verify.hpp"

namespace hd {

using Json = nlohmann::json;

Json to_json(const PeriodicFunction& f);
PeriodicFunction periodic_function_from_json(const Json& j);

Json to_json(const AnnulusBoundaryData& d);
AnnulusBoundaryData boundary_data_from_json(const Json& j);

Json to_json(const AnnulusHarmonicSeries& u);
AnnulusHarmonicSeries series_from_json(const Json& j);

Json to_json(const NeumannSolution& u);
NeumannSolution neumann_solution_from_json(const Json& j);

Json to_json(const CompatibilityReport& r);
Json to_json(const ResidualReport& r);
Json to_json(const HolderEstimate& e);
Json to_json(const MapValidationReport& r);

}  // namespace hd
