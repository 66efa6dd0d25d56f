#pragma once

// Job files. One JSON object per job:
//
//   {
//     "command": "classify",                 optional, must match the subcommand
//     "function": "exp(z)",
//     "curve_S": <curve>,
//     "curve_Gamma": <curve>,                classify, trace
//     "box": [[re, im], [re, im]],           trace, locate (lo and hi corner)
//     "points": [[re, im], ..., "inf"],      count, nonjordan candidates
//     "variants": [{"label": "...", "curve_S": <curve>}, ...],   nonjordan
//     "tolerances": {"boundary_band": ..., "image_band": ..., "trace_tol": ...,
//                    "newton_tol": ..., "min_cell": ..., "item1_tol": ...},
//     "sample_plan": {"k_inner": 8, "k_outer": 8, "k_boundary": 8},
//     "seed": 0,
//     "outputs": {"json": "report.json", "svg": "plot.svg", "csv": "points.csv"}
//   }
//
// <curve> is one of
//   {"circle": {"center": [re, im], "radius": r, "samples": 2048}}
//   {"polygon": {"vertices": [[re, im], ...], "fillet_radius": r, "density": 200}}
//   {"samples": [[re, im], ...]}

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "lemni/analysis.hpp"
#include "lemni/trace.hpp"

namespace lemni::cli {

using json = nlohmann::ordered_json;

struct ToleranceConfig {
  std::optional<double> boundary_band, image_band, trace_tol, newton_tol, min_cell, item1_tol;
};

struct Outputs {
  std::string json, svg, csv;
};

struct Variant {
  std::string label;
  JordanCurve curve;
  json spec;
};

struct JobSpec {
  std::string command;
  std::string function;
  std::optional<JordanCurve> curve_s, curve_gamma;
  std::optional<Rect> box;
  std::vector<ComplexValue> points;
  std::vector<Variant> variants;
  ToleranceConfig tolerances;
  SamplePlan plan;
  std::uint64_t seed = 0;
  Outputs outputs;
  json echo;  // the job as read, seed override applied
};

/// Parses and validates a job. Throws Error(ConfigError / GeometryError).
/// `seed_override` replaces the job's seed everywhere.
JobSpec parse_job(const json& j, std::optional<std::uint64_t> seed_override = std::nullopt);
JobSpec load_job(const std::string& path, std::optional<std::uint64_t> seed_override = std::nullopt);

JordanCurve curve_from_json(const json& j);
cplx complex_from_json(const json& j);
ComplexValue point_from_json(const json& j);

json to_json(cplx z);
json to_json(const ComplexValue& z);

CountConfig count_config(const JobSpec& job);
ClassifyConfig classify_config(const JobSpec& job);
TraceConfig trace_config(const JobSpec& job);
LocatorConfig locator_config(const JobSpec& job);

}  // namespace lemni::cli
