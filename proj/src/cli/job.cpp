#include "lemni/cli/job.hpp"

#include <fstream>

namespace lemni::cli {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::ConfigError, what); }

double number(const json& j, const char* what) {
  if (!j.is_number()) bad(std::string(what) + " must be a number");
  return j.get<double>();
}

double positive(const json& obj, const char* key, double fallback) {
  if (!obj.contains(key)) return fallback;
  const double v = number(obj.at(key), key);
  if (!(v > 0.0)) bad(std::string(key) + " must be positive");
  return v;
}

int count_field(const json& obj, const char* key, int fallback) {
  if (!obj.contains(key)) return fallback;
  const json& v = obj.at(key);
  if (!v.is_number_integer()) bad(std::string(key) + " must be an integer");
  return v.get<int>();
}

}  // namespace

cplx complex_from_json(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2) bad("complex numbers are written [re, im]");
  return {number(j[0], "real part"), number(j[1], "imaginary part")};
}

ComplexValue point_from_json(const json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() == "inf") return ComplexValue::infinity();
    bad("the only named point is \"inf\"");
  }
  return complex_from_json(j);
}

json to_json(cplx z) { return json::array({z.real(), z.imag()}); }

json to_json(const ComplexValue& z) { return z.is_infinite() ? json("inf") : to_json(z.value()); }

JordanCurve curve_from_json(const json& j) {
  if (!j.is_object() || j.size() != 1) bad("a curve is one of {circle}, {polygon}, {samples}");
  if (j.contains("circle")) {
    const json& c = j.at("circle");
    if (!c.contains("center") || !c.contains("radius")) bad("circle needs center and radius");
    const int n = count_field(c, "samples", 2048);
    if (n < 16) bad("circle needs at least 16 samples");
    return JordanCurve::circle(complex_from_json(c.at("center")), number(c.at("radius"), "radius"), n);
  }
  if (j.contains("polygon")) {
    const json& p = j.at("polygon");
    if (!p.contains("vertices") || !p.at("vertices").is_array()) bad("polygon needs a vertex list");
    std::vector<cplx> v;
    for (const auto& x : p.at("vertices")) v.push_back(complex_from_json(x));
    if (!p.contains("fillet_radius")) bad("polygon needs fillet_radius");
    return rounded_polygon(v, number(p.at("fillet_radius"), "fillet_radius"), positive(p, "density", 200.0));
  }
  if (j.contains("samples")) {
    if (!j.at("samples").is_array()) bad("samples must be a list of points");
    std::vector<cplx> v;
    for (const auto& x : j.at("samples")) v.push_back(complex_from_json(x));
    JordanCurve c = JordanCurve::from_points(std::move(v));
    if (!c.is_simple()) throw Error(ErrorKind::GeometryError, "sampled curve is not simple");
    return c;
  }
  bad("unknown curve kind");
}

JobSpec parse_job(const json& j_in, std::optional<std::uint64_t> seed_override) {
  if (!j_in.is_object()) bad("a job is a JSON object");
  json j = j_in;
  JobSpec job;
  if (j.contains("seed")) {
    if (!j.at("seed").is_number_unsigned()) bad("seed must be a non-negative integer");
    job.seed = j.at("seed").get<std::uint64_t>();
  }
  if (seed_override) {
    job.seed = *seed_override;
    j["seed"] = job.seed;
  }
  job.echo = j;

  if (j.contains("command")) {
    if (!j.at("command").is_string()) bad("command must be a string");
    job.command = j.at("command").get<std::string>();
  }
  if (!j.contains("function") || !j.at("function").is_string()) bad("job needs a function string");
  job.function = j.at("function").get<std::string>();
  if (j.contains("curve_S")) job.curve_s = curve_from_json(j.at("curve_S"));
  if (j.contains("curve_Gamma")) job.curve_gamma = curve_from_json(j.at("curve_Gamma"));
  if (j.contains("box")) {
    const json& b = j.at("box");
    if (!b.is_array() || b.size() != 2) bad("box is [[re, im], [re, im]]");
    job.box = Rect{complex_from_json(b[0]), complex_from_json(b[1])};
    job.box->validate();
  }
  if (j.contains("points")) {
    if (!j.at("points").is_array()) bad("points must be a list");
    for (const auto& p : j.at("points")) job.points.push_back(point_from_json(p));
  }
  if (j.contains("variants")) {
    if (!j.at("variants").is_array()) bad("variants must be a list");
    for (const auto& v : j.at("variants")) {
      if (!v.is_object() || !v.contains("label") || !v.at("label").is_string() || !v.contains("curve_S"))
        bad("each variant needs a label and a curve_S");
      job.variants.push_back({v.at("label").get<std::string>(), curve_from_json(v.at("curve_S")), v.at("curve_S")});
    }
  }
  if (j.contains("tolerances")) {
    const json& t = j.at("tolerances");
    if (!t.is_object()) bad("tolerances must be an object");
    for (const auto& [key, value] : t.items()) {
      const double v = number(value, key.c_str());
      if (!(v > 0.0)) bad(key + " must be positive");
      if (key == "boundary_band") job.tolerances.boundary_band = v;
      else if (key == "image_band") job.tolerances.image_band = v;
      else if (key == "trace_tol") job.tolerances.trace_tol = v;
      else if (key == "newton_tol") job.tolerances.newton_tol = v;
      else if (key == "min_cell") job.tolerances.min_cell = v;
      else if (key == "item1_tol") job.tolerances.item1_tol = v;
      else bad("unknown tolerance " + key);
    }
  }
  if (j.contains("sample_plan")) {
    const json& p = j.at("sample_plan");
    if (!p.is_object()) bad("sample_plan must be an object");
    job.plan.k_inner = count_field(p, "k_inner", job.plan.k_inner);
    job.plan.k_outer = count_field(p, "k_outer", job.plan.k_outer);
    job.plan.k_boundary = count_field(p, "k_boundary", job.plan.k_boundary);
    job.plan.slide_step = positive(p, "slide_step", job.plan.slide_step);
  }
  job.plan.seed = job.seed;
  job.plan.validate();
  if (j.contains("outputs")) {
    const json& o = j.at("outputs");
    if (!o.is_object()) bad("outputs must be an object");
    for (const auto& [key, value] : o.items()) {
      if (!value.is_string()) bad("output paths must be strings");
      if (key == "json") job.outputs.json = value.get<std::string>();
      else if (key == "svg") job.outputs.svg = value.get<std::string>();
      else if (key == "csv") job.outputs.csv = value.get<std::string>();
      else bad("unknown output " + key);
    }
  }
  return job;
}

JobSpec load_job(const std::string& path, std::optional<std::uint64_t> seed_override) {
  std::ifstream in(path);
  if (!in) bad("cannot open job file " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    bad(std::string("job file is not valid JSON: ") + e.what());
  }
  return parse_job(j, seed_override);
}

LocatorConfig locator_config(const JobSpec& job) {
  LocatorConfig c;
  if (job.tolerances.newton_tol) c.newton_tol = *job.tolerances.newton_tol;
  if (job.tolerances.min_cell) c.min_cell = *job.tolerances.min_cell;
  c.seed = job.seed;
  return c;
}

CountConfig count_config(const JobSpec& job) {
  CountConfig c;
  if (job.tolerances.image_band) c.image_band = *job.tolerances.image_band;
  if (job.tolerances.boundary_band) c.boundary_band = *job.tolerances.boundary_band;
  c.locator = locator_config(job);
  return c;
}

ClassifyConfig classify_config(const JobSpec& job) {
  ClassifyConfig c;
  c.count = count_config(job);
  if (job.tolerances.item1_tol) c.item1_tol = *job.tolerances.item1_tol;
  return c;
}

TraceConfig trace_config(const JobSpec& job) {
  TraceConfig c;
  if (job.tolerances.trace_tol) c.trace_tol = *job.tolerances.trace_tol;
  c.locator = locator_config(job);
  return c;
}

}  // namespace lemni::cli
