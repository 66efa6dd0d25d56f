#include "lemni/cli/report.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace lemni::cli {

namespace {

const char* kCommands[] = {"classify", "nonjordan", "trace", "locate", "count", "blaschke-model"};

json points_json(const std::vector<cplx>& zs) {
  json a = json::array();
  for (cplx z : zs) a.push_back(to_json(z));
  return a;
}

json records_json(const std::vector<ZeroPoleRecord>& rs) {
  json a = json::array();
  for (const auto& r : rs) a.push_back(to_json(r));
  return a;
}

json error_verdict(const Error& e) {
  json v;
  v["kind"] = "Error";
  v["error"] = std::string(to_string(e.kind()));
  v["message"] = e.what();
  if (e.position() >= 0) v["position"] = e.position();
  return v;
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string fmt(cplx z) { return fmt(z.real()) + (z.imag() < 0 ? " - " : " + ") + fmt(std::abs(z.imag())) + "i"; }

std::string fmt(const ComplexValue& z) { return z.is_infinite() ? "inf" : fmt(z.value()); }

std::vector<cplx> curve_points(const JordanCurve& c) {
  std::vector<cplx> out;
  out.reserve(c.size());
  for (const auto& s : c.samples()) out.push_back(s.p);
  return out;
}

std::vector<cplx> rect_points(const Rect& r) {
  return {r.lo, {r.hi.real(), r.lo.imag()}, r.hi, {r.lo.real(), r.hi.imag()}};
}

std::vector<cplx> image_points(const CurveImage& img) {
  std::vector<cplx> out;
  out.reserve(img.nodes().size());
  for (const auto& n : img.nodes()) out.push_back(n.fz);
  return out;
}

const char* face_color(Face f) {
  switch (f) {
    case Face::Inner: return "#9467bd";
    case Face::Outer: return "#8c564b";
    case Face::Boundary: return "#e377c2";
  }
  return "#000000";
}

void need(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorKind::ConfigError, what);
}

// --- commands ---------------------------------------------------------------

void run_classify(const JobSpec& job, const FunctionDef& f, RunResult& out) {
  need(job.curve_s && job.curve_gamma, "classify needs curve_S and curve_Gamma");
  const ClassifyConfig cfg = classify_config(job);
  const ClassificationReport rep = classify(f, *job.curve_s, *job.curve_gamma, job.plan, cfg);

  json v;
  v["kind"] = std::string(to_string(rep.verdict));
  switch (rep.verdict) {
    case Verdict::PseudoLemniscate:
      v["n_minus"] = rep.n_minus;
      v["n_plus"] = rep.n_plus;
      break;
    case Verdict::NotPseudoLemniscate:
      v["witness_pair"] = json::array({rep.witness_pair->first, rep.witness_pair->second});
      break;
    case Verdict::Indeterminate:
      break;
  }
  v["reason"] = rep.reason;
  out.report["verdict"] = v;
  json samples = json::array();
  for (const auto& s : rep.samples) samples.push_back(to_json(s));
  out.report["samples"] = samples;
  json d;
  d["item2_holds"] = rep.item2_holds;
  d["item1_check"] = {{"max_dist_f_S_to_Gamma", rep.item1.max_dist_f_S_to_Gamma},
                      {"critical_points_on_S", records_json(rep.item1.critical_points_on_S)},
                      {"holds", rep.item1.holds},
                      {"error", rep.item1.error}};
  d["evidence"] = "sampling-based; not a certificate";
  out.report["diagnostics"] = d;
  out.exit_code = rep.verdict == Verdict::Indeterminate ? kExitUnresolved : kExitOk;

  Scene sc;
  sc.title = "classify " + job.function;
  sc.curves.push_back({"S", "#1f77b4", curve_points(*job.curve_s), true});
  sc.curves.push_back({"Gamma", "#2ca02c", curve_points(*job.curve_gamma), true});
  CurveImage img(f, *job.curve_s, cfg.parallel);
  sc.curves.push_back({"f(S)", "#ff7f0e", image_points(img), false});
  for (const auto& s : rep.samples)
    if (s.report.w.is_finite())
      sc.markers.push_back({std::string(to_string(s.face)) + " sample", face_color(s.face), s.report.w.value()});
  out.scene = sc;

  std::ostringstream t;
  t << "verdict  " << to_string(rep.verdict);
  if (rep.verdict == Verdict::PseudoLemniscate) t << "  n_minus=" << rep.n_minus << " n_plus=" << rep.n_plus;
  t << "\nreason   " << rep.reason << "\nitem 1   max dist " << fmt(rep.item1.max_dist_f_S_to_Gamma) << ", "
    << rep.item1.critical_points_on_S.size() << " critical point(s) on S\n";
  out.table = t.str();
}

void run_nonjordan(const JobSpec& job, const FunctionDef& f, RunResult& out) {
  std::vector<Variant> variants = job.variants;
  if (variants.empty()) {
    need(job.curve_s.has_value(), "nonjordan needs curve_S or variants");
    variants.push_back({"S", *job.curve_s, job.echo.at("curve_S")});
  }
  const ClassifyConfig cfg = classify_config(job);
  json vs = json::array(), samples = json::array();
  std::ostringstream t;
  Scene sc;
  sc.title = "nonjordan " + job.function;
  const char* colors[] = {"#1f77b4", "#2ca02c", "#9467bd", "#8c564b"};
  int code = kExitOk;
  for (std::size_t i = 0; i < variants.size(); ++i) {
    const Variant& var = variants[i];
    const auto cands = job.points.empty() ? default_candidates(f, var.curve, job.seed) : job.points;
    json e;
    e["label"] = var.label;
    try {
      const NonJordanVerdict v = non_jordan_test(f, var.curve, cands, cfg);
      json j = to_json(v);
      for (auto it = j.begin(); it != j.end(); ++it)
        if (it.key() != "samples") e[it.key()] = it.value();
      for (const auto& s : v.samples) {
        json r = to_json(s);
        r["variant"] = var.label;
        samples.push_back(r);
      }
      if (v.kind == NonJordanKind::DisjunctionUnresolved) code = std::max(code, int(kExitUnresolved));
      t << var.label << ": " << to_string(v.kind) << "  distinct counts {";
      std::vector<int> distinct = v.counts_seen;
      distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
      for (std::size_t k = 0; k < distinct.size(); ++k) t << (k ? ", " : "") << distinct[k];
      t << "}\n";
      const char* col = colors[i % 4];
      sc.curves.push_back({var.label + " S", col, curve_points(var.curve), true});
      CurveImage img(f, var.curve, cfg.parallel);
      sc.curves.push_back({var.label + " f(S)", "#ff7f0e", image_points(img), false});
      for (const auto& w : v.witnesses)
        if (w.w.is_finite()) sc.markers.push_back({"witness", "#d62728", w.w.value(), 4.0});
      for (const auto& c : v.critical_points) sc.markers.push_back({"critical point", "#17becf", c.location, 4.0});
    } catch (const Error& err) {
      e["kind"] = "Error";
      e["error"] = std::string(to_string(err.kind()));
      e["message"] = err.what();
      code = std::max(code, exit_code_for(err.kind()));
      t << var.label << ": " << err.what() << "\n";
    }
    vs.push_back(e);
  }
  out.report["verdict"] = {{"kind", "Variants"}, {"variants", vs}};
  out.report["samples"] = samples;
  out.report["diagnostics"] = json::object();
  out.exit_code = code;
  out.scene = sc;
  out.table = t.str();
}

void run_trace(const JobSpec& job, const FunctionDef& f, RunResult& out) {
  need(job.curve_gamma && job.box, "trace needs curve_Gamma and box");
  const TraceConfig cfg = trace_config(job);
  const auto& gamma = *job.curve_gamma;
  const auto seeds = seed_points(f, gamma, *job.box, cfg);
  const auto comps = trace_components(f, gamma, *job.box, cfg);

  json samples = json::array();
  std::ostringstream csv, t;
  csv << "component,theta,re,im\n";
  Scene sc;
  sc.title = "trace " + job.function;
  sc.curves.push_back({"box", "#7f7f7f", rect_points(*job.box), true});
  const char* colors[] = {"#1f77b4", "#2ca02c", "#9467bd", "#8c564b", "#bcbd22"};
  for (std::size_t i = 0; i < comps.size(); ++i) {
    const auto& c = comps[i];
    double res = 0.0;
    for (cplx z : c.points) res = std::max(res, gamma.distance(f.raw(z)));
    json bp = json::array();
    for (const auto& b : c.branch_points)
      bp.push_back({{"location", to_json(b.location)}, {"order", b.order}, {"incident_edges", b.incident_edges}});
    const auto [tlo, thi] = std::minmax_element(c.parameter_track.begin(), c.parameter_track.end());
    samples.push_back({{"component", i},
                       {"closed", c.closed},
                       {"points", c.points.size()},
                       {"edges", c.edges.size()},
                       {"theta_range", json::array({*tlo, *thi})},
                       {"branch_points", bp},
                       {"max_residual", res}});
    for (std::size_t k = 0; k < c.points.size(); ++k) {
      char buf[128];
      std::snprintf(buf, sizeof buf, "%zu,%.17g,%.17g,%.17g\n", i, c.parameter_track[k], c.points[k].real(),
                    c.points[k].imag());
      csv << buf;
    }
    for (const auto& e : c.edges)
      sc.curves.push_back({"component " + std::to_string(i), colors[i % 5], e.points, e.closed_loop});
    for (const auto& b : c.branch_points) sc.markers.push_back({"branch point", "#d62728", b.location, 4.0});
    t << "component " << i << ": " << (c.closed ? "closed" : "open") << ", " << c.points.size() << " points, "
      << c.branch_points.size() << " branch point(s), residual " << fmt(res) << "\n";
  }
  for (cplx s : seeds) sc.markers.push_back({"seed", "#ff7f0e", s, 2.5});
  out.report["verdict"] = {{"kind", "Traced"}, {"components", comps.size()}};
  out.report["samples"] = samples;
  out.report["diagnostics"] = {{"seeds", points_json(seeds)}};
  out.csv = csv.str();
  out.scene = sc;
  out.table = t.str();
}

void run_locate(const JobSpec& job, const FunctionDef& f, RunResult& out) {
  need(job.box || job.curve_s, "locate needs a box or curve_S");
  const Rect box = job.box ? *job.box : job.curve_s->bounding_box();
  const LocatorConfig cfg = locator_config(job);
  const auto recs = isolate(f, box, cfg);
  std::vector<ZeroPoleRecord> crit;
  std::string crit_error;
  try {
    crit = critical_points(f, box, cfg);
  } catch (const Error& e) {
    crit_error = e.what();
  }
  int zeros = 0, poles = 0;
  std::ostringstream csv, t;
  csv << "kind,order,re,im,residual\n";
  Scene sc;
  sc.title = "locate " + job.function;
  sc.curves.push_back({"box", "#7f7f7f", rect_points(box), true});
  for (const auto& r : recs) {
    (r.kind == PointKind::Pole ? poles : zeros) += r.order;
    char buf[160];
    std::snprintf(buf, sizeof buf, "%s,%d,%.17g,%.17g,%.17g\n", std::string(to_string(r.kind)).c_str(), r.order,
                  r.location.real(), r.location.imag(), r.residual);
    csv << buf;
    sc.markers.push_back({std::string(to_string(r.kind)), r.kind == PointKind::Pole ? "#d62728" : "#1f77b4",
                          r.location, 4.0});
    t << to_string(r.kind) << "  order " << r.order << "  at " << fmt(r.location) << "\n";
  }
  for (const auto& c : crit) sc.markers.push_back({"CriticalPoint", "#17becf", c.location, 3.0});
  out.report["verdict"] = {{"kind", "Located"}, {"zeros", zeros}, {"poles", poles}};
  out.report["samples"] = records_json(recs);
  json d = {{"box", json::array({to_json(box.lo), to_json(box.hi)})}, {"critical_points", records_json(crit)}};
  if (!crit_error.empty()) d["critical_point_error"] = crit_error;
  out.report["diagnostics"] = d;
  out.csv = csv.str();
  out.scene = sc;
  out.table = t.str();
}

void run_count(const JobSpec& job, const FunctionDef& f, RunResult& out) {
  need(job.curve_s.has_value(), "count needs curve_S");
  const CountConfig cfg = count_config(job);
  PreimageCounter counter(f, *job.curve_s, cfg);
  std::vector<PreimageCountReport> reps(job.points.size());
  for (std::size_t i = 0; i < job.points.size(); ++i) reps[i] = counter.try_count(job.points[i]);
  json samples = json::array();
  std::ostringstream csv, t;
  csv << "re,im,count,method\n";
  Scene sc;
  sc.title = "count " + job.function;
  sc.curves.push_back({"S", "#1f77b4", curve_points(*job.curve_s), true});
  sc.curves.push_back({"f(S)", "#ff7f0e", image_points(counter.image()), false});
  bool failed = false;
  for (const auto& r : reps) {
    samples.push_back(to_json(r));
    failed |= !r.ok();
    char buf[160];
    if (r.w.is_infinite())
      std::snprintf(buf, sizeof buf, "inf,inf,%d,%s\n", r.ok() ? r.count : -1, std::string(to_string(r.method)).c_str());
    else
      std::snprintf(buf, sizeof buf, "%.17g,%.17g,%d,%s\n", r.w.re(), r.w.im(), r.ok() ? r.count : -1,
                    std::string(to_string(r.method)).c_str());
    csv << buf;
    if (r.w.is_finite()) sc.markers.push_back({"w", "#d62728", r.w.value(), 3.0});
    t << "N(" << fmt(r.w) << ") = " << (r.ok() ? std::to_string(r.count) : r.message) << "\n";
  }
  out.report["verdict"] = {{"kind", "Counted"}, {"poles_inside", counter.poles()}, {"failures", failed}};
  out.report["samples"] = samples;
  out.report["diagnostics"] = {{"image_band", counter.image_band()}};
  out.exit_code = failed ? kExitUnresolved : kExitOk;
  out.csv = csv.str();
  out.scene = sc;
  out.table = t.str();
}

void run_blaschke_model(const JobSpec& job, const FunctionDef& f, RunResult& out) {
  ModelConfig cfg;
  cfg.locator = locator_config(job);
  const RatioModel m = fit_ratio_model(f, cfg);
  json v = to_json(m);
  v["kind"] = "RatioModel";
  out.report["verdict"] = v;
  json samples = json::array();
  for (cplx a : m.numerator.zeros()) samples.push_back({{"kind", "zero"}, {"location", to_json(a)}});
  for (cplx b : m.denominator.zeros()) samples.push_back({{"kind", "pole"}, {"location", to_json(b)}});
  out.report["samples"] = samples;
  out.report["diagnostics"] = {{"model_band", cfg.model_band}, {"grid", cfg.grid}};

  std::ostringstream t;
  t << "kind   location\n";
  for (cplx a : m.numerator.zeros()) t << "zero   " << fmt(a) << "\n";
  for (cplx b : m.denominator.zeros()) t << "pole   " << fmt(b) << "\n";
  t << "lambda " << fmt(m.lambda) << "\nmax_model_error " << fmt(m.max_model_error) << "\n";
  out.table = t.str();

  Scene sc;
  sc.title = "blaschke-model " + job.function;
  sc.curves.push_back({"unit circle", "#7f7f7f", curve_points(JordanCurve::circle(0.0, 1.0, 256)), true});
  for (cplx a : m.numerator.zeros()) sc.markers.push_back({"zero", "#1f77b4", a, 4.0});
  for (cplx b : m.denominator.zeros()) sc.markers.push_back({"pole", "#d62728", b, 4.0});
  out.scene = sc;
}

json base_report(const std::string& command, const json& echo) {
  json r;
  r["command"] = command;
  r["job_echo"] = echo;
  r["verdict"] = json::object();
  r["samples"] = json::array();
  r["diagnostics"] = json::object();
  r["timings"] = json::object();
  return r;
}

}  // namespace

// --- JSON forms ---------------------------------------------------------------

json to_json(const PreimageCountReport& r) {
  json j;
  j["w"] = to_json(r.w);
  j["count"] = r.ok() ? json(r.count) : json(nullptr);
  j["method"] = std::string(to_string(r.method));
  j["min_image_distance"] = r.min_image_distance;
  j["refinement_depth"] = r.refinement_depth;
  j["error"] = r.error ? json(std::string(to_string(*r.error))) : json(nullptr);
  if (!r.message.empty()) j["message"] = r.message;
  return j;
}

json to_json(const ZeroPoleRecord& r) {
  return {{"kind", std::string(to_string(r.kind))},
          {"order", r.order},
          {"location", to_json(r.location)},
          {"residual", r.residual}};
}

json to_json(const SampleRecord& r) {
  json j = to_json(r.report);
  j["face"] = std::string(to_string(r.face));
  if (r.face == Face::Boundary) {
    j["gamma_t"] = r.gamma_t;
    j["slides"] = r.slides;
  }
  if (r.targeted) j["targeted"] = true;
  return j;
}

json to_json(const ClassificationReport& r) {
  json j;
  j["verdict"] = std::string(to_string(r.verdict));
  j["n_minus"] = r.n_minus;
  j["n_plus"] = r.n_plus;
  j["witness_pair"] = r.witness_pair ? json::array({r.witness_pair->first, r.witness_pair->second}) : json(nullptr);
  j["reason"] = r.reason;
  j["item2_holds"] = r.item2_holds;
  j["item1_holds"] = r.item1.holds;
  json s = json::array();
  for (const auto& x : r.samples) s.push_back(to_json(x));
  j["samples"] = s;
  return j;
}

json to_json(const NonJordanVerdict& v) {
  json j;
  j["kind"] = std::string(to_string(v.kind));
  json w = json::array();
  for (const auto& r : v.witnesses) w.push_back(to_json(r));
  j["witnesses"] = w;
  j["critical_points"] = records_json(v.critical_points);
  j["counts_seen"] = v.counts_seen;
  j["reason"] = v.reason;
  json s = json::array();
  for (const auto& r : v.samples) s.push_back(to_json(r));
  j["samples"] = s;
  return j;
}

json to_json(const RatioModel& m) {
  json j;
  j["zeros"] = points_json(m.numerator.zeros());
  j["poles"] = points_json(m.denominator.zeros());
  j["lambda"] = to_json(m.lambda);
  j["reference_point"] = to_json(m.reference_point);
  j["max_model_error"] = m.max_model_error;
  return j;
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::SyntaxError:
    case ErrorKind::UnsupportedOperation:
    case ErrorKind::DomainError:
    case ErrorKind::ConfigError:
    case ErrorKind::GeometryError:
    case ErrorKind::InvalidZero:
    case ErrorKind::InvalidConstant:
    case ErrorKind::NotBoundaryUnimodular:
      return kExitInput;
    case ErrorKind::InternalInconsistency:
      return kExitInternal;
    default:
      return kExitUnresolved;
  }
}

bool is_command(const std::string& name) {
  return std::find(std::begin(kCommands), std::end(kCommands), name) != std::end(kCommands);
}

RunResult run_job(const std::string& command, const JobSpec& job, const RunOptions& opts) {
  RunResult out;
  out.report = base_report(command, job.echo);
  const auto t0 = std::chrono::steady_clock::now();
  try {
    need(is_command(command), "unknown command " + command);
    need(job.command.empty() || job.command == command,
         "job is for '" + job.command + "', not '" + command + "'");
    const FunctionDef f = parse(job.function);
    if (opts.verbose) std::cerr << command << ": f(z) = " << f.to_string() << "\n";
    if (command == "classify") run_classify(job, f, out);
    else if (command == "nonjordan") run_nonjordan(job, f, out);
    else if (command == "trace") run_trace(job, f, out);
    else if (command == "locate") run_locate(job, f, out);
    else if (command == "count") run_count(job, f, out);
    else run_blaschke_model(job, f, out);
  } catch (const Error& e) {
    out = RunResult{};
    out.report = base_report(command, job.echo);
    out.report["verdict"] = error_verdict(e);
    out.exit_code = exit_code_for(e.kind());
    out.table = std::string(e.what()) + "\n";
  } catch (const std::exception& e) {
    out = RunResult{};
    out.report = base_report(command, job.echo);
    out.report["verdict"] = {{"kind", "Error"}, {"error", "InternalInconsistency"}, {"message", e.what()}};
    out.exit_code = kExitInternal;
    out.table = std::string(e.what()) + "\n";
  }
  if (opts.timings) {
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    out.report["timings"] = {{"total_s", s}};
  }
  if (opts.verbose) std::cerr << command << ": exit " << out.exit_code << "\n";
  return out;
}

RunResult run_file(const std::string& command, const std::string& job_path,
                   std::optional<std::uint64_t> seed_override, const RunOptions& opts) {
  JobSpec job;
  try {
    job = load_job(job_path, seed_override);
  } catch (const Error& e) {
    RunResult out;
    out.report = base_report(command, json(nullptr));
    out.report["verdict"] = error_verdict(e);
    out.exit_code = exit_code_for(e.kind());
    out.table = std::string(e.what()) + "\n";
    return out;
  }
  return run_job(command, job, opts);
}

void write_artifacts(const RunResult& result, const JobSpec* job, const std::string& command,
                     const std::string& out_dir) {
  namespace fs = std::filesystem;
  Outputs o = job ? job->outputs : Outputs{};
  if (!out_dir.empty()) {
    fs::create_directories(out_dir);
    if (o.json.empty()) o.json = command + ".json";
  }
  auto place = [&](const std::string& p) { return out_dir.empty() ? fs::path(p) : fs::path(out_dir) / p; };
  auto open = [&](const fs::path& p) {
    if (p.has_parent_path()) fs::create_directories(p.parent_path());
    std::ofstream f(p, std::ios::binary);
    if (!f) throw Error(ErrorKind::ConfigError, "cannot write " + p.string());
    return f;
  };
  const std::string text = result.report.dump(2) + "\n";
  if (o.json.empty()) {
    std::cout << text;
  } else {
    auto f = open(place(o.json));
    f << text;
  }
  if (!o.svg.empty() && result.scene) {
    auto f = open(place(o.svg));
    f << render_svg(*result.scene);
  }
  if (!o.csv.empty() && !result.csv.empty()) {
    auto f = open(place(o.csv));
    f << result.csv;
  }
}

}  // namespace lemni::cli
