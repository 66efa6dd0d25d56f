#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "lemni/cli/report.hpp"
#include "lemni/parallel.hpp"

using namespace lemni;
using namespace lemni::cli;

namespace {

const std::string kRepo = LEMNI_SOURCE_DIR;

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Enough of JSON Schema for the shipped schema: type, enum, required,
// properties, additionalProperties (bool), items, minimum, local $ref.
class SchemaCheck {
 public:
  explicit SchemaCheck(json root) : root_(std::move(root)) {}

  std::vector<std::string> errors(const json& doc) {
    errs_.clear();
    check(root_, doc, "$");
    return errs_;
  }

 private:
  static bool has_type(const json& v, const std::string& t) {
    if (t == "object") return v.is_object();
    if (t == "array") return v.is_array();
    if (t == "string") return v.is_string();
    if (t == "integer") return v.is_number_integer();
    if (t == "number") return v.is_number();
    if (t == "boolean") return v.is_boolean();
    if (t == "null") return v.is_null();
    return false;
  }

  void check(const json& s, const json& v, const std::string& at) {
    if (s.contains("$ref")) {
      const std::string ref = s["$ref"];
      const std::string name = ref.substr(ref.rfind('/') + 1);
      check(root_["definitions"][name], v, at);
      return;
    }
    if (s.contains("type")) {
      bool ok = false;
      if (s["type"].is_string()) ok = has_type(v, s["type"]);
      else
        for (const auto& t : s["type"]) ok |= has_type(v, t);
      if (!ok) {
        errs_.push_back(at + ": wrong type");
        return;
      }
    }
    if (s.contains("enum")) {
      bool ok = false;
      for (const auto& e : s["enum"]) ok |= e == v;
      if (!ok) errs_.push_back(at + ": not in enum");
    }
    if (s.contains("minimum") && v.is_number() && v.get<double>() < s["minimum"].get<double>())
      errs_.push_back(at + ": below minimum");
    if (v.is_object()) {
      if (s.contains("required"))
        for (const auto& r : s["required"])
          if (!v.contains(r.get<std::string>())) errs_.push_back(at + ": missing " + r.get<std::string>());
      for (auto it = v.begin(); it != v.end(); ++it) {
        if (s.contains("properties") && s["properties"].contains(it.key()))
          check(s["properties"][it.key()], it.value(), at + "." + it.key());
        else if (s.contains("additionalProperties") && s["additionalProperties"] == false)
          errs_.push_back(at + ": unexpected " + it.key());
      }
    }
    if (v.is_array() && s.contains("items"))
      for (std::size_t k = 0; k < v.size(); ++k) check(s["items"], v[k], at + "[" + std::to_string(k) + "]");
  }

  json root_;
  std::vector<std::string> errs_;
};

SchemaCheck& schema() {
  static SchemaCheck s(json::parse(slurp(kRepo + "/schemas/report.schema.json")));
  return s;
}

std::vector<std::filesystem::path> job_files() {
  std::vector<std::filesystem::path> out;
  for (const auto& e : std::filesystem::directory_iterator(kRepo + "/jobs"))
    if (e.path().extension() == ".json") out.push_back(e.path());
  std::sort(out.begin(), out.end());
  return out;
}

json circle_job(const std::string& f) {
  json j = json::parse(R"({"function": "", "curve_S": {"circle": {"center": [0, 0], "radius": 1}},
                           "curve_Gamma": {"circle": {"center": [0, 0], "radius": 1}}})");
  j["function"] = f;
  return j;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("job parsing") {
    const auto j = parse_job(json::parse(R"({
      "function": "z^2",
      "curve_S": {"polygon": {"vertices": [[0,0],[1,0],[1,1],[0,1]], "fillet_radius": 0.1}},
      "box": [[-1,-1],[1,1]],
      "points": [[0.5, 0], "inf", 2],
      "tolerances": {"newton_tol": 1e-11, "item1_tol": 1e-7},
      "sample_plan": {"k_inner": 4},
      "seed": 5
    })"));
    CHECK(j.function == "z^2");
    CHECK(j.curve_s->is_simple());
    CHECK(j.points.size() == 3);
    CHECK(j.points[1].is_infinite());
    CHECK(j.points[2] == ComplexValue(2.0));
    CHECK(*j.tolerances.newton_tol == 1e-11);
    CHECK(j.plan.k_inner == 4);
    CHECK(j.plan.seed == 5);
    CHECK(locator_config(j).newton_tol == 1e-11);
    CHECK(classify_config(j).item1_tol == 1e-7);

    const auto o = parse_job(json::parse(R"({"function": "z", "seed": 5})"), 9);
    CHECK(o.seed == 9);
    CHECK(o.echo["seed"] == 9);
  }

  TEST_CASE("job validation errors") {
    for (const char* bad : {R"({"curve_S": {"circle": {"center": [0,0], "radius": 1}}})",
                            R"({"function": "z", "tolerances": {"trace_tol": -1}})",
                            R"({"function": "z", "tolerances": {"bogus": 1}})",
                            R"({"function": "z", "sample_plan": {"k_inner": 2}})",
                            R"({"function": "z", "box": [[1,1],[0,0]]})",
                            R"({"function": "z", "curve_S": {"triangle": {}}})",
                            R"({"function": "z", "points": ["nan"]})",
                            R"({"function": "z", "seed": -3})"}) {
      CAPTURE(bad);
      CHECK_THROWS_AS(parse_job(json::parse(bad)), Error);
    }
    CHECK_THROWS_AS(parse_job(json::parse(R"({"function": "z", "curve_S": {"samples": [[0,0],[1,1],[1,0],[0,1]]}})")),
                    Error);  // self-intersecting
  }

  TEST_CASE("exit codes") {
    auto r = run_job("classify", parse_job(circle_job("z * (z - 0.5)/(1 - 0.5*z)")));
    CHECK(r.exit_code == 0);
    CHECK(r.report["verdict"]["kind"] == "PseudoLemniscate");

    r = run_job("classify", parse_job(circle_job("(z + 1")));
    CHECK(r.exit_code == 2);
    CHECK(r.report["verdict"]["error"] == "SyntaxError");

    // f(S) runs through a pole: PoleOnCurve is a numerical failure, exit 3
    r = run_job("classify", parse_job(circle_job("1/(z - 1)")));
    CHECK(r.exit_code == 3);

    r = run_job("blaschke-model", parse_job(json{{"function", "exp(z)"}}));
    CHECK(r.exit_code == 2);
    CHECK(r.report["verdict"]["error"] == "NotBoundaryUnimodular");

    r = run_job("trace", parse_job(json{{"function", "z"}}));
    CHECK(r.exit_code == 2);  // missing curve_Gamma and box

    auto j = parse_job(circle_job("z"));
    j.command = "trace";
    CHECK(run_job("classify", j).exit_code == 2);

    r = run_file("count", "/nonexistent/job.json");
    CHECK(r.exit_code == 2);
    CHECK(schema().errors(r.report).empty());
  }

  TEST_CASE("exit code table") {
    const auto r = run_job("classify", parse_job(circle_job("z^2")));
    CHECK(r.exit_code == 0);
    CHECK(r.report["verdict"]["n_minus"] == 2);
    CHECK(exit_code_for(ErrorKind::InternalInconsistency) == 4);
    CHECK(exit_code_for(ErrorKind::TooCloseToImage) == 3);
    CHECK(exit_code_for(ErrorKind::GeometryError) == 2);
  }

  TEST_CASE("locate z^2 - 1 writes two CSV rows") {
    const auto job = load_job(kRepo + "/jobs/z2m1_locate.json");
    const auto r = run_job(job.command, job);
    CHECK(r.exit_code == 0);
    std::istringstream in(r.csv);
    std::string line;
    int rows = -1;
    while (std::getline(in, line)) ++rows;
    CHECK(rows == 2);
    CHECK(r.csv.rfind("kind,order,re,im,residual\n", 0) == 0);
  }

  TEST_CASE("trace of z^2 draws one closed curve") {
    const auto job = load_job(kRepo + "/jobs/z2_trace.json");
    const auto r = run_job(job.command, job);
    REQUIRE(r.scene.has_value());
    int closed = 0;
    for (const auto& c : r.scene->curves) closed += c.closed && c.label != "box";
    CHECK(closed == 1);
    CHECK(r.report["verdict"]["components"] == 1);
    CHECK(r.csv.rfind("component,theta,re,im\n", 0) == 0);
  }

  TEST_CASE("svg rendering") {
    const std::string empty = render_svg(Scene{});
    CHECK(empty.find("<svg") != std::string::npos);
    CHECK(empty.find("</svg>") != std::string::npos);
    CHECK(empty.find("<polyline") == std::string::npos);

    Scene sc;
    sc.curves.push_back({"S", "#000", {0.0, 1.0, {1, 1}}, false});
    sc.curves.push_back({"f(S)", "#f00", {0.0, {0, 2}, {2, 2}}, false});
    sc.markers.push_back({"branch point", "#00f", {0.5, 0.5}});
    const std::string svg = render_svg(sc);
    std::size_t polylines = 0;
    for (std::size_t p = svg.find("<polyline"); p != std::string::npos; p = svg.find("<polyline", p + 1)) ++polylines;
    CHECK(polylines == 2);
    CHECK(svg.find("<circle") != std::string::npos);
    CHECK(svg.find(">S</text>") != std::string::npos);
    CHECK(svg.find(">f(S)</text>") != std::string::npos);
    CHECK(svg.find(">branch point</text>") != std::string::npos);
  }

  TEST_CASE("artifacts land in the output directory") {
    const auto dir = std::filesystem::temp_directory_path() / "lemni_cli_test";
    std::filesystem::remove_all(dir);
    const auto job = load_job(kRepo + "/jobs/z2m1_locate.json");
    write_artifacts(run_job(job.command, job), &job, job.command, dir.string());
    CHECK(std::filesystem::exists(dir / "z2m1_locate.json"));
    CHECK(std::filesystem::exists(dir / "z2m1_locate.svg"));
    CHECK(std::filesystem::exists(dir / "z2m1_locate.csv"));
    std::filesystem::remove_all(dir);
  }
}

TEST_SUITE("cli properties") {
  TEST_CASE("shipped jobs produce schema-valid reports matching the golden files") {
    for (const auto& path : job_files()) {
      CAPTURE(path.string());
      const auto job = load_job(path.string());
      const auto r = run_job(job.command, job);
      CHECK(r.exit_code == 0);
      const auto errs = schema().errors(r.report);
      std::string joined;
      for (const auto& e : errs) joined += e + "\n";
      CHECK_MESSAGE(errs.empty(), joined);
      const std::string golden = kRepo + "/reports/" + path.filename().string();
      REQUIRE(std::filesystem::exists(golden));
      CHECK(slurp(golden) == r.report.dump(2) + "\n");
    }
  }

  TEST_CASE("reports do not depend on the thread count") {
    for (const auto& path : job_files()) {
      CAPTURE(path.string());
      const auto job = load_job(path.string());
      set_parallelism(1);
      const auto a = run_job(job.command, job);
      set_parallelism(4);
      const auto b = run_job(job.command, job);
      set_parallelism(1);
      CHECK(a.report.dump(2) == b.report.dump(2));
      CHECK(a.csv == b.csv);
      CHECK(render_svg(a.scene.value_or(Scene{})) == render_svg(b.scene.value_or(Scene{})));
    }
  }

  TEST_CASE("error reports are schema-valid") {
    for (const char* f : {"(z + 1", "z^z", "1/(z - 1)"}) {
      const auto r = run_job("classify", parse_job(circle_job(f)));
      CHECK(schema().errors(r.report).empty());
    }
  }
}
