#include <random>

#include "doctest.h"
#include "lemni/analysis.hpp"
#include "oracles.hpp"

using namespace lemni;

namespace {

const JordanCurve& unit() {
  static const JordanCurve c = JordanCurve::circle(0.0, 1.0);
  return c;
}

SamplePlan plan(int k, std::uint64_t seed) {
  SamplePlan p;
  p.k_inner = p.k_outer = p.k_boundary = k;
  p.seed = seed;
  return p;
}

void check_min_rule(const ClassificationReport& r) {
  if (r.verdict != Verdict::PseudoLemniscate) return;
  for (const auto& s : r.samples) {
    switch (s.face) {
      case Face::Inner: CHECK(s.report.count == r.n_minus); break;
      case Face::Outer: CHECK(s.report.count == r.n_plus); break;
      case Face::Boundary: CHECK(s.report.count == std::min(r.n_minus, r.n_plus)); break;
    }
  }
}

}  // namespace

TEST_SUITE("analysis") {
  TEST_CASE("face sampling") {
    const auto f = sample_faces(unit(), plan(3, 7));
    REQUIRE(f.inner.size() == 3);
    REQUIRE(f.outer.size() == 4);
    REQUIRE(f.boundary.size() == 3);
    for (const auto& w : f.inner) CHECK(std::abs(w.value()) < 1.0);
    for (std::size_t k = 0; k + 1 < f.outer.size(); ++k) CHECK(std::abs(f.outer[k].value()) > 1.0);
    CHECK(f.outer.back().is_infinite());
    for (const auto& w : f.boundary) CHECK(std::abs(std::abs(w.value()) - 1.0) < 1e-6);
    const auto g = sample_faces(unit(), plan(3, 7));
    CHECK(g.inner == f.inner);
    CHECK(g.outer == f.outer);
    CHECK(g.boundary == f.boundary);
    CHECK_THROWS_AS(sample_faces(unit(), plan(2, 7)), Error);
  }

  TEST_CASE("degree-2 Blaschke product") {
    const auto r = classify(parse("z * (z - 0.5)/(1 - 0.5*z)"), unit(), unit(), plan(8, 0));
    CHECK(r.verdict == Verdict::PseudoLemniscate);
    CHECK(r.n_minus == 2);
    CHECK(r.n_plus == 0);
    CHECK(r.item1.holds);
    CHECK(r.item2_holds);
    check_min_rule(r);
  }

  TEST_CASE("1/z swaps the faces") {
    const auto r = classify(parse("1/z"), unit(), unit(), plan(8, 0));
    CHECK(r.verdict == Verdict::PseudoLemniscate);
    CHECK(r.n_minus == 0);
    CHECK(r.n_plus == 1);
    check_min_rule(r);
  }

  TEST_CASE("folded ratio is not a pseudo-lemniscate") {
    // f = z^2 (1 - 0.5z)/(z - 0.5) has critical points on the unit circle at
    // cos θ = 7/8; boundary points in the fold of f(S) have no preimage in D
    const FunctionDef f = parse("z^2*(1 - 0.5*z)/(z - 0.5)");
    const auto crit = critical_points_on_curve(f, unit(), 1e-6);
    REQUIRE(crit.size() == 2);
    for (const auto& c : crit) CHECK(std::abs(c.location.real() - 7.0 / 8.0) < 1e-9);
    const auto r = classify(f, unit(), unit(), plan(8, 0));
    CHECK(r.verdict == Verdict::NotPseudoLemniscate);
    CHECK(r.witness_pair.has_value());
    CHECK_FALSE(r.item1.holds);
    // inner and outer faces still count 2 and 1
    for (const auto& s : r.samples) {
      if (s.face == Face::Inner) CHECK(s.report.count == 2);
      if (s.face == Face::Outer) CHECK(s.report.count == 1);
    }
  }

  TEST_CASE("non-Jordan test examples") {
    const FunctionDef e = parse("exp(z)");
    const auto quad = rounded_polygon({0.0, 1.0, {1, 8}, {0, 2}}, 0.05, 200);
    const std::vector<ComplexValue> ws{cplx(0, 1), cplx(0, std::numbers::e), cplx(0, std::exp(2.0))};
    auto v = non_jordan_test(e, quad, ws);
    CHECK(v.kind == NonJordanKind::ImageNotJordan);
    REQUIRE(v.witnesses.size() == 3);
    CHECK(v.witnesses[0].count == 1);
    CHECK(v.witnesses[1].count == 2);
    CHECK(v.witnesses[2].count == 0);
    CHECK(v.critical_points.empty());

    v = non_jordan_test(parse("z"), unit(), {0.0, 0.5, 2.0});
    CHECK(v.kind == NonJordanKind::Inconclusive);
    CHECK(v.counts_seen == std::vector<int>{0, 1, 1});

    const FunctionDef sq = parse("z^2");
    const auto disk = JordanCurve::circle({0.5, 0}, 0.5);
    v = non_jordan_test(sq, disk, default_candidates(sq, disk, 0));
    CHECK(v.kind == NonJordanKind::CriticalPointOnCurve);
    REQUIRE(v.critical_points.size() == 1);
    CHECK(std::abs(v.critical_points[0].location) < 1e-6);
  }

  TEST_CASE("candidates on f(S) are recorded, not fatal") {
    const auto v = non_jordan_test(parse("z"), unit(), {1.0, 0.0, 0.5, 2.0});
    CHECK(v.kind == NonJordanKind::Inconclusive);
    REQUIRE(v.samples.size() == 4);
    CHECK_FALSE(v.samples[0].ok());
  }
}

TEST_SUITE("analysis properties") {
  TEST_CASE("verdict agrees with the direct check across a corpus") {
    struct Case {
      std::string f;
      JordanCurve s, gamma;
    };
    std::vector<Case> cases;
    std::mt19937_64 rng(61);
    for (int c = 0; c < 6; ++c) {
      std::vector<cplx> za, zb;
      for (int k = 0; k < 1 + c % 3; ++k) za.push_back(oracle::uniform_disk(rng, 0.8));
      for (int k = 0; k < c % 2; ++k) zb.push_back(oracle::uniform_disk(rng, 0.8));
      cases.push_back({oracle::blaschke_text(za) + " / " + oracle::blaschke_text(zb), unit(), unit()});
    }
    const auto quad = rounded_polygon({0.0, 1.0, {1, 1}, {0, 1}}, 0.1, 100);
    // exp and a polynomial on a rounded square, Γ a circle in the image plane
    cases.push_back({"exp(z)", quad, JordanCurve::circle({2, 1}, 1.0)});
    cases.push_back({"z^2 + 0.5", quad, JordanCurve::circle({0.5, 0.5}, 0.6)});
    cases.push_back({"z^2", JordanCurve::circle(0.0, 0.8), JordanCurve::circle(0.0, 0.64)});
    cases.push_back({"z^3", JordanCurve::circle(0.0, 0.9), JordanCurve::circle(0.0, 0.729)});
    cases.push_back({"z^2*(1 - 0.5*z)/(z - 0.5)", unit(), unit()});
    for (const auto& c : cases) {
      CAPTURE(c.f);
      const auto r = classify(parse(c.f), c.s, c.gamma, plan(6, 3));
      CHECK(r.verdict != Verdict::Indeterminate);
      const bool item1 = r.item1.max_dist_f_S_to_Gamma <= 1e-8 && r.item1.critical_points_on_S.empty();
      CHECK((r.verdict == Verdict::PseudoLemniscate) == item1);
      check_min_rule(r);
    }
  }

  TEST_CASE("ImageNotJordan never comes with a critical point on S") {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const FunctionDef f = parse("z^2");
      const auto s = JordanCurve::circle({0.5, 0}, 0.5);
      const auto v = non_jordan_test(f, s, default_candidates(f, s, seed));
      CHECK(v.kind != NonJordanKind::ImageNotJordan);
      if (v.kind == NonJordanKind::ImageNotJordan) CHECK(v.critical_points.empty());
    }
  }

  TEST_CASE("classification is deterministic and thread independent") {
    const FunctionDef f = parse("z^2 * (z - 0.1)/(1 - 0.1*z) / ((z - 0.1i)/(1 + 0.1i*z))");
    ClassifyConfig par, ser;
    ser.parallel = false;
    const auto a = classify(f, unit(), unit(), plan(8, 9), par);
    const auto b = classify(f, unit(), unit(), plan(8, 9), ser);
    REQUIRE(a.samples.size() == b.samples.size());
    for (std::size_t k = 0; k < a.samples.size(); ++k) {
      CHECK(a.samples[k].report.w == b.samples[k].report.w);
      CHECK(a.samples[k].report.count == b.samples[k].report.count);
      CHECK(a.samples[k].report.min_image_distance == b.samples[k].report.min_image_distance);
    }
    CHECK(a.verdict == b.verdict);
    CHECK(a.item1.max_dist_f_S_to_Gamma == b.item1.max_dist_f_S_to_Gamma);
  }
}
