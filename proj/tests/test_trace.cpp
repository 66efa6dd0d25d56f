#include <algorithm>

#include "doctest.h"
#include "lemni/counting.hpp"
#include "lemni/trace.hpp"

using namespace lemni;

namespace {

const Rect kBox{{-2, -2}, {2, 2}};

void check_residuals(const FunctionDef& f, const JordanCurve& gamma, const std::vector<PathComponent>& comps) {
  const double tol = 1e-9 * gamma.diameter();
  for (const auto& c : comps) {
    REQUIRE(c.points.size() == c.parameter_track.size());
    for (cplx z : c.points) CHECK(gamma.distance(f.raw(z)) <= tol);
  }
}

std::vector<cplx> sorted(std::vector<cplx> v) {
  std::sort(v.begin(), v.end(), [](cplx a, cplx b) { return a.imag() < b.imag() || (a.imag() == b.imag() && a.real() < b.real()); });
  return v;
}

}  // namespace

TEST_SUITE("trace") {
  TEST_CASE("seed points") {
    const auto unit = JordanCurve::circle(0.0, 1.0);
    auto s = sorted(seed_points(parse("z^2"), unit, kBox));
    REQUIRE(s.size() == 2);
    CHECK(std::abs(s[0] + 1.0) < 1e-9);
    CHECK(std::abs(s[1] - 1.0) < 1e-9);
    s = sorted(seed_points(parse("exp(z)"), unit, Rect{{-0.5, -7}, {0.5, 7}}));
    REQUIRE(s.size() == 3);
    CHECK(std::abs(s[0] - cplx(0, -2 * std::numbers::pi)) < 1e-9);
    CHECK(std::abs(s[1]) < 1e-9);
    CHECK(std::abs(s[2] - cplx(0, 2 * std::numbers::pi)) < 1e-9);
    s = seed_points(parse("z"), unit, kBox);
    REQUIRE(s.size() == 1);
    CHECK(std::abs(s[0] - 1.0) < 1e-9);
  }

  TEST_CASE("z^2 on the unit circle is the unit circle") {
    const auto unit = JordanCurve::circle(0.0, 1.0);
    const FunctionDef f = parse("z^2");
    const auto comps = trace_components(f, unit, kBox);
    REQUIRE(comps.size() == 1);
    CHECK(comps[0].closed);
    CHECK(comps[0].branch_points.empty());
    for (cplx z : comps[0].points) CHECK(std::abs(std::abs(z) - 1.0) < 1e-6);
    check_residuals(f, unit, comps);
  }

  TEST_CASE("identity traces the curve itself") {
    const auto unit = JordanCurve::circle(0.0, 1.0);
    const auto comps = trace_components(parse("z"), unit, kBox);
    REQUIRE(comps.size() == 1);
    CHECK(comps[0].closed);
    for (cplx z : comps[0].points) CHECK(unit.distance(z) < 1e-9);
  }

  TEST_CASE("branch point of z^2 through the critical value") {
    const FunctionDef f = parse("z^2");
    const auto gamma = JordanCurve::circle({1, 0}, 1.0);
    const auto comps = trace_components(f, gamma, kBox);
    REQUIRE(comps.size() == 1);
    REQUIRE(comps[0].branch_points.size() == 1);
    CHECK(std::abs(comps[0].branch_points[0].location) < 1e-6);
    CHECK(comps[0].branch_points[0].order == 1);
    CHECK(comps[0].branch_points[0].incident_edges == 4);
    check_residuals(f, gamma, comps);
  }

  TEST_CASE("exp gives an open arc in a finite box") {
    const auto comps = trace_components(parse("exp(z)"), JordanCurve::circle(0.0, 1.0), Rect{{-0.5, -7}, {0.5, 7}});
    REQUIRE(comps.size() == 1);
    CHECK_FALSE(comps[0].closed);
  }

  TEST_CASE("constant function is rejected") {
    CHECK_THROWS_AS(trace_components(parse("2"), JordanCurve::circle(0.0, 1.0), kBox), Error);
  }
}

TEST_SUITE("trace properties") {
  TEST_CASE("z^n component counts") {
    for (int n = 1; n <= 5; ++n) {
      CAPTURE(n);
      const FunctionDef f = parse("z^" + std::to_string(n));
      const auto unit = JordanCurve::circle(0.0, 1.0);
      auto comps = trace_components(f, unit, kBox);
      CHECK(comps.size() == 1);
      check_residuals(f, unit, comps);
      // 0 lies outside Γ and its preimages satisfy 1 <= |z|^n <= 2, inside the box
      const auto off = JordanCurve::circle({1.5, 0}, 0.5);
      comps = trace_components(f, off, Rect{{-2.5, -2.5}, {2.5, 2.5}});
      CHECK(comps.size() == std::size_t(n));
      check_residuals(f, off, comps);
    }
  }

  TEST_CASE("branch points have an even number of edges, at least 4") {
    struct Case {
      const char* f;
      cplx center;
      double radius;
      int edges;
    };
    for (const Case& c : {Case{"z^2", {1, 0}, 1.0, 4}, Case{"z^3", {1, 0}, 1.0, 6}, Case{"z^2 - 1", {0, 0}, 1.0, 4},
                          Case{"z^3 - 3*z", {0, 0}, 2.0, 4}}) {
      CAPTURE(c.f);
      const auto comps = trace_components(parse(c.f), JordanCurve::circle(c.center, c.radius), Rect{{-2.5, -2.5}, {2.5, 2.5}});
      int seen = 0;
      for (const auto& comp : comps)
        for (const auto& b : comp.branch_points) {
          CHECK(b.incident_edges % 2 == 0);
          CHECK(b.incident_edges >= 4);
          CHECK(b.incident_edges == 2 * (b.order + 1));
          ++seen;
        }
      CHECK(seen >= 1);
      check_residuals(parse(c.f), JordanCurve::circle(c.center, c.radius), comps);
    }
  }

  TEST_CASE("edge spacing and closure") {
    const auto gamma = JordanCurve::circle({1, 0}, 1.0);
    TraceConfig cfg;
    const double spatial = 0.02 * kBox.diagonal();
    for (const auto& c : trace_components(parse("z^2"), gamma, kBox, cfg))
      for (const auto& e : c.edges) {
        for (std::size_t k = 1; k < e.points.size(); ++k) CHECK(std::abs(e.points[k] - e.points[k - 1]) <= 1.01 * spatial);
        if (e.closed_loop) CHECK(std::abs(e.points.front() - e.points.back()) <= 1e-6 * kBox.diagonal());
      }
  }

  TEST_CASE("components either are S or keep clear of it") {
    // f = A/B is fold-free on the unit circle, so S = Γ works; f^{-1}(Γ) also has
    // a loop around the pole inside the disk, which must not touch S
    const FunctionDef f = parse("z^2 * (z - 0.1)/(1 - 0.1*z) / ((z - 0.1i)/(1 + 0.1i*z))");
    const auto unit = JordanCurve::circle(0.0, 1.0);
    const auto comps = trace_components(f, unit, Rect{{-1.5, -1.5}, {1.5, 1.5}});
    REQUIRE(comps.size() >= 2);
    int on_s = 0;
    for (const auto& c : comps) {
      double lo = 1e300, hi = 0;
      for (cplx z : c.points) {
        lo = std::min(lo, unit.distance(z));
        hi = std::max(hi, unit.distance(z));
      }
      CHECK((hi < 1e-6 || lo > 1e-3));
      on_s += hi < 1e-6;
    }
    CHECK(on_s == 1);
    for (std::size_t i = 0; i < comps.size(); ++i)
      for (std::size_t j = i + 1; j < comps.size(); ++j) {
        double gap = 1e300;
        for (cplx a : comps[i].points)
          for (cplx b : comps[j].points) gap = std::min(gap, std::abs(a - b));
        CHECK(gap > 2e-9 * unit.diameter());
      }
  }

  TEST_CASE("preimage count is the sum of windings over traced components") {
    // Γ = circle(1, 0.5) misses 0, so f = z^2 pulls it back to two loops
    // around ±1 inside D = |z| < 2. For w inside Γ every preimage in D lies
    // inside a loop, so N(w) is the sum over loops of wind(f ∘ loop, w); for
    // w outside Γ the loop windings vanish.
    const FunctionDef f = parse("z^2");
    const auto gamma = JordanCurve::circle({1, 0}, 0.5);
    const auto comps = trace_components(f, gamma, Rect{{-2, -2}, {2, 2}});
    REQUIRE(comps.size() == 2);
    const auto d = JordanCurve::circle(0.0, 2.0);
    auto loop_sum = [&](cplx w) {
      int sum = 0;
      for (const auto& c : comps) {
        std::vector<cplx> pts(c.points);
        if (pts.front() != pts.back()) pts.push_back(pts.front());
        sum += image_winding(f, JordanCurve::from_points(pts), w);
      }
      return sum;
    };
    for (cplx w : {cplx(1, 0), cplx(1.2, 0.1), cplx(0.7, -0.2)}) {
      CAPTURE(w);
      CHECK(loop_sum(w) == count_preimages(f, d, w).count);
      CHECK(loop_sum(w) == 2);
    }
    for (cplx w : {cplx(0.3, 0), cplx(-1, 0), cplx(3, 1)}) CHECK(loop_sum(w) == 0);
  }
}
