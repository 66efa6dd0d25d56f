#include <random>

#include "doctest.h"
#include "lemni/geometry.hpp"
#include "oracles.hpp"

using namespace lemni;

namespace {

std::vector<JordanCurve> corpus() {
  return {
      JordanCurve::circle(0.0, 1.0),
      JordanCurve::circle({0.5, 0}, 0.5, 512),
      JordanCurve::circle({1, -2}, 3.0, 1024, true),
      rounded_polygon({0.0, 1.0, {1, 1}, {0, 1}}, 0.1, 100),
      rounded_polygon({0.0, 1.0, {0, 1}}, 0.4, 100),
      rounded_polygon({0.0, 1.0, {1, 8}, {0, 2}}, 0.05, 200),
      rounded_polygon({0.0, 1.0, {1, 4}, {0, 2}}, 0.05, 200),
      rounded_polygon({0.0, 2.0, {2, 2}, {1, 0.8}, {0, 2}}, 0.1, 100),  // one reflex vertex
      JordanCurve::from_points({0.0, 1.0, {1, 1}, {0, 1}}),
  };
}

}  // namespace

TEST_SUITE("geometry") {
  TEST_CASE("winding examples") {
    const auto c = JordanCurve::circle(0.0, 1.0);
    CHECK(winding_number(c, 0.0) == 1);
    CHECK(winding_number(c, 3.0) == 0);
    CHECK(winding_number(JordanCurve::circle(0.0, 1.0, 2048, true), 0.0) == -1);
    CHECK_THROWS_AS(winding_number(c, 1.0 + 1e-12), Error);
  }

  TEST_CASE("locate_point examples") {
    const auto c = JordanCurve::circle(0.0, 1.0);
    CHECK(locate_point(c, 0.0).where == Location::Inside);
    CHECK(locate_point(c, 2.0).where == Location::Outside);
    CHECK(locate_point(c, 1.0 + 1e-12, 1e-9).where == Location::NearBoundary);
    CHECK(locate_point(c, 2.0).distance == doctest::Approx(1.0).epsilon(1e-12));
  }

  TEST_CASE("samples close exactly") {
    for (const auto& c : corpus()) {
      CHECK(c.samples().front().p == c.samples().back().p);
      CHECK(c.closed());
    }
  }

  TEST_CASE("rounded polygon") {
    const std::vector<cplx> sq{0.0, 1.0, {1, 1}, {0, 1}};
    const auto c = rounded_polygon(sq, 0.1, 100);
    CHECK(c.is_simple());
    CHECK(c.orientation() == 1);
    for (cplx v : sq) {
      CHECK(c.distance(v) <= 0.15);
      CHECK(locate_point(c, v).where == Location::Inside);  // encloses the polygon
    }
    CHECK(c.distance({0.5, -0.1}) < 1e-12);  // edges offset outward by the radius
    CHECK(rounded_polygon({0.0, 1.0, {0, 1}}, 0.4, 100).is_simple());
    CHECK_THROWS_AS(rounded_polygon({0.0, 1.0, {0, 1}, {1, 1}}, 0.1, 100), Error);  // bow tie
  }

  TEST_CASE("normalize") {
    const auto cw = JordanCurve::circle(0.0, 1.0, 256, true);
    const auto n = normalize(cw);
    CHECK(n.orientation() == 1);
    CHECK(winding_number(n, 0.0) == 1);
    const auto ccw = JordanCurve::circle(0.0, 1.0, 256);
    const auto same = normalize(ccw);
    REQUIRE(same.size() == ccw.size());
    for (std::size_t k = 0; k < ccw.size(); ++k) CHECK(same.samples()[k].p == ccw.samples()[k].p);
  }

  TEST_CASE("refine") {
    const auto sq = JordanCurve::from_points({0.0, 1.0, {1, 1}, {0, 1}});
    const auto r = refine(sq, 0.1);
    CHECK(r.size() >= 41);
    CHECK(r.max_spacing() <= 0.1);
    const auto fine = JordanCurve::circle(0.0, 1.0, 2048);
    CHECK(refine(fine, 0.1).size() == fine.size());
    CHECK_THROWS_AS(refine(sq, 0.0), Error);
  }

  TEST_CASE("rect validation") {
    CHECK_THROWS_AS((Rect{1.0, 0.0}).validate(), Error);
    CHECK_NOTHROW((Rect{0.0, {1, 1}}).validate());
  }
}

TEST_SUITE("geometry properties") {
  TEST_CASE("winding constant along paths that avoid the curve") {
    std::mt19937_64 rng(21);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    const auto curves = corpus();
    int paths = 0;
    while (paths < 100) {
      const auto& c = curves[paths % curves.size()];
      const cplx a(u(rng), u(rng)), b(u(rng), u(rng));
      // samples at most 0.0043 apart, so clearance 0.01 at samples keeps the whole segment clear
      bool clear = true;
      for (int k = 0; k <= 2000 && clear; ++k) clear = c.distance(a + (b - a) * (k / 2000.0)) > 1e-2;
      if (!clear) continue;
      const int w0 = winding_number(c, a);
      for (int k = 1; k <= 20; ++k) CHECK(winding_number(c, a + (b - a) * (k / 20.0)) == w0);
      ++paths;
    }
  }

  TEST_CASE("normalized curves have positive area and normalize is idempotent") {
    for (const auto& c : corpus()) {
      const auto n = normalize(c);
      CHECK(n.signed_area() > 0);
      const auto nn = normalize(n);
      REQUIRE(nn.size() == n.size());
      for (std::size_t k = 0; k < n.size(); ++k) CHECK(nn.samples()[k].p == n.samples()[k].p);
    }
  }

  TEST_CASE("corpus curves are simple") {
    for (const auto& c : corpus()) CHECK(c.is_simple());
  }

  TEST_CASE("rounded polygon matches the grown polygon") {
    std::mt19937_64 rng(22);
    std::uniform_real_distribution<double> ux(-0.5, 1.5), uy(-0.5, 8.5);
    const std::vector<cplx> v{0.0, 1.0, {1, 8}, {0, 2}};
    const auto c = rounded_polygon(v, 0.05, 200);
    int n = 0;
    while (n < 500) {
      const cplx p(ux(rng), uy(rng));
      if (c.distance(p) < 1e-3) continue;
      CHECK((locate_point(c, p).where == Location::Inside) == oracle::in_grown_polygon(p, v, 0.05));
      ++n;
    }
  }
}
