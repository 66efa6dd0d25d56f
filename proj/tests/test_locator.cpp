#include <algorithm>
#include <random>

#include "doctest.h"
#include "lemni/locator.hpp"
#include "oracles.hpp"

using namespace lemni;

namespace {

const Rect kBox{{-2, -2}, {2, 2}};

const char* kCorpus[] = {
    "z^2 - 1",
    "(z - 0.3)^2",
    "(z^2 - 1)/z",
    "z^3 - 3*z",
    "exp(z) - 2",
    "1/(z - 0.5)^2 + z",
    "(z - 0.1i)^3 * (z + 1.2)/(z - 0.7 + 0.4i)",
    "sin(z)",
};

}  // namespace

TEST_SUITE("locator") {
  TEST_CASE("isolate examples") {
    auto r = isolate(parse("z^2 - 1"), kBox);
    REQUIRE(r.size() == 2);
    CHECK(std::abs(r[0].location + 1.0) < 1e-10);
    CHECK(std::abs(r[1].location - 1.0) < 1e-10);
    CHECK(r[0].order == 1);
    CHECK(r[0].kind == PointKind::Zero);

    r = isolate(parse("(z - 0.3)^2"), kBox);
    REQUIRE(r.size() == 1);
    CHECK(r[0].order == 2);
    CHECK(std::abs(r[0].location - 0.3) < 1e-10);

    r = isolate(parse("(z^2 - 1)/z"), kBox);
    REQUIRE(r.size() == 3);
    CHECK(r[1].kind == PointKind::Pole);
    CHECK(std::abs(r[1].location) < 1e-10);
    CHECK(r[0].kind == PointKind::Zero);
    CHECK(r[2].kind == PointKind::Zero);
  }

  TEST_CASE("critical points") {
    auto c = critical_points(parse("z^2"), kBox);
    REQUIRE(c.size() == 1);
    CHECK(std::abs(c[0].location) < 1e-10);
    CHECK(c[0].kind == PointKind::CriticalPoint);
    CHECK(critical_points(parse("exp(z)"), kBox).empty());
    c = critical_points(parse("z^3 - 3*z"), kBox);
    REQUIRE(c.size() == 2);
    CHECK(std::abs(c[0].location + 1.0) < 1e-10);
    CHECK(std::abs(c[1].location - 1.0) < 1e-10);
    // poles of f' at poles of f are dropped
    CHECK(critical_points(parse("z + 1/z"), kBox).size() == 2);
  }

  TEST_CASE("critical points on a curve") {
    const auto on = critical_points_on_curve(parse("z^2"), JordanCurve::circle({0.5, 0}, 0.5), 1e-6);
    REQUIRE(on.size() == 1);
    CHECK(std::abs(on[0].location) < 1e-10);
    CHECK(critical_points_on_curve(parse("z^2"), JordanCurve::circle(0.0, 1.0), 1e-6).empty());
    CHECK(critical_points_on_curve(parse("exp(z)"), rounded_polygon({0.0, 1.0, {1, 8}, {0, 2}}, 0.05, 200), 1e-6)
              .empty());
  }

  TEST_CASE("boundary hits are retried with larger boxes") {
    // zero exactly on the edge of the requested box
    const auto r = isolate_around(parse("z - 1"), Rect{{-1, -1}, {1, 1}});
    REQUIRE(r.size() == 1);
    CHECK(std::abs(r[0].location - 1.0) < 1e-10);
  }

  TEST_CASE("config validation") {
    LocatorConfig c;
    c.newton_tol = -1;
    CHECK_THROWS_AS(isolate(parse("z"), kBox, c), Error);
  }
}

TEST_SUITE("locator properties") {
  TEST_CASE("orders add up to the box winding") {
    for (const char* text : kCorpus) {
      CAPTURE(text);
      const FunctionDef f = parse(text);
      const Rect box{{-1.9, -1.7}, {2.1, 1.9}};
      int sum = 0;
      for (const auto& r : isolate(f, box)) sum += r.kind == PointKind::Pole ? -r.order : r.order;
      CHECK(sum == box_winding(f, box));
    }
  }

  TEST_CASE("residuals within the Newton tolerance") {
    LocatorConfig cfg;
    for (const char* text : kCorpus) {
      CAPTURE(text);
      for (const auto& r : isolate(parse(text), kBox, cfg)) {
        CHECK(r.order >= 1);
        CHECK(r.residual <= cfg.newton_tol);
      }
    }
  }

  TEST_CASE("halving min_cell keeps the result") {
    for (const char* text : kCorpus) {
      CAPTURE(text);
      LocatorConfig a, b;
      a.min_cell = 1e-7;
      b.min_cell = 5e-8;
      const auto ra = isolate(parse(text), kBox, a), rb = isolate(parse(text), kBox, b);
      REQUIRE(ra.size() == rb.size());
      for (std::size_t k = 0; k < ra.size(); ++k) {
        CHECK(ra[k].order == rb[k].order);
        CHECK(ra[k].kind == rb[k].kind);
        CHECK(std::abs(ra[k].location - rb[k].location) <= 10 * a.newton_tol);
      }
    }
  }

  TEST_CASE("roots move continuously") {
    std::mt19937_64 rng(41);
    for (int k = 0; k < 20; ++k) {
      const cplx w = 1.0 + oracle::uniform_disk(rng, 1e-4);
      const auto r = isolate(parse("z^2").shifted(w), kBox);
      REQUIRE(r.size() == 2);
      for (const auto& z : r) CHECK(std::min(std::abs(z.location - 1.0), std::abs(z.location + 1.0)) < 1e-3);
    }
  }

  TEST_CASE("zeros agree with polynomial roots") {
    std::mt19937_64 rng(42);
    for (int c = 0; c < 20; ++c) {
      oracle::Poly p;
      for (int k = 0; k <= 2 + c % 4; ++k) p.push_back(oracle::uniform_disk(rng, 1.0));
      p.back() = 1.0;
      auto want = oracle::roots(p);
      bool inside = true;
      for (cplx z : want) inside &= std::abs(z.real()) < 2.9 && std::abs(z.imag()) < 2.9;
      if (!inside) continue;
      const auto got = isolate(parse(oracle::poly_text(p)), Rect{{-3, -3}, {3, 3}});
      int total = 0;
      for (const auto& r : got) {
        total += r.order;
        const auto it = std::min_element(want.begin(), want.end(),
                                         [&](cplx a, cplx b) { return std::abs(a - r.location) < std::abs(b - r.location); });
        CHECK(std::abs(*it - r.location) < 1e-8);
      }
      CHECK(total == int(want.size()));
    }
  }
}
