#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "lemni/complex_value.hpp"
#include "lemni/error.hpp"

namespace lemni {

struct Rect {
  cplx lo, hi;

  double width() const { return hi.real() - lo.real(); }
  double height() const { return hi.imag() - lo.imag(); }
  double diagonal() const { return std::abs(hi - lo); }
  cplx center() const { return 0.5 * (lo + hi); }
  bool contains(cplx z) const {
    return z.real() >= lo.real() && z.real() <= hi.real() && z.imag() >= lo.imag() &&
           z.imag() <= hi.imag();
  }
  Rect inflated(double margin) const { return {lo - cplx(margin, margin), hi + cplx(margin, margin)}; }
  /// Throws ConfigError unless width and height are positive.
  void validate() const;
};

struct CurveSample {
  double t;
  cplx p;
};

/// Exact parametrization behind a sampled curve, t in [0, 1], period 1.
struct Parametrization {
  std::function<cplx(double)> point;
  std::function<cplx(double)> tangent;  // d point / dt
};

/// Oriented closed curve stored as samples (first and last point identical)
/// plus, when known, the smooth parametrization the samples came from.
/// Refinement and distance queries use the parametrization if present.
class JordanCurve {
 public:
  JordanCurve() = default;

  /// Closed polyline through `points` (the closing point is appended when
  /// missing). Parameter is normalized cumulative chord length.
  static JordanCurve from_points(std::vector<cplx> points);
  static JordanCurve circle(cplx center, double radius, int n = 2048, bool clockwise = false);
  static JordanCurve parametric(Parametrization param, int n);

  const std::vector<CurveSample>& samples() const { return samples_; }
  std::size_t size() const { return samples_.size(); }
  bool closed() const { return true; }
  /// +1 for counterclockwise, -1 for clockwise.
  int orientation() const { return signed_area() >= 0.0 ? 1 : -1; }
  bool has_parametrization() const { return static_cast<bool>(param_); }

  cplx point_at(double t) const;
  cplx tangent_at(double t) const;

  double signed_area() const;
  double diameter() const;
  double length() const;
  Rect bounding_box() const;
  double max_spacing() const;
  /// No two non-adjacent polyline segments intersect.
  bool is_simple() const;

  /// Distance from w to the curve (the smooth curve when parametrized).
  double distance(cplx w) const;
  /// Parameter of the curve point closest to w.
  double nearest_parameter(cplx w) const;
  /// Negative inside, positive outside.
  double signed_distance(cplx w) const;

  double default_band() const { return 1e-9 * diameter(); }

  JordanCurve reversed() const;
  /// Samples with midpoint insertion at parameter midpoints.
  JordanCurve with_samples(std::vector<CurveSample> samples) const;

 private:
  std::pair<std::size_t, double> nearest_segment(cplx w) const;

  std::vector<CurveSample> samples_;
  std::shared_ptr<const Parametrization> param_;
};

enum class Location { Inside, Outside, NearBoundary };

struct PointLocation {
  Location where;
  double distance;
};

/// Winding number of the sampled curve about w: principal angle increments
/// summed and divided by 2π. Throws TooCloseToCurve when w is within `band`
/// of the curve (band < 0 selects the default 1e-9 · diameter).
int winding_number(const JordanCurve& curve, cplx w, double band = -1.0);

PointLocation locate_point(const JordanCurve& curve, cplx w, double band = -1.0);

/// Polygon with every vertex replaced by a circular fillet of the given radius.
/// Edges are offset outward by the radius, so the result encloses the polygon
/// and passes at distance `fillet_radius` from each convex vertex.
JordanCurve rounded_polygon(const std::vector<cplx>& vertices, double fillet_radius,
                            double density);

JordanCurve normalize(const JordanCurve& curve);

/// Inserts parameter midpoints until no chord exceeds max_spacing.
JordanCurve refine(const JordanCurve& curve, double max_spacing);

/// Segment [a, b] against [c, d], including touching and collinear overlap.
bool segments_intersect(cplx a, cplx b, cplx c, cplx d);
double point_segment_distance(cplx p, cplx a, cplx b);

}  // namespace lemni
