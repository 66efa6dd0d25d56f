#pragma once

#include <cstdint>
#include <vector>

#include "lemni/expr.hpp"
#include "lemni/geometry.hpp"

namespace lemni {

enum class PointKind { Zero, Pole, CriticalPoint };

std::string_view to_string(PointKind kind);

struct ZeroPoleRecord {
  cplx location;
  int order = 1;
  PointKind kind = PointKind::Zero;
  /// |f| for zeros, |1/f| for poles, |f'| for critical points.
  double residual = 0.0;
};

struct LocatorConfig {
  double min_cell = -1.0;  // < 0: 1e-8 · box diagonal
  int max_depth = 48;
  double newton_tol = 1e-10;
  int newton_max_iter = 50;
  std::uint64_t seed = 0;

  void validate() const;
};

/// wind(f ∘ ∂box, 0) for the counterclockwise box boundary, i.e. zeros minus
/// poles inside. Throws BoundaryHit when a zero or pole sits on the boundary.
int box_winding(const FunctionDef& f, const Rect& box);

/// Zeros and poles of f inside `box`, found by quadtree subdivision on boundary
/// winding numbers and contour moments, then refined by Newton iteration on
/// f/f'. Sorted by (re, im). Throws UnresolvedCluster or BoundaryHit.
std::vector<ZeroPoleRecord> isolate(const FunctionDef& f, const Rect& box, const LocatorConfig& cfg = {});

/// Zeros of f' in `box` (poles of f' are dropped), kind CriticalPoint.
std::vector<ZeroPoleRecord> critical_points(const FunctionDef& f, const Rect& box,
                                            const LocatorConfig& cfg = {});

/// Critical points within `band` of S. Search box is S's bounding box,
/// inflated by the band plus a small margin.
std::vector<ZeroPoleRecord> critical_points_on_curve(const FunctionDef& f, const JordanCurve& s, double band,
                                                     const LocatorConfig& cfg = {});

/// Runs `isolate` on `box`, retrying with slightly larger boxes when the box
/// boundary itself runs through a zero or pole.
std::vector<ZeroPoleRecord> isolate_around(const FunctionDef& f, const Rect& box, const LocatorConfig& cfg = {});

}  // namespace lemni
