#pragma once

// Winding of an image curve t ↦ value(path(t)) about a point, with the path
// bisected in t wherever the image chord is not shorter than the distance of
// both endpoints to the point. That chord condition bounds every angle step
// below π/3, so the principal-argument sum is exact for the refined polyline.

#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "lemni/complex_value.hpp"
#include "lemni/error.hpp"
#include "lemni/geometry.hpp"

namespace lemni::detail {

struct ImageNode {
  double t;
  cplx z;   // point on the path
  cplx fz;  // image
};

struct WindingStats {
  int winding = 0;
  double min_distance = std::numeric_limits<double>::infinity();
  double min_chordal = std::numeric_limits<double>::infinity();
  int max_depth = 0;
};

/// `nodes` is closed (last node repeats the first at t + 1). `band` is the
/// admissibility radius about w; `max_rounds` bounds bisection per segment.
/// Throws TooCloseToImage or PoleOnCurve.
template <class Path, class Value>
WindingStats adaptive_winding(const std::vector<ImageNode>& nodes, Path&& path, Value&& value, cplx w,
                              double band, int max_rounds) {
  WindingStats st;
  double total = 0.0;
  auto chordal = [](cplx a, cplx b) {
    return 2.0 * std::abs(a - b) / std::sqrt((1.0 + std::norm(a)) * (1.0 + std::norm(b)));
  };
  struct Item {
    ImageNode b;
    int depth;
  };
  std::vector<Item> stack;
  for (std::size_t k = 0; k + 1 < nodes.size(); ++k) {
    ImageNode a = nodes[k];
    stack.clear();
    stack.push_back({nodes[k + 1], 0});
    while (!stack.empty()) {
      const Item it = stack.back();
      const cplx da = a.fz - w, db = it.b.fz - w;
      const double ra = std::abs(da), rb = std::abs(db);
      if (ra <= band || rb <= band)
        throw Error(ErrorKind::TooCloseToImage, "image passes within the admissibility band of w");
      const double chord = std::abs(it.b.fz - a.fz);
      if (chord < std::min(ra, rb)) {
        total += std::arg(db / da);
        st.min_distance = std::min(st.min_distance, point_segment_distance(w, a.fz, it.b.fz));
        st.min_chordal = std::min(st.min_chordal, chordal(a.fz, w));
        st.max_depth = std::max(st.max_depth, it.depth);
        a = it.b;
        stack.pop_back();
        continue;
      }
      if (it.depth >= max_rounds)
        throw Error(ErrorKind::TooCloseToImage, "refinement budget exhausted near w");
      const double tm = 0.5 * (a.t + it.b.t);
      const cplx zm = path(tm);
      const cplx fm = value(zm);
      if (!is_finite(fm)) throw Error(ErrorKind::PoleOnCurve, "function is infinite on the curve");
      stack.back().depth = it.depth + 1;
      stack.push_back({{tm, zm, fm}, it.depth + 1});
    }
  }
  if (st.min_distance <= band)
    throw Error(ErrorKind::TooCloseToImage, "image passes within the admissibility band of w");
  const double turns = total / (2.0 * std::numbers::pi);
  const double rounded = std::round(turns);
  if (std::abs(turns - rounded) >= 0.25)
    throw Error(ErrorKind::InternalInconsistency, "winding residual above 0.25 after refinement");
  st.winding = static_cast<int>(rounded);
  return st;
}

}  // namespace lemni::detail
