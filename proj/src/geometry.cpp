#include "lemni/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace lemni {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double cross(cplx a, cplx b) { return a.real() * b.imag() - a.imag() * b.real(); }
double dot(cplx a, cplx b) { return a.real() * b.real() + a.imag() * b.imag(); }

}  // namespace

void Rect::validate() const {
  if (!(width() > 0.0) || !(height() > 0.0))
    throw Error(ErrorKind::ConfigError, "rectangle must have positive width and height");
}

double point_segment_distance(cplx p, cplx a, cplx b) {
  const cplx ab = b - a;
  const double len2 = std::norm(ab);
  if (len2 == 0.0) return std::abs(p - a);
  const double s = std::clamp(dot(p - a, ab) / len2, 0.0, 1.0);
  return std::abs(p - (a + s * ab));
}

bool segments_intersect(cplx a, cplx b, cplx c, cplx d) {
  auto orient = [](cplx p, cplx q, cplx r) {
    const double v = cross(q - p, r - p);
    return (v > 0.0) - (v < 0.0);
  };
  auto on_segment = [](cplx p, cplx q, cplx r) {
    return std::min(p.real(), r.real()) <= q.real() && q.real() <= std::max(p.real(), r.real()) &&
           std::min(p.imag(), r.imag()) <= q.imag() && q.imag() <= std::max(p.imag(), r.imag());
  };
  const int o1 = orient(a, b, c), o2 = orient(a, b, d), o3 = orient(c, d, a), o4 = orient(c, d, b);
  if (o1 != o2 && o3 != o4) return true;
  if (o1 == 0 && on_segment(a, c, b)) return true;
  if (o2 == 0 && on_segment(a, d, b)) return true;
  if (o3 == 0 && on_segment(c, a, d)) return true;
  if (o4 == 0 && on_segment(c, b, d)) return true;
  return false;
}

// ---------------------------------------------------------------------------

JordanCurve JordanCurve::from_points(std::vector<cplx> points) {
  if (points.size() < 3) throw Error(ErrorKind::GeometryError, "a closed curve needs >= 3 points");
  if (points.front() != points.back()) points.push_back(points.front());
  if (points.size() < 4) throw Error(ErrorKind::GeometryError, "a closed curve needs >= 3 points");
  std::vector<double> cum(points.size(), 0.0);
  for (std::size_t k = 1; k < points.size(); ++k) {
    const double step = std::abs(points[k] - points[k - 1]);
    if (step == 0.0) throw Error(ErrorKind::GeometryError, "repeated consecutive sample");
    cum[k] = cum[k - 1] + step;
  }
  JordanCurve c;
  c.samples_.reserve(points.size());
  for (std::size_t k = 0; k < points.size(); ++k)
    c.samples_.push_back({k + 1 == points.size() ? 1.0 : cum[k] / cum.back(), points[k]});
  return c;
}

JordanCurve JordanCurve::parametric(Parametrization param, int n) {
  if (n < 3) throw Error(ErrorKind::ConfigError, "need at least 3 samples");
  JordanCurve c;
  c.param_ = std::make_shared<const Parametrization>(std::move(param));
  c.samples_.reserve(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k < n; ++k) {
    const double t = static_cast<double>(k) / n;
    c.samples_.push_back({t, c.param_->point(t)});
  }
  c.samples_.push_back({1.0, c.samples_.front().p});
  return c;
}

JordanCurve JordanCurve::circle(cplx center, double radius, int n, bool clockwise) {
  if (!(radius > 0.0)) throw Error(ErrorKind::GeometryError, "circle radius must be positive");
  const double sign = clockwise ? -1.0 : 1.0;
  Parametrization p;
  p.point = [=](double t) {
    const double a = sign * kTwoPi * t;
    return center + radius * cplx(std::cos(a), std::sin(a));
  };
  p.tangent = [=](double t) {
    const double a = sign * kTwoPi * t;
    return sign * kTwoPi * radius * cplx(-std::sin(a), std::cos(a));
  };
  return parametric(std::move(p), n);
}

cplx JordanCurve::point_at(double t) const {
  t -= std::floor(t);
  if (param_) return param_->point(t);
  auto it = std::upper_bound(samples_.begin(), samples_.end(), t,
                             [](double v, const CurveSample& s) { return v < s.t; });
  if (it == samples_.end()) return samples_.back().p;
  const auto& b = *it;
  const auto& a = *(it - 1);
  const double s = (t - a.t) / (b.t - a.t);
  return a.p + s * (b.p - a.p);
}

cplx JordanCurve::tangent_at(double t) const {
  t -= std::floor(t);
  if (param_ && param_->tangent) return param_->tangent(t);
  if (param_) {
    const double h = 1e-6;
    return (param_->point(t + h) - param_->point(t - h)) / (2.0 * h);
  }
  auto it = std::upper_bound(samples_.begin(), samples_.end(), t,
                             [](double v, const CurveSample& s) { return v < s.t; });
  if (it == samples_.end()) it = samples_.begin() + 1;
  if (it == samples_.begin()) ++it;
  const auto& b = *it;
  const auto& a = *(it - 1);
  return (b.p - a.p) / (b.t - a.t);
}

double JordanCurve::signed_area() const {
  double area = 0.0;
  for (std::size_t k = 0; k + 1 < samples_.size(); ++k) area += cross(samples_[k].p, samples_[k + 1].p);
  return 0.5 * area;
}

Rect JordanCurve::bounding_box() const {
  Rect r{samples_.front().p, samples_.front().p};
  for (const auto& s : samples_) {
    r.lo = {std::min(r.lo.real(), s.p.real()), std::min(r.lo.imag(), s.p.imag())};
    r.hi = {std::max(r.hi.real(), s.p.real()), std::max(r.hi.imag(), s.p.imag())};
  }
  return r;
}

double JordanCurve::diameter() const { return bounding_box().diagonal(); }

double JordanCurve::length() const {
  double len = 0.0;
  for (std::size_t k = 0; k + 1 < samples_.size(); ++k) len += std::abs(samples_[k + 1].p - samples_[k].p);
  return len;
}

double JordanCurve::max_spacing() const {
  double m = 0.0;
  for (std::size_t k = 0; k + 1 < samples_.size(); ++k)
    m = std::max(m, std::abs(samples_[k + 1].p - samples_[k].p));
  return m;
}

bool JordanCurve::is_simple() const {
  const std::size_t n = samples_.size() - 1;  // segment count
  if (n < 3) return false;
  struct Seg {
    double xmin, xmax, ymin, ymax;
    std::size_t k;
  };
  std::vector<Seg> segs(n);
  for (std::size_t k = 0; k < n; ++k) {
    const cplx a = samples_[k].p, b = samples_[k + 1].p;
    segs[k] = {std::min(a.real(), b.real()), std::max(a.real(), b.real()),
               std::min(a.imag(), b.imag()), std::max(a.imag(), b.imag()), k};
  }
  std::sort(segs.begin(), segs.end(), [](const Seg& a, const Seg& b) { return a.xmin < b.xmin; });
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n && segs[j].xmin <= segs[i].xmax; ++j) {
      if (segs[j].ymin > segs[i].ymax || segs[j].ymax < segs[i].ymin) continue;
      const std::size_t a = segs[i].k, b = segs[j].k;
      const std::size_t gap = a > b ? a - b : b - a;
      if (gap == 1 || gap == n - 1) continue;  // adjacent share an endpoint
      if (segments_intersect(samples_[a].p, samples_[a + 1].p, samples_[b].p, samples_[b + 1].p))
        return false;
    }
  }
  return true;
}

std::pair<std::size_t, double> JordanCurve::nearest_segment(cplx w) const {
  std::size_t best = 0;
  double d = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k + 1 < samples_.size(); ++k) {
    const double dk = point_segment_distance(w, samples_[k].p, samples_[k + 1].p);
    if (dk < d) d = dk, best = k;
  }
  return {best, d};
}

double JordanCurve::nearest_parameter(cplx w) const {
  const auto [k, d] = nearest_segment(w);
  const cplx a = samples_[k].p, b = samples_[k + 1].p;
  const double ta = samples_[k].t, tb = samples_[k + 1].t;
  const double len2 = std::norm(b - a);
  const double s = len2 > 0.0 ? std::clamp(dot(w - a, b - a) / len2, 0.0, 1.0) : 0.0;
  double t = ta + s * (tb - ta);
  if (!param_) return t;
  // Golden-section polish on the smooth curve over the neighbouring intervals.
  const std::size_t n = samples_.size() - 1;
  const double h = std::max(tb - ta, samples_[(k + n - 1) % n + 1].t - samples_[(k + n - 1) % n].t);
  double lo = t - h, hi = t + h;
  const double g = 0.5 * (std::sqrt(5.0) - 1.0);
  auto f = [&](double x) { return std::norm(param_->point(x - std::floor(x)) - w); };
  double x1 = hi - g * (hi - lo), x2 = lo + g * (hi - lo);
  double f1 = f(x1), f2 = f(x2);
  for (int it = 0; it < 80 && hi - lo > 1e-15; ++it) {
    if (f1 < f2) {
      hi = x2, x2 = x1, f2 = f1;
      x1 = hi - g * (hi - lo), f1 = f(x1);
    } else {
      lo = x1, x1 = x2, f1 = f2;
      x2 = lo + g * (hi - lo), f2 = f(x2);
    }
  }
  const double best = 0.5 * (lo + hi);
  if (f(best) < f(t)) t = best;
  return t - std::floor(t);
}

double JordanCurve::distance(cplx w) const {
  if (!param_) return nearest_segment(w).second;
  const double t = nearest_parameter(w);
  return std::min(std::abs(param_->point(t) - w), nearest_segment(w).second);
}

double JordanCurve::signed_distance(cplx w) const {
  const double d = distance(w);
  if (d == 0.0) return 0.0;
  double total = 0.0;
  for (std::size_t k = 0; k + 1 < samples_.size(); ++k)
    total += std::arg((samples_[k + 1].p - w) / (samples_[k].p - w));
  const bool inside = std::lround(total / kTwoPi) != 0;
  return inside ? -d : d;
}

JordanCurve JordanCurve::reversed() const {
  JordanCurve c;
  c.samples_.reserve(samples_.size());
  for (auto it = samples_.rbegin(); it != samples_.rend(); ++it) c.samples_.push_back({1.0 - it->t, it->p});
  if (param_) {
    auto base = param_;
    Parametrization p;
    p.point = [base](double t) { return base->point(1.0 - t - std::floor(1.0 - t)); };
    if (base->tangent)
      p.tangent = [base](double t) { return -base->tangent(1.0 - t - std::floor(1.0 - t)); };
    c.param_ = std::make_shared<const Parametrization>(std::move(p));
  }
  return c;
}

JordanCurve JordanCurve::with_samples(std::vector<CurveSample> samples) const {
  JordanCurve c;
  c.samples_ = std::move(samples);
  c.param_ = param_;
  return c;
}

// ---------------------------------------------------------------------------

int winding_number(const JordanCurve& curve, cplx w, double band) {
  if (band < 0.0) band = curve.default_band();
  if (curve.distance(w) <= band)
    throw Error(ErrorKind::TooCloseToCurve, "point lies within the boundary band of the curve");
  JordanCurve c = curve;
  for (int round = 0; round < 8; ++round) {
    const auto& s = c.samples();
    double total = 0.0;
    for (std::size_t k = 0; k + 1 < s.size(); ++k) total += std::arg((s[k + 1].p - w) / (s[k].p - w));
    const double turns = total / kTwoPi;
    const double rounded = std::round(turns);
    if (std::abs(turns - rounded) < 0.25) return static_cast<int>(rounded);
    if (!c.has_parametrization()) break;
    c = refine(c, 0.5 * c.max_spacing());
  }
  throw Error(ErrorKind::TooCloseToCurve, "winding residual did not settle under refinement");
}

PointLocation locate_point(const JordanCurve& curve, cplx w, double band) {
  if (band < 0.0) band = curve.default_band();
  const double d = curve.distance(w);
  if (d <= band) return {Location::NearBoundary, d};
  const int wn = winding_number(curve, w, band);
  if (wn == 1) return {Location::Inside, d};
  if (wn == 0) return {Location::Outside, d};
  return {Location::NearBoundary, d};
}

JordanCurve normalize(const JordanCurve& curve) {
  return curve.signed_area() < 0.0 ? curve.reversed() : curve;
}

JordanCurve refine(const JordanCurve& curve, double max_spacing) {
  if (!(max_spacing > 0.0)) throw Error(ErrorKind::ConfigError, "max_spacing must be positive");
  const auto& in = curve.samples();
  std::vector<CurveSample> out;
  out.reserve(in.size());
  for (std::size_t k = 0; k + 1 < in.size(); ++k) {
    out.push_back(in[k]);
    // Bisect the parameter interval until every sub-chord is short enough.
    std::vector<CurveSample> stack{in[k + 1]};
    CurveSample a = in[k];
    while (!stack.empty()) {
      const CurveSample b = stack.back();
      if (std::abs(b.p - a.p) <= max_spacing || b.t - a.t < 1e-14) {
        if (stack.size() > 1) out.push_back(b);
        a = b;
        stack.pop_back();
        continue;
      }
      const double tm = 0.5 * (a.t + b.t);
      cplx pm = curve.has_parametrization() ? curve.point_at(tm) : 0.5 * (a.p + b.p);
      stack.push_back({tm, pm});
    }
  }
  out.push_back(in.back());
  return curve.with_samples(std::move(out));
}

// ---------------------------------------------------------------------------
// Rounded polygons

namespace {

struct Piece {
  bool arc = false;
  cplx a, b;             // segment endpoints
  cplx center;           // arc
  double radius = 0.0;
  double angle0 = 0.0;   // arc start angle
  double sweep = 0.0;    // signed sweep
  double length = 0.0;

  cplx at(double s) const {  // s in [0, length]
    if (!arc) return length > 0.0 ? a + (s / length) * (b - a) : a;
    const double ang = angle0 + (sweep >= 0 ? 1.0 : -1.0) * s / radius;
    return center + radius * cplx(std::cos(ang), std::sin(ang));
  }
  cplx tangent(double s) const {  // unit speed
    if (!arc) return length > 0.0 ? (b - a) / length : cplx(1.0, 0.0);
    const double dir = sweep >= 0 ? 1.0 : -1.0;
    const double ang = angle0 + dir * s / radius;
    return dir * cplx(-std::sin(ang), std::cos(ang));
  }
};

double polygon_area(const std::vector<cplx>& v) {
  double a = 0.0;
  for (std::size_t k = 0; k < v.size(); ++k) a += cross(v[k], v[(k + 1) % v.size()]);
  return 0.5 * a;
}

}  // namespace

JordanCurve rounded_polygon(const std::vector<cplx>& vertices_in, double r, double density) {
  const std::size_t n = vertices_in.size();
  if (n < 3) throw Error(ErrorKind::GeometryError, "polygon needs at least 3 vertices");
  if (!(r > 0.0)) throw Error(ErrorKind::GeometryError, "fillet radius must be positive");
  if (!(density > 0.0)) throw Error(ErrorKind::ConfigError, "density must be positive");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 2; j < n; ++j) {
      if (i == 0 && j == n - 1) continue;
      if (segments_intersect(vertices_in[i], vertices_in[i + 1], vertices_in[j],
                             vertices_in[(j + 1) % n]))
        throw Error(ErrorKind::GeometryError, "polygon self-intersects");
    }
  std::vector<cplx> v = vertices_in;
  const double area = polygon_area(v);
  if (area == 0.0) throw Error(ErrorKind::GeometryError, "degenerate polygon");
  if (area < 0.0) std::reverse(v.begin(), v.end());

  double shortest = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < n; ++k) shortest = std::min(shortest, std::abs(v[(k + 1) % n] - v[k]));
  if (!(r < 0.5 * shortest))
    throw Error(ErrorKind::GeometryError, "fillet radius must be below half the shortest edge");

  // Outward normal of edge k (from v[k] to v[k+1]) for a counterclockwise polygon.
  std::vector<cplx> dir(n), normal(n);
  for (std::size_t k = 0; k < n; ++k) {
    dir[k] = (v[(k + 1) % n] - v[k]) / std::abs(v[(k + 1) % n] - v[k]);
    normal[k] = {dir[k].imag(), -dir[k].real()};
  }

  // At vertex k: where the offset edge k-1 ends and offset edge k starts, plus the fillet.
  std::vector<cplx> edge_end(n), edge_start(n);
  std::vector<Piece> fillets(n);
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t prev = (k + n - 1) % n;
    const cplx nin = normal[prev], nout = normal[k];
    const double turn = cross(dir[prev], dir[k]);
    const double ang_in = std::arg(nin), ang_out = std::arg(nout);
    Piece arc;
    arc.arc = true;
    arc.radius = r;
    if (turn >= 0.0) {
      // Convex: arc about the vertex itself from the incoming to the outgoing normal.
      arc.center = v[k];
      edge_end[k] = v[k] + r * nin;
      edge_start[k] = v[k] + r * nout;
      double sweep = ang_out - ang_in;
      while (sweep < 0.0) sweep += kTwoPi;
      while (sweep >= kTwoPi) sweep -= kTwoPi;
      arc.angle0 = ang_in;
      arc.sweep = sweep;
    } else {
      // Reflex: circle tangent to both offset lines on the far side of the corner.
      const cplx c = v[k] + 2.0 * r * (nin + nout) / (1.0 + dot(nin, nout));
      arc.center = c;
      edge_end[k] = c - r * nin;
      edge_start[k] = c - r * nout;
      double sweep = std::arg(-nout) - std::arg(-nin);
      while (sweep > 0.0) sweep -= kTwoPi;
      while (sweep <= -kTwoPi) sweep += kTwoPi;
      arc.angle0 = std::arg(-nin);
      arc.sweep = sweep;
    }
    arc.length = r * std::abs(arc.sweep);
    fillets[k] = arc;
  }

  std::vector<Piece> pieces;
  for (std::size_t k = 0; k < n; ++k) {
    Piece seg;
    seg.a = edge_start[k];
    seg.b = edge_end[(k + 1) % n];
    if (dot(seg.b - seg.a, dir[k]) <= 0.0)
      throw Error(ErrorKind::GeometryError, "fillet radius too large for the corner angles");
    seg.length = std::abs(seg.b - seg.a);
    pieces.push_back(seg);
    if (fillets[(k + 1) % n].length > 0.0) pieces.push_back(fillets[(k + 1) % n]);
  }

  std::vector<double> start(pieces.size() + 1, 0.0);
  for (std::size_t k = 0; k < pieces.size(); ++k) start[k + 1] = start[k] + pieces[k].length;
  const double total = start.back();

  auto locate = [pieces, start, total](double t) -> std::pair<std::size_t, double> {
    const double s = (t - std::floor(t)) * total;
    std::size_t k = static_cast<std::size_t>(std::upper_bound(start.begin(), start.end(), s) - start.begin());
    k = std::clamp<std::size_t>(k, 1, pieces.size()) - 1;
    return {k, std::min(s - start[k], pieces[k].length)};
  };
  Parametrization param;
  param.point = [pieces, locate](double t) {
    const auto [k, s] = locate(t);
    return pieces[k].at(s);
  };
  param.tangent = [pieces, locate, total](double t) {
    const auto [k, s] = locate(t);
    return total * pieces[k].tangent(s);
  };
  const int count = std::max(64, static_cast<int>(std::ceil(total * density)));
  JordanCurve curve = JordanCurve::parametric(std::move(param), count);
  if (!curve.is_simple()) throw Error(ErrorKind::GeometryError, "rounded polygon is not simple");
  return curve;
}

}  // namespace lemni
