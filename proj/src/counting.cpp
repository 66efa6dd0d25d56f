#include "lemni/counting.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace lemni {

void CountConfig::validate() const {
  if (image_band == 0.0 || boundary_band == 0.0 || max_rounds <= 0)
    throw Error(ErrorKind::ConfigError, "counting tolerances must be positive");
  locator.validate();
}

std::string_view to_string(CountMethod m) { return m == CountMethod::Winding ? "winding" : "subdivision"; }

static double image_band(const CurveImage& img, const CountConfig& cfg) {
  return cfg.image_band > 0.0 ? cfg.image_band : 1e-6 * img.diameter();
}

namespace {

constexpr double kFlatness = 0.1;
constexpr int kPreDepth = 12;

// Bisects [a, b] while the image midpoint strays from the chord midpoint.
void refine_segment(const FunctionDef& f, const JordanCurve& s, const detail::ImageNode& a,
                    const detail::ImageNode& b, std::vector<detail::ImageNode>& out) {
  struct Item {
    detail::ImageNode b;
    int depth;
  };
  std::vector<Item> stack{{b, 0}};
  detail::ImageNode left = a;
  while (!stack.empty()) {
    const Item it = stack.back();
    const double tm = 0.5 * (left.t + it.b.t);
    bool accept = it.depth >= kPreDepth;
    detail::ImageNode mid{};
    if (!accept) {
      const cplx zm = s.point_at(tm);
      mid = {tm, zm, f.value(zm)};
      if (!is_finite(mid.fz)) throw Error(ErrorKind::PoleOnCurve, "function is infinite on S");
      const double dev = std::abs(mid.fz - 0.5 * (left.fz + it.b.fz));
      accept = dev <= kFlatness * std::abs(it.b.fz - left.fz);
    }
    if (accept) {
      out.push_back(it.b);
      left = it.b;
      stack.pop_back();
    } else {
      stack.back().depth = it.depth + 1;
      stack.push_back({mid, it.depth + 1});
    }
  }
}

}  // namespace

CurveImage::CurveImage(const FunctionDef& f, const JordanCurve& s, bool parallel) : f_(&f), s_(&s) {
  const auto& samples = s.samples();
  const std::size_t n = samples.size();
  std::vector<detail::ImageNode> base(n);
  bool pole = false;
#pragma omp parallel for schedule(static) if (parallel)
  for (std::size_t k = 0; k < n; ++k) {
    base[k] = {samples[k].t, samples[k].p, f.value(samples[k].p)};
    if (!is_finite(base[k].fz)) {
#pragma omp atomic write
      pole = true;
    }
  }
  if (pole) throw Error(ErrorKind::PoleOnCurve, "function is infinite on S");

  std::vector<std::vector<detail::ImageNode>> parts(n - 1);
  std::vector<char> failed(n - 1, 0);
#pragma omp parallel for schedule(dynamic, 16) if (parallel)
  for (std::size_t k = 0; k < n - 1; ++k) {
    try {
      refine_segment(f, s, base[k], base[k + 1], parts[k]);
    } catch (const Error&) {
      failed[k] = 1;
    }
  }
  if (std::find(failed.begin(), failed.end(), 1) != failed.end())
    throw Error(ErrorKind::PoleOnCurve, "function is infinite on S");

  nodes_.reserve(2 * n);
  nodes_.push_back(base.front());
  for (auto& p : parts) nodes_.insert(nodes_.end(), p.begin(), p.end());

  double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin, ymin = xmin, ymax = -xmin;
  for (const auto& nd : nodes_) {
    xmin = std::min(xmin, nd.fz.real());
    xmax = std::max(xmax, nd.fz.real());
    ymin = std::min(ymin, nd.fz.imag());
    ymax = std::max(ymax, nd.fz.imag());
  }
  diameter_ = std::hypot(xmax - xmin, ymax - ymin);
}

double CurveImage::distance(cplx w) const {
  double d = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k + 1 < nodes_.size(); ++k)
    d = std::min(d, point_segment_distance(w, nodes_[k].fz, nodes_[k + 1].fz));
  return d;
}

detail::WindingStats CurveImage::winding(cplx w, double band, int max_rounds) const {
  const FunctionDef& f = *f_;
  const JordanCurve& s = *s_;
  return detail::adaptive_winding(
      nodes_, [&](double t) { return s.point_at(t); }, [&](cplx z) { return f.value(z); }, w, band,
      max_rounds);
}

namespace {

int poles_inside(const FunctionDef& f, const JordanCurve& s, const CountConfig& cfg) {
  const double band = cfg.boundary_band > 0.0 ? cfg.boundary_band : s.default_band();
  const Rect box = s.bounding_box();
  const double margin = 0.0217 * box.diagonal();
  int total = 0;
  for (const auto& r : isolate_around(f, box.inflated(margin), cfg.locator)) {
    if (r.kind != PointKind::Pole) continue;
    const double d = s.distance(r.location);
    if (d <= band) throw Error(ErrorKind::PoleOnCurve, "pole of f within the boundary band of S");
    if (winding_number(s, r.location, band) == 1) total += r.order;
  }
  return total;
}

PreimageCountReport finite_report(const CurveImage& img, cplx w, int poles, const CountConfig& cfg) {
  PreimageCountReport rep;
  rep.w = w;
  rep.method = CountMethod::Winding;
  const auto st = img.winding(w, image_band(img, cfg), cfg.max_rounds);
  rep.count = st.winding + poles;
  rep.min_image_distance = st.min_chordal;
  rep.refinement_depth = st.max_depth;
  if (rep.count < 0)
    throw Error(ErrorKind::InternalInconsistency, "negative preimage count (winding " +
                                                      std::to_string(st.winding) + ", poles " +
                                                      std::to_string(poles) + ")");
  return rep;
}

PreimageCountReport infinite_report(const CurveImage& img, int poles) {
  PreimageCountReport rep;
  rep.w = ComplexValue::infinity();
  rep.method = CountMethod::Subdivision;
  rep.count = poles;
  double m = std::numeric_limits<double>::infinity();
  for (const auto& nd : img.nodes()) m = std::min(m, 2.0 / std::sqrt(1.0 + std::norm(nd.fz)));
  rep.min_image_distance = m;
  return rep;
}

}  // namespace

int image_winding(const FunctionDef& f, const JordanCurve& s, cplx w, const CountConfig& cfg) {
  cfg.validate();
  if (!is_finite(w)) throw Error(ErrorKind::DomainError, "image winding needs a finite w");
  const CurveImage img(f, s);
  return img.winding(w, image_band(img, cfg), cfg.max_rounds).winding;
}

int count_poles_in(const FunctionDef& f, const JordanCurve& s, const CountConfig& cfg) {
  cfg.validate();
  return poles_inside(f, s, cfg);
}

PreimageCounter::PreimageCounter(const FunctionDef& f, const JordanCurve& s, const CountConfig& cfg,
                                 bool parallel)
    : cfg_((cfg.validate(), cfg)), image_(f, s, parallel), poles_(poles_inside(f, s, cfg)) {}

double PreimageCounter::image_band() const { return lemni::image_band(image_, cfg_); }

PreimageCountReport PreimageCounter::count(const ComplexValue& w) const {
  return w.is_infinite() ? infinite_report(image_, poles_) : finite_report(image_, w.value(), poles_, cfg_);
}

PreimageCountReport PreimageCounter::try_count(const ComplexValue& w) const {
  try {
    return count(w);
  } catch (const Error& e) {
    PreimageCountReport rep;
    rep.w = w;
    rep.error = e.kind();
    rep.message = e.what();
    return rep;
  }
}

PreimageCountReport count_preimages(const FunctionDef& f, const JordanCurve& s, const ComplexValue& w,
                                    const CountConfig& cfg) {
  return PreimageCounter(f, s, cfg, false).count(w);
}

PreimageCountReport count_by_subdivision(const FunctionDef& f, const JordanCurve& s, cplx w,
                                         const CountConfig& cfg, double exclusion) {
  cfg.validate();
  if (exclusion < 0.0) exclusion = 1e-6 * s.diameter();
  const double band = cfg.boundary_band > 0.0 ? cfg.boundary_band : s.default_band();
  const Rect box = s.bounding_box();
  PreimageCountReport rep;
  rep.w = w;
  rep.method = CountMethod::Subdivision;
  for (const auto& r : isolate_around(f.shifted(w), box.inflated(0.0217 * box.diagonal()), cfg.locator)) {
    if (r.kind != PointKind::Zero) continue;
    const double d = s.distance(r.location);
    if (d <= std::max(exclusion, band)) continue;
    if (winding_number(s, r.location, band) == 1) rep.count += r.order;
  }
  double m = std::numeric_limits<double>::infinity();
  for (const auto& sm : s.samples()) m = std::min(m, chordal_distance(f.eval(sm.p), w));
  rep.min_image_distance = m;
  return rep;
}

namespace {

std::vector<PreimageCountReport> grid(const FunctionDef& f, const JordanCurve& s,
                                      const std::vector<ComplexValue>& ws, const CountConfig& cfg,
                                      bool parallel) {
  std::vector<PreimageCountReport> out(ws.size());
  if (ws.empty()) return out;
  const PreimageCounter counter(f, s, cfg, parallel);
  const long n = static_cast<long>(ws.size());
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (long k = 0; k < n; ++k) out[k] = counter.try_count(ws[k]);
  return out;
}

}  // namespace

std::vector<PreimageCountReport> count_on_grid(const FunctionDef& f, const JordanCurve& s,
                                               const std::vector<ComplexValue>& ws, const CountConfig& cfg) {
  return grid(f, s, ws, cfg, true);
}

std::vector<PreimageCountReport> count_on_grid_serial(const FunctionDef& f, const JordanCurve& s,
                                                      const std::vector<ComplexValue>& ws,
                                                      const CountConfig& cfg) {
  return grid(f, s, ws, cfg, false);
}

}  // namespace lemni
