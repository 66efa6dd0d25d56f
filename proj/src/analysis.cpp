#include "lemni/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

namespace lemni {

void SamplePlan::validate() const {
  if (k_inner < 3 || k_outer < 3 || k_boundary < 3)
    throw Error(ErrorKind::ConfigError, "every sample count must be at least 3");
  if (!(slide_step > 0.0) || max_slides < 0) throw Error(ErrorKind::ConfigError, "bad slide settings");
}

std::string_view to_string(Face f) {
  switch (f) {
    case Face::Inner:
      return "inner";
    case Face::Outer:
      return "outer";
    case Face::Boundary:
      return "boundary";
  }
  return "?";
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::PseudoLemniscate:
      return "PseudoLemniscate";
    case Verdict::NotPseudoLemniscate:
      return "NotPseudoLemniscate";
    case Verdict::Indeterminate:
      return "Indeterminate";
  }
  return "?";
}

std::string_view to_string(NonJordanKind k) {
  switch (k) {
    case NonJordanKind::ImageNotJordan:
      return "ImageNotJordan";
    case NonJordanKind::CriticalPointOnCurve:
      return "CriticalPointOnCurve";
    case NonJordanKind::DisjunctionUnresolved:
      return "DisjunctionUnresolved";
    case NonJordanKind::Inconclusive:
      return "Inconclusive";
  }
  return "?";
}

namespace {

// Uniform double in [0, 1) from 53 random bits; fixed across platforms.
double uniform(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1p-53; }

constexpr int kRejectBudget = 100000;
constexpr double kProbe = 1e-3;  // Γ-parameter offset of fold probes

}  // namespace

FaceSamples sample_faces(const JordanCurve& gamma_in, const SamplePlan& plan) {
  plan.validate();
  const JordanCurve gamma = normalize(gamma_in);
  std::mt19937_64 rng(plan.seed);
  const Rect box = gamma.bounding_box();
  const double diam = box.diagonal();
  const double margin = 1e-3 * diam;
  FaceSamples out;

  auto draw = [&](const Rect& r) {
    return cplx(r.lo.real() + uniform(rng) * r.width(), r.lo.imag() + uniform(rng) * r.height());
  };
  for (int tries = 0; static_cast<int>(out.inner.size()) < plan.k_inner; ++tries) {
    if (tries > kRejectBudget) throw Error(ErrorKind::GeometryError, "bounded face too thin to sample");
    const cplx w = draw(box);
    const auto loc = locate_point(gamma, w);
    if (loc.where == Location::Inside && loc.distance > margin) out.inner.push_back(w);
  }
  const Rect annulus = box.inflated(0.5 * diam);
  for (int tries = 0; static_cast<int>(out.outer.size()) < plan.k_outer - 1; ++tries) {
    if (tries > kRejectBudget) throw Error(ErrorKind::GeometryError, "could not sample the outer face");
    const cplx w = draw(annulus);
    const auto loc = locate_point(gamma, w);
    if (loc.where == Location::Outside && loc.distance > margin) out.outer.push_back(w);
  }
  out.outer.push_back(box.center() + cplx(3.0 * diam, 0.0));
  out.outer.push_back(ComplexValue::infinity());
  for (int k = 0; k < plan.k_boundary; ++k) {
    const double t = uniform(rng);
    out.boundary_t.push_back(t);
    out.boundary.push_back(gamma.point_at(t));
  }
  return out;
}

namespace {

Item1Check item1_check(const FunctionDef& f, const JordanCurve& s, const JordanCurve& gamma,
                       const ClassifyConfig& cfg) {
  Item1Check c;
  const auto& samples = s.samples();
  const long n = static_cast<long>(samples.size());
  std::vector<double> dist(samples.size());
#pragma omp parallel for schedule(static) if (cfg.parallel)
  for (long k = 0; k < n; ++k) {
    const cplx v = f.value(samples[k].p);
    dist[k] = is_finite(v) ? gamma.distance(v) : std::numeric_limits<double>::infinity();
  }
  c.max_dist_f_S_to_Gamma = *std::max_element(dist.begin(), dist.end());
  const double band = cfg.critical_band > 0.0 ? cfg.critical_band : 1e-6 * s.diameter();
  try {
    c.critical_points_on_S = critical_points_on_curve(f, s, band, cfg.count.locator);
  } catch (const Error& e) {
    c.error = e.what();
    return c;
  }
  c.holds = c.max_dist_f_S_to_Gamma <= cfg.item1_tol && c.critical_points_on_S.empty();
  return c;
}

// Boundary sample: slide along Γ until w leaves the admissibility band of
// f(S). If f(S) covers Γ (as for every pseudo-lemniscate with Γ = f(S)),
// no slide helps and the count falls back to the locator on f − w.
SampleRecord boundary_sample(const FunctionDef& f, const JordanCurve& s, const JordanCurve& gamma,
                             const PreimageCounter& counter, double t0, const SamplePlan& plan,
                             const ClassifyConfig& cfg) {
  SampleRecord rec;
  rec.face = Face::Boundary;
  const double band = counter.image_band();
  for (int k = 0; k <= plan.max_slides; ++k) {
    const double t = t0 + k * plan.slide_step - std::floor(t0 + k * plan.slide_step);
    const cplx w = gamma.point_at(t);
    if (counter.image().distance(w) <= band) continue;
    auto rep = counter.try_count(w);
    if (!rep.ok() && rep.error == ErrorKind::TooCloseToImage) continue;
    rec.report = std::move(rep);
    rec.gamma_t = t;
    rec.slides = k;
    return rec;
  }
  rec.gamma_t = t0;
  rec.slides = plan.max_slides;
  const cplx w = gamma.point_at(t0);
  try {
    rec.report = count_by_subdivision(f, s, w, cfg.count);
  } catch (const Error& e) {
    rec.report.w = w;
    rec.report.method = CountMethod::Subdivision;
    rec.report.error = e.kind();
    rec.report.message = e.what();
  }
  return rec;
}

}  // namespace

ClassificationReport classify(const FunctionDef& f, const JordanCurve& s_in, const JordanCurve& gamma_in,
                              const SamplePlan& plan, const ClassifyConfig& cfg) {
  plan.validate();
  const JordanCurve s = normalize(s_in);
  const JordanCurve gamma = normalize(gamma_in);
  const FaceSamples faces = sample_faces(gamma, plan);
  const PreimageCounter counter(f, s, cfg.count, cfg.parallel);

  ClassificationReport rep;
  std::vector<ComplexValue> ws = faces.inner;
  ws.insert(ws.end(), faces.outer.begin(), faces.outer.end());
  rep.samples.resize(ws.size() + faces.boundary.size());
  const long n_open = static_cast<long>(ws.size());
  const long n_bdry = static_cast<long>(faces.boundary.size());
#pragma omp parallel for schedule(dynamic) if (cfg.parallel)
  for (long k = 0; k < n_open + n_bdry; ++k) {
    if (k < n_open) {
      rep.samples[k].face = k < static_cast<long>(faces.inner.size()) ? Face::Inner : Face::Outer;
      rep.samples[k].report = counter.try_count(ws[k]);
    } else {
      rep.samples[k] = boundary_sample(f, s, gamma, counter, faces.boundary_t[k - n_open], plan, cfg);
    }
  }

  rep.item1 = item1_check(f, s, gamma, cfg);

  // A critical point c on S with f(c) on Γ folds f(S) over Γ near f(c);
  // random boundary samples can miss the fold, so probe both sides of it.
  // Probes stay put: sliding would carry the inner one out of the fold.
  std::vector<double> probes;
  for (const auto& c : rep.item1.critical_points_on_S) {
    const cplx fc = f.value(c.location);
    if (!is_finite(fc) || gamma.distance(fc) > 1e-6 * gamma.diameter()) continue;
    const double tc = gamma.nearest_parameter(fc);
    for (const double d : {-kProbe, kProbe}) probes.push_back(tc + d - std::floor(tc + d));
  }
  const std::size_t base = rep.samples.size();
  rep.samples.resize(base + probes.size());
  const long n_probe = static_cast<long>(probes.size());
  SamplePlan fixed = plan;
  fixed.max_slides = 0;
#pragma omp parallel for schedule(dynamic) if (cfg.parallel)
  for (long k = 0; k < n_probe; ++k) {
    rep.samples[base + k] = boundary_sample(f, s, gamma, counter, probes[k], fixed, cfg);
    rep.samples[base + k].targeted = true;
  }

  // Count rule from the samples.
  std::string failure;
  for (std::size_t k = 0; k < rep.samples.size() && failure.empty(); ++k)
    if (!rep.samples[k].report.ok())
      failure = std::string(to_string(rep.samples[k].face)) + " sample " + std::to_string(k) +
                " could not be counted: " + rep.samples[k].report.message;
  if (!failure.empty()) {
    rep.verdict = Verdict::Indeterminate;
    rep.reason = failure;
    return rep;
  }
  auto first_of = [&](Face face) {
    for (std::size_t k = 0; k < rep.samples.size(); ++k)
      if (rep.samples[k].face == face) return k;
    return rep.samples.size();
  };
  const std::size_t i0 = first_of(Face::Inner), o0 = first_of(Face::Outer);
  rep.n_minus = rep.samples[i0].report.count;
  rep.n_plus = rep.samples[o0].report.count;
  const int expect_boundary = std::min(rep.n_minus, rep.n_plus);
  rep.item2_holds = true;
  for (std::size_t k = 0; k < rep.samples.size() && rep.item2_holds; ++k) {
    const auto& sm = rep.samples[k];
    const int c = sm.report.count;
    if (sm.face == Face::Inner && c != rep.n_minus) {
      rep.witness_pair = {{i0, k}};
      rep.reason = "inner counts differ";
    } else if (sm.face == Face::Outer && c != rep.n_plus) {
      rep.witness_pair = {{o0, k}};
      rep.reason = "outer counts differ";
    } else if (sm.face == Face::Boundary && c != expect_boundary) {
      rep.witness_pair = {{rep.n_minus <= rep.n_plus ? i0 : o0, k}};
      rep.reason = "boundary count differs from min(n_minus, n_plus)";
    } else {
      continue;
    }
    rep.item2_holds = false;
  }

  if (!rep.item1.error.empty()) {
    rep.verdict = Verdict::Indeterminate;
    rep.reason = "direct check failed: " + rep.item1.error;
  } else if (rep.item2_holds && rep.item1.holds) {
    rep.verdict = Verdict::PseudoLemniscate;
    rep.reason = "sampled counts and direct check agree";
  } else if (!rep.item2_holds && !rep.item1.holds) {
    rep.verdict = Verdict::NotPseudoLemniscate;
  } else {
    rep.verdict = Verdict::Indeterminate;
    rep.reason = rep.item2_holds ? "sampled counts are consistent but the direct check fails"
                                 : "direct check holds but sampled counts conflict (" + rep.reason + ")";
  }
  return rep;
}

std::vector<ComplexValue> default_candidates(const FunctionDef& f, const JordanCurve& s, std::uint64_t seed,
                                             int per_side) {
  if (per_side < 2) throw Error(ErrorKind::ConfigError, "candidate grid needs at least 2 points per side");
  const CurveImage img(f, s, false);
  double xmin = INFINITY, xmax = -INFINITY, ymin = INFINITY, ymax = -INFINITY;
  for (const auto& nd : img.nodes()) {
    xmin = std::min(xmin, nd.fz.real());
    xmax = std::max(xmax, nd.fz.real());
    ymin = std::min(ymin, nd.fz.imag());
    ymax = std::max(ymax, nd.fz.imag());
  }
  std::mt19937_64 rng(seed);
  std::vector<ComplexValue> out;
  for (int j = 0; j < per_side; ++j)
    for (int i = 0; i < per_side; ++i) {
      const double u = (i + 0.25 + 0.5 * uniform(rng)) / per_side;
      const double v = (j + 0.25 + 0.5 * uniform(rng)) / per_side;
      out.emplace_back(cplx(xmin + u * (xmax - xmin), ymin + v * (ymax - ymin)));
    }
  out.push_back(ComplexValue::infinity());
  return out;
}

NonJordanVerdict non_jordan_test(const FunctionDef& f, const JordanCurve& s_in,
                                 const std::vector<ComplexValue>& candidates, const ClassifyConfig& cfg) {
  if (candidates.size() < 3) throw Error(ErrorKind::ConfigError, "need at least three candidate points");
  const JordanCurve s = normalize(s_in);
  NonJordanVerdict v;
  v.samples = cfg.parallel ? count_on_grid(f, s, candidates, cfg.count)
                           : count_on_grid_serial(f, s, candidates, cfg.count);

  std::set<int> distinct;
  for (const auto& r : v.samples) {
    if (!r.ok()) continue;
    v.counts_seen.push_back(r.count);
    if (distinct.size() < 3 && distinct.insert(r.count).second) v.witnesses.push_back(r);
  }
  std::sort(v.counts_seen.begin(), v.counts_seen.end());
  const bool three = v.witnesses.size() == 3;
  if (!three) v.witnesses.clear();

  // The critical-point branch of the disjunction is checked whatever the
  // counts say: a critical point on S settles it on its own.
  const double band = cfg.critical_band > 0.0 ? cfg.critical_band : 1e-6 * s.diameter();
  std::string crit_error;
  try {
    v.critical_points = critical_points_on_curve(f, s, band, cfg.count.locator);
  } catch (const Error& e) {
    crit_error = e.what();
  }

  if (!v.critical_points.empty()) {
    v.kind = NonJordanKind::CriticalPointOnCurve;
    v.reason = "f has a critical point on S";
  } else if (three && crit_error.empty()) {
    v.kind = NonJordanKind::ImageNotJordan;
    v.reason = "three distinct preimage counts and no critical point on S";
  } else if (three) {
    v.kind = NonJordanKind::DisjunctionUnresolved;
    v.reason = "three distinct counts but the critical-point search failed: " + crit_error;
  } else {
    v.kind = NonJordanKind::Inconclusive;
    v.reason = "fewer than three distinct counts";
    if (!crit_error.empty()) v.reason += "; critical-point search failed: " + crit_error;
  }
  return v;
}

}  // namespace lemni
