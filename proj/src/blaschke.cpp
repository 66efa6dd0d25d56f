#include "lemni/blaschke.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace lemni {

BlaschkeProduct BlaschkeProduct::build(std::vector<cplx> zeros, cplx lambda) {
  for (const cplx a : zeros)
    if (!is_finite(a) || !(std::abs(a) < 1.0))
      throw Error(ErrorKind::InvalidZero, "Blaschke zeros must lie strictly inside the unit disk");
  if (!is_finite(lambda) || std::abs(std::abs(lambda) - 1.0) > 1e-12)
    throw Error(ErrorKind::InvalidConstant, "unimodular constant must have modulus 1");
  BlaschkeProduct b;
  b.zeros_ = std::move(zeros);
  b.lambda_ = lambda;
  return b;
}

cplx BlaschkeProduct::operator()(cplx z) const {
  cplx v = lambda_;
  for (const cplx a : zeros_) v *= (z - a) / (1.0 - std::conj(a) * z);
  return v;
}

cplx BlaschkeProduct::derivative(cplx z) const {
  // Product rule over the factors; each factor has derivative (1 - |a|²)/(1 - conj(a) z)².
  cplx total = 0.0;
  for (std::size_t j = 0; j < zeros_.size(); ++j) {
    cplx term = lambda_;
    for (std::size_t k = 0; k < zeros_.size(); ++k) {
      const cplx a = zeros_[k];
      const cplx den = 1.0 - std::conj(a) * z;
      term *= k == j ? (1.0 - std::norm(a)) / (den * den) : (z - a) / den;
    }
    total += term;
  }
  return total;
}

namespace {

Expr factor(cplx a) {
  const Expr z = Expr::variable();
  return (z - Expr::constant(a)) / (Expr::constant(1.0) - Expr::constant(std::conj(a)) * z);
}

}  // namespace

Expr BlaschkeProduct::to_expr() const {
  Expr e = Expr::constant(lambda_);
  for (const cplx a : zeros_) e = e * factor(a);
  return e;
}

Expr ratio_expr(const std::vector<cplx>& zeros, const std::vector<cplx>& poles, cplx lambda) {
  Expr e = Expr::constant(lambda);
  for (const cplx a : zeros) e = e * factor(a);
  for (const cplx b : poles) e = e / factor(b);
  return e;
}

double verify_unimodular(const BlaschkeProduct& b, int n_samples) {
  if (n_samples <= 0) throw Error(ErrorKind::ConfigError, "need a positive sample count");
  double worst = 0.0;
  for (int k = 0; k < n_samples; ++k) {
    const double th = 2.0 * std::numbers::pi * k / n_samples;
    worst = std::max(worst, std::abs(std::abs(b(std::polar(1.0, th))) - 1.0));
  }
  return worst;
}

ComplexValue RatioModel::operator()(cplx z) const {
  const cplx den = denominator(z);
  const cplx num = lambda * numerator(z);
  if (den == 0.0) return ComplexValue::infinity();
  return num / den;
}

RatioModel fit_ratio_model(const FunctionDef& f, const ModelConfig& cfg) {
  if (!(cfg.model_band > 0.0) || cfg.boundary_samples < 8 || cfg.grid < 2)
    throw Error(ErrorKind::ConfigError, "model settings out of range");
  for (int k = 0; k < cfg.boundary_samples; ++k) {
    const double th = 2.0 * std::numbers::pi * k / cfg.boundary_samples;
    const cplx v = f.value(std::polar(1.0, th));
    if (!is_finite(v) || std::abs(std::abs(v) - 1.0) > cfg.model_band)
      throw Error(ErrorKind::NotBoundaryUnimodular, "|f| differs from 1 on the unit circle");
  }

  const Rect box{cplx(-1.0, -1.0), cplx(1.0, 1.0)};
  std::vector<cplx> zeros, poles;
  for (const auto& r : isolate_around(f, box.inflated(0.0123), cfg.locator)) {
    if (!(std::abs(r.location) < 1.0)) continue;
    auto& dst = r.kind == PointKind::Zero ? zeros : poles;
    dst.insert(dst.end(), r.order, r.location);
  }

  RatioModel m;
  m.numerator = BlaschkeProduct::build(zeros);
  m.denominator = BlaschkeProduct::build(poles);

  // Reference point: 0 unless it is (close to) a zero or pole; then walk
  // outward along a fixed ray.
  auto admissible = [&](cplx z) {
    for (const cplx a : zeros)
      if (std::abs(z - a) < 1e-3) return false;
    for (const cplx b : poles)
      if (std::abs(z - b) < 1e-3) return false;
    return true;
  };
  cplx z0 = 0.0;
  for (int k = 1; !admissible(z0); ++k) z0 = std::polar(0.05 * k, 0.7 * k);
  const cplx fz0 = f.value(z0);
  cplx lambda = fz0 * m.denominator(z0) / m.numerator(z0);
  lambda /= std::abs(lambda);
  m.lambda = lambda;
  m.reference_point = z0;

  double worst = 0.0;
  for (int j = 1; j <= cfg.grid; ++j) {
    const double r = static_cast<double>(j) / cfg.grid;
    for (int k = 0; k < cfg.grid; ++k) {
      const cplx z = std::polar(r, 2.0 * std::numbers::pi * k / cfg.grid);
      worst = std::max(worst, chordal_distance(f.eval(z), m(z)));
    }
  }
  m.max_model_error = worst;
  return m;
}

}  // namespace lemni
