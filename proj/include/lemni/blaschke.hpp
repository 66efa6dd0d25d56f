#pragma once

#include <vector>

#include "lemni/expr.hpp"
#include "lemni/locator.hpp"

namespace lemni {

/// λ · ∏ (z − a) / (1 − conj(a) z), all |a| < 1, |λ| = 1.
class BlaschkeProduct {
 public:
  BlaschkeProduct() = default;

  /// Throws InvalidZero when some |a| >= 1, InvalidConstant unless |λ| = 1
  /// within 1e-12.
  static BlaschkeProduct build(std::vector<cplx> zeros, cplx lambda = 1.0);

  const std::vector<cplx>& zeros() const { return zeros_; }
  cplx unimodular_constant() const { return lambda_; }
  int degree() const { return static_cast<int>(zeros_.size()); }

  cplx operator()(cplx z) const;
  cplx derivative(cplx z) const;

  Expr to_expr() const;

 private:
  std::vector<cplx> zeros_;
  cplx lambda_{1.0, 0.0};
};

/// max over n equally spaced boundary points of | |B(e^{iθ})| − 1 |.
double verify_unimodular(const BlaschkeProduct& b, int n_samples);

/// f = λ A / B on the unit disk. λ is kept separate from A.
struct RatioModel {
  BlaschkeProduct numerator;    // A, λ = 1
  BlaschkeProduct denominator;  // B, λ = 1
  cplx lambda{1.0, 0.0};
  cplx reference_point{0.0, 0.0};
  double max_model_error = 0.0;

  ComplexValue operator()(cplx z) const;
};

struct ModelConfig {
  double model_band = 1e-6;
  int boundary_samples = 256;
  int grid = 64;  // polar grid is grid × grid
  LocatorConfig locator;
};

/// Zeros and poles of f in the unit disk with a constant fixed at one point,
/// then checked on a polar grid (chordal distance). Throws
/// NotBoundaryUnimodular when |f| is not 1 on the unit circle.
RatioModel fit_ratio_model(const FunctionDef& f, const ModelConfig& cfg = {});

/// λ A / B as an expression.
Expr ratio_expr(const std::vector<cplx>& zeros, const std::vector<cplx>& poles, cplx lambda = 1.0);

}  // namespace lemni
