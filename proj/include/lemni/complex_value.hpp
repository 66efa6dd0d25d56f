#pragma once

#include <cmath>
#include <complex>

namespace lemni {

using cplx = std::complex<double>;

/// A point of the Riemann sphere: either a finite complex number or the single
/// point at infinity.
class ComplexValue {
 public:
  ComplexValue() = default;
  ComplexValue(cplx z);  // NOLINT: implicit from finite values is intended
  ComplexValue(double re, double im = 0.0) : ComplexValue(cplx(re, im)) {}

  static ComplexValue infinity() {
    ComplexValue v;
    v.infinite_ = true;
    return v;
  }

  bool is_infinite() const noexcept { return infinite_; }
  bool is_finite() const noexcept { return !infinite_; }

  /// Throws DomainError for the point at infinity.
  cplx value() const;

  double re() const { return value().real(); }
  double im() const { return value().imag(); }

  friend bool operator==(const ComplexValue& a, const ComplexValue& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
    return a.z_ == b.z_;
  }

 private:
  cplx z_{0.0, 0.0};
  bool infinite_ = false;
};

/// Chordal distance on the Riemann sphere (diameter 2).
double chordal_distance(const ComplexValue& a, const ComplexValue& b);

inline bool is_finite(cplx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

}  // namespace lemni
