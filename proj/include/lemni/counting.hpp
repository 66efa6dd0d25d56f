#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lemni/detail/adaptive_winding.hpp"
#include "lemni/expr.hpp"
#include "lemni/geometry.hpp"
#include "lemni/locator.hpp"

namespace lemni {

struct CountConfig {
  double image_band = -1.0;     // < 0: 1e-6 · diameter of the image samples
  double boundary_band = -1.0;  // < 0: S.default_band()
  int max_rounds = 20;          // bisection rounds per segment of S
  LocatorConfig locator;

  void validate() const;
};

enum class CountMethod { Winding, Subdivision };

std::string_view to_string(CountMethod m);

struct PreimageCountReport {
  ComplexValue w;
  int count = 0;
  CountMethod method = CountMethod::Winding;
  /// Minimum chordal distance from the sampled image f(S) to w.
  double min_image_distance = 0.0;
  int refinement_depth = 0;
  /// Set when this w could not be counted; `count` is then meaningless.
  std::optional<ErrorKind> error;
  std::string message;

  bool ok() const { return !error; }
};

/// Samples of f along S, pre-refined so the image polyline follows f(S).
/// Shared by every w counted against the same (f, S).
class CurveImage {
 public:
  CurveImage(const FunctionDef& f, const JordanCurve& s, bool parallel = true);

  const std::vector<detail::ImageNode>& nodes() const { return nodes_; }
  double diameter() const { return diameter_; }
  /// Distance from w to the image polyline.
  double distance(cplx w) const;

  detail::WindingStats winding(cplx w, double band, int max_rounds) const;

 private:
  const FunctionDef* f_;
  const JordanCurve* s_;
  std::vector<detail::ImageNode> nodes_;
  double diameter_ = 0.0;
};

/// One (f, S) pair prepared for repeated counting: image samples plus the
/// pole count inside S.
class PreimageCounter {
 public:
  /// Keeps references to f and s; both must outlive the counter.
  PreimageCounter(const FunctionDef& f, const JordanCurve& s, const CountConfig& cfg = {}, bool parallel = true);

  int poles() const { return poles_; }
  const CurveImage& image() const { return image_; }
  double image_band() const;

  /// Throws on failure.
  PreimageCountReport count(const ComplexValue& w) const;
  /// Records failures in the report instead of throwing.
  PreimageCountReport try_count(const ComplexValue& w) const;

 private:
  CountConfig cfg_;
  CurveImage image_;
  int poles_ = 0;
};

/// wind(f ∘ S, w): zeros of f - w minus poles of f inside S.
int image_winding(const FunctionDef& f, const JordanCurve& s, cplx w, const CountConfig& cfg = {});

/// Total pole order of f inside S, from the locator.
int count_poles_in(const FunctionDef& f, const JordanCurve& s, const CountConfig& cfg = {});

/// N_f(w). Errors propagate as exceptions.
PreimageCountReport count_preimages(const FunctionDef& f, const JordanCurve& s, const ComplexValue& w,
                                    const CountConfig& cfg = {});

/// N_f(w) as the total zero order of f − w strictly inside S, found by the
/// locator. Zeros closer to S than `exclusion` (< 0: 1e-6 · diam S) are taken
/// to lie on S and are not counted. Works for w on f(S).
PreimageCountReport count_by_subdivision(const FunctionDef& f, const JordanCurve& s, cplx w,
                                         const CountConfig& cfg = {}, double exclusion = -1.0);

/// Batch form sharing the image samples and the pole count. Errors for a
/// single w are recorded in its report; failures common to all w throw.
std::vector<PreimageCountReport> count_on_grid(const FunctionDef& f, const JordanCurve& s,
                                               const std::vector<ComplexValue>& ws, const CountConfig& cfg = {});
/// Same result computed on the calling thread only.
std::vector<PreimageCountReport> count_on_grid_serial(const FunctionDef& f, const JordanCurve& s,
                                                      const std::vector<ComplexValue>& ws,
                                                      const CountConfig& cfg = {});

}  // namespace lemni
