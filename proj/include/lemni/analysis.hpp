#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lemni/counting.hpp"

namespace lemni {

struct SamplePlan {
  int k_inner = 8;
  int k_outer = 8;
  int k_boundary = 8;
  std::uint64_t seed = 0;
  /// Parameter shift along Γ per admissibility retry, and the retry budget.
  double slide_step = 0.0137;
  int max_slides = 32;

  void validate() const;
};

struct FaceSamples {
  std::vector<ComplexValue> inner;
  std::vector<ComplexValue> outer;  // ends with the point at infinity
  std::vector<ComplexValue> boundary;
  std::vector<double> boundary_t;  // Γ parameters of the boundary points
};

/// Seeded points in Γ's bounded face, its unbounded face and on Γ itself.
FaceSamples sample_faces(const JordanCurve& gamma, const SamplePlan& plan);

enum class Face { Inner, Outer, Boundary };
std::string_view to_string(Face f);

struct SampleRecord {
  Face face = Face::Inner;
  PreimageCountReport report;
  double gamma_t = 0.0;  // boundary samples: final Γ parameter
  int slides = 0;        // boundary samples: admissibility retries used
  bool targeted = false;  // placed next to the image of a critical point on S
};

struct Item1Check {
  double max_dist_f_S_to_Gamma = 0.0;
  std::vector<ZeroPoleRecord> critical_points_on_S;
  bool holds = false;
  std::string error;  // non-empty when the check could not be completed
};

enum class Verdict { PseudoLemniscate, NotPseudoLemniscate, Indeterminate };
std::string_view to_string(Verdict v);

struct ClassificationReport {
  Verdict verdict = Verdict::Indeterminate;
  int n_minus = 0;
  int n_plus = 0;
  /// NotPseudoLemniscate: indices into `samples` of two conflicting counts.
  std::optional<std::pair<std::size_t, std::size_t>> witness_pair;
  std::string reason;
  bool item2_holds = false;
  Item1Check item1;
  std::vector<SampleRecord> samples;
};

struct ClassifyConfig {
  CountConfig count;
  double item1_tol = 1e-8;
  double critical_band = -1.0;  // < 0: 1e-6 · diam S
  bool parallel = true;
};

ClassificationReport classify(const FunctionDef& f, const JordanCurve& s, const JordanCurve& gamma,
                              const SamplePlan& plan, const ClassifyConfig& cfg = {});

enum class NonJordanKind { ImageNotJordan, CriticalPointOnCurve, DisjunctionUnresolved, Inconclusive };
std::string_view to_string(NonJordanKind k);

struct NonJordanVerdict {
  NonJordanKind kind = NonJordanKind::Inconclusive;
  std::vector<PreimageCountReport> witnesses;  // three distinct counts, input order
  std::vector<ZeroPoleRecord> critical_points;
  std::vector<int> counts_seen;  // sorted
  std::vector<PreimageCountReport> samples;
  std::string reason;
};

/// Seeded candidate grid over the bounding box of f(S), plus infinity.
std::vector<ComplexValue> default_candidates(const FunctionDef& f, const JordanCurve& s, std::uint64_t seed,
                                             int per_side = 6);

NonJordanVerdict non_jordan_test(const FunctionDef& f, const JordanCurve& s,
                                 const std::vector<ComplexValue>& candidates, const ClassifyConfig& cfg = {});

}  // namespace lemni
