#pragma once

#include <vector>

#include "lemni/expr.hpp"
#include "lemni/geometry.hpp"
#include "lemni/locator.hpp"

namespace lemni {

struct TraceConfig {
  double trace_tol = -1.0;     // |f(z) − γ(θ)| bound, < 0: 1e-9 · diam Γ
  double closure_tol = -1.0;   // < 0: 1e-6 · diam box
  double initial_step = 1e-3;  // Δθ, in units of Γ's parameter
  double max_step = 0.05;
  double min_step = 1e-13;
  double spatial_step = -1.0;  // max |Δz|, < 0: 0.02 · diam box
  double stub_radius = -1.0;   // circle around branch points, < 0: 1e-3 · diam box
  double branch_tol = -1.0;    // critical values this close to Γ branch, < 0: 1e-6 · diam Γ
  std::size_t max_points = 2000000;
  LocatorConfig locator;
};

struct BranchPoint {
  cplx location;
  int order = 1;  // multiplicity m of the critical point
  int incident_edges = 0;
};

/// A piece of f⁻¹(Γ) between branch points (or a loop / open arc without
/// any). `from` / `to` index the owning component's branch_points, -1 for
/// a free end or no node.
struct TraceEdge {
  std::vector<cplx> points;
  std::vector<double> thetas;
  int from = -1;
  int to = -1;
  bool closed_loop = false;
};

struct PathComponent {
  /// All edge points, edge after edge.
  std::vector<cplx> points;
  /// Unwrapped Γ parameter of every point (branch points carry the parameter
  /// of their critical value).
  std::vector<double> parameter_track;
  bool closed = false;  // no free ends
  std::vector<BranchPoint> branch_points;
  std::vector<TraceEdge> edges;
};

/// Solutions of f(z) = γ(0) in box.
std::vector<cplx> seed_points(const FunctionDef& f, const JordanCurve& gamma, const Rect& box,
                              const TraceConfig& cfg = {});

/// Components of f⁻¹(Γ) ∩ box by predictor–corrector continuation in Γ's
/// parameter. Critical points whose value lies on Γ become branch points;
/// edges leave them in the directions found on a small circle around each.
/// Throws StepCollapse when continuation stalls away from branch points.
std::vector<PathComponent> trace_components(const FunctionDef& f, const JordanCurve& gamma, const Rect& box,
                                            const TraceConfig& cfg = {});

}  // namespace lemni
