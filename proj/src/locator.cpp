#include "lemni/locator.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "lemni/detail/adaptive_winding.hpp"

namespace lemni {

std::string_view to_string(PointKind kind) {
  switch (kind) {
    case PointKind::Zero:
      return "zero";
    case PointKind::Pole:
      return "pole";
    case PointKind::CriticalPoint:
      return "critical";
  }
  return "?";
}

void LocatorConfig::validate() const {
  if (max_depth <= 0 || newton_max_iter <= 0 || !(newton_tol > 0.0) || min_cell == 0.0)
    throw Error(ErrorKind::ConfigError, "locator settings must be positive");
}

namespace {

// Moment tolerances, dimensionless (cell coordinates scaled to half-size 1).
constexpr double kReliableTol = 1e-9;  // agreement of 1-panel and 2-panel quadrature
constexpr double kEmptyTol = 1e-7;     // zero-winding cell with |ν1..3| below this is empty
constexpr double kSingleTol = 1e-8;    // spread below this means one cluster
constexpr int kMinClusterDepth = 2;
constexpr int kSplitAttempts = 6;
constexpr std::size_t kMaxCells = 400000;

struct EdgeHit {};

struct GaussRule {
  std::vector<double> x, w;
};

GaussRule gauss_legendre(int n) {
  GaussRule g;
  g.x.resize(n);
  g.w.resize(n);
  for (int i = 0; i < n; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    g.x[i] = x;
    g.w[i] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  return g;
}

const GaussRule& rule() {
  static const GaussRule r = gauss_legendre(20);
  return r;
}

std::array<cplx, 4> corners(const Rect& r) {
  return {r.lo, cplx(r.hi.real(), r.lo.imag()), r.hi, cplx(r.lo.real(), r.hi.imag())};
}

cplx perimeter_point(const Rect& r, double t) {
  const auto c = corners(r);
  t -= std::floor(t);
  const double u = 4.0 * t;
  const int e = std::min(3, static_cast<int>(u));
  const double s = u - e;
  return c[e] + s * (c[(e + 1) % 4] - c[e]);
}

struct Moments {
  std::array<cplx, 4> nu{};
  bool ok = true;
};

Moments contour_moments(const FunctionDef& f, const Rect& cell, int panels) {
  Moments m;
  const auto c = corners(cell);
  const cplx center = cell.center();
  const double scale = 0.5 * std::max(cell.width(), cell.height());
  const GaussRule& g = rule();
  for (int e = 0; e < 4; ++e) {
    const cplx a = c[e], b = c[(e + 1) % 4];
    for (int p = 0; p < panels; ++p) {
      const cplx pa = a + (static_cast<double>(p) / panels) * (b - a);
      const cplx pb = a + (static_cast<double>(p + 1) / panels) * (b - a);
      const cplx half = 0.5 * (pb - pa);
      const cplx mid = 0.5 * (pa + pb);
      for (std::size_t j = 0; j < g.x.size(); ++j) {
        const cplx z = mid + g.x[j] * half;
        const cplx fz = f.raw(z);
        const cplx dz = f.d1(z);
        if (!is_finite(fz) || !is_finite(dz) || fz == 0.0) {
          m.ok = false;
          return m;
        }
        const cplx term = g.w[j] * half * (dz / fz);
        const cplx zeta = (z - center) / scale;
        cplx pw = 1.0;
        for (int k = 0; k < 4; ++k) {
          m.nu[k] += pw * term;
          pw *= zeta;
        }
      }
    }
  }
  const cplx factor = 1.0 / cplx(0.0, 2.0 * std::numbers::pi);
  for (auto& v : m.nu) {
    v *= factor;
    if (!is_finite(v)) m.ok = false;
  }
  return m;
}

int winding_or_throw(const FunctionDef& f, const Rect& r) {
  std::vector<detail::ImageNode> nodes;
  constexpr int kPerEdge = 8;
  nodes.reserve(4 * kPerEdge + 1);
  for (int k = 0; k <= 4 * kPerEdge; ++k) {
    const double t = static_cast<double>(k) / (4 * kPerEdge);
    const cplx z = perimeter_point(r, t);
    const cplx fz = f.raw(z);
    if (!is_finite(fz) || fz == 0.0) throw EdgeHit{};
    nodes.push_back({t, z, fz});
  }
  try {
    return detail::adaptive_winding(
               nodes, [&](double t) { return perimeter_point(r, t); },
               [&](cplx z) { return f.raw(z); }, cplx(0.0, 0.0), 0.0, 20)
        .winding;
  } catch (const Error&) {
    throw EdgeHit{};
  }
}

struct CellInfo {
  int winding = 0;
  Moments mom;
  bool reliable = false;
};

CellInfo analyze(const FunctionDef& f, const Rect& r) {
  CellInfo info;
  info.winding = winding_or_throw(f, r);
  const Moments coarse = contour_moments(f, r, 1);
  const Moments fine = contour_moments(f, r, 2);
  info.mom = fine;
  info.reliable = coarse.ok && fine.ok && std::abs(fine.nu[0] - static_cast<double>(info.winding)) < 1e-6;
  if (info.reliable)
    for (int k = 0; k < 4; ++k)
      if (std::abs(coarse.nu[k] - fine.nu[k]) > kReliableTol * std::max(1.0, std::abs(fine.nu[k])))
        info.reliable = false;
  return info;
}

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

double unit_offset(std::uint64_t h) {  // in [-1, 1)
  return static_cast<double>(h >> 11) * 0x1p-52 - 1.0;
}

struct Cell {
  Rect rect;
  int depth = 0;
  std::uint64_t id = 0;
  CellInfo info;
};

cplx newton_ratio(const FunctionDef& f, cplx z0, const Rect& cell, const LocatorConfig& cfg) {
  cplx z = z0;
  for (int it = 0; it < cfg.newton_max_iter; ++it) {
    const cplx fz = f.raw(z);
    if (fz == 0.0 || !is_finite(fz)) break;
    const cplx d1 = f.d1(z), d2 = f.d2(z);
    if (!is_finite(d1) || !is_finite(d2)) break;
    const cplx den = d1 * d1 - fz * d2;
    if (den == 0.0) break;
    const cplx step = fz * d1 / den;
    if (!is_finite(step)) break;
    z -= step;
    if (std::abs(step) <= 1e-15 * (1.0 + std::abs(z))) break;
  }
  const Rect guard = cell.inflated(std::max(cell.width(), cell.height()));
  if (!is_finite(z) || !guard.contains(z)) return z0;
  return z;
}

ZeroPoleRecord make_record(const FunctionDef& f, const Cell& cell, const LocatorConfig& cfg) {
  const CellInfo& info = cell.info;
  const double scale = 0.5 * std::max(cell.rect.width(), cell.rect.height());
  cplx z0 = cell.rect.center();
  if (info.reliable && info.winding != 0) {
    const cplx centroid = cell.rect.center() + scale * info.mom.nu[1] / info.mom.nu[0];
    if (cell.rect.contains(centroid)) z0 = centroid;
  }
  ZeroPoleRecord rec;
  rec.order = std::abs(info.winding);
  rec.kind = info.winding > 0 ? PointKind::Zero : PointKind::Pole;
  rec.location = newton_ratio(f, z0, cell.rect, cfg);
  const cplx fz = f.raw(rec.location);
  if (rec.kind == PointKind::Zero)
    rec.residual = is_finite(fz) ? std::abs(fz) : std::numeric_limits<double>::infinity();
  else
    rec.residual = is_finite(fz) ? (fz == 0.0 ? std::numeric_limits<double>::infinity() : 1.0 / std::abs(fz))
                                 : 0.0;
  return rec;
}

bool single_cluster(const Moments& m) {
  const cplx mean = m.nu[1] / m.nu[0];
  const cplx var = m.nu[2] / m.nu[0] - mean * mean;
  const cplx third = m.nu[3] / m.nu[0] - mean * mean * mean;
  return std::abs(var) < kSingleTol && std::abs(third) < kSingleTol;
}

}  // namespace

int box_winding(const FunctionDef& f, const Rect& box) {
  box.validate();
  try {
    return winding_or_throw(f, box);
  } catch (const EdgeHit&) {
    throw Error(ErrorKind::BoundaryHit, "zero or pole on the box boundary");
  }
}

std::vector<ZeroPoleRecord> isolate(const FunctionDef& f, const Rect& box, const LocatorConfig& cfg) {
  box.validate();
  cfg.validate();
  const double min_cell = cfg.min_cell > 0.0 ? cfg.min_cell : 1e-8 * box.diagonal();

  Cell root{box, 0, 1, {}};
  try {
    root.info = analyze(f, box);
  } catch (const EdgeHit&) {
    throw Error(ErrorKind::BoundaryHit, "zero or pole on the search box boundary");
  }

  std::vector<ZeroPoleRecord> out;
  std::vector<Cell> stack{root};
  std::size_t processed = 0;
  while (!stack.empty()) {
    Cell cell = std::move(stack.back());
    stack.pop_back();
    if (++processed > kMaxCells)
      throw Error(ErrorKind::UnresolvedCluster, "cell budget exhausted");
    const CellInfo& info = cell.info;
    const bool can_split =
        cell.depth < cfg.max_depth && 0.5 * std::max(cell.rect.width(), cell.rect.height()) > min_cell;

    bool split = false;
    if (!info.reliable) {
      if (can_split)
        split = true;
      else if (info.winding != 0)
        out.push_back(make_record(f, cell, cfg));
    } else if (info.winding == 0) {
      const double activity =
          std::max({std::abs(info.mom.nu[1]), std::abs(info.mom.nu[2]), std::abs(info.mom.nu[3])});
      if (activity < kEmptyTol) continue;
      if (!can_split) {
        const cplx c = cell.rect.center();
        throw Error(ErrorKind::UnresolvedCluster,
                    "zero and pole closer than min_cell near (" + std::to_string(c.real()) + ", " +
                        std::to_string(c.imag()) + ")");
      }
      split = true;
    } else {
      if (cell.depth >= kMinClusterDepth && single_cluster(info.mom))
        out.push_back(make_record(f, cell, cfg));
      else if (can_split)
        split = true;
      else
        out.push_back(make_record(f, cell, cfg));
    }
    if (!split) continue;

    bool done = false;
    for (int attempt = 0; attempt < kSplitAttempts && !done; ++attempt) {
      const std::uint64_t h = splitmix(cfg.seed ^ splitmix(cell.id * 131 + attempt));
      const double amp = attempt == 0 ? 0.05 : 0.1;
      const cplx mid = cell.rect.center() + cplx(amp * cell.rect.width() * unit_offset(h),
                                                 amp * cell.rect.height() * unit_offset(splitmix(h)));
      const Rect kids[4] = {
          {cell.rect.lo, mid},
          {cplx(mid.real(), cell.rect.lo.imag()), cplx(cell.rect.hi.real(), mid.imag())},
          {mid, cell.rect.hi},
          {cplx(cell.rect.lo.real(), mid.imag()), cplx(mid.real(), cell.rect.hi.imag())},
      };
      try {
        std::array<Cell, 4> next;
        for (int q = 0; q < 4; ++q)
          next[q] = Cell{kids[q], cell.depth + 1, cell.id * 4 + q, analyze(f, kids[q])};
        for (int q = 3; q >= 0; --q) stack.push_back(std::move(next[q]));
        done = true;
      } catch (const EdgeHit&) {
      }
    }
    if (!done) throw Error(ErrorKind::BoundaryHit, "root stays on cell edges after perturbation");
  }

  std::sort(out.begin(), out.end(), [](const ZeroPoleRecord& a, const ZeroPoleRecord& b) {
    if (a.location.real() != b.location.real()) return a.location.real() < b.location.real();
    if (a.location.imag() != b.location.imag()) return a.location.imag() < b.location.imag();
    return a.kind < b.kind;
  });
  return out;
}

std::vector<ZeroPoleRecord> isolate_around(const FunctionDef& f, const Rect& box, const LocatorConfig& cfg) {
  static constexpr double kGrow[] = {0.0, 0.0137, 0.0291, 0.0533, 0.0871};
  for (std::size_t k = 0;; ++k) {
    try {
      return isolate(f, box.inflated(kGrow[k] * box.diagonal()), cfg);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::BoundaryHit || k + 1 == std::size(kGrow)) throw;
    }
  }
}

std::vector<ZeroPoleRecord> critical_points(const FunctionDef& f, const Rect& box, const LocatorConfig& cfg) {
  auto recs = isolate(f.derivative(), box, cfg);
  std::vector<ZeroPoleRecord> out;
  for (auto& r : recs) {
    if (r.kind != PointKind::Zero) continue;
    r.kind = PointKind::CriticalPoint;
    out.push_back(r);
  }
  return out;
}

std::vector<ZeroPoleRecord> critical_points_on_curve(const FunctionDef& f, const JordanCurve& s, double band,
                                                     const LocatorConfig& cfg) {
  if (!(band > 0.0)) throw Error(ErrorKind::ConfigError, "band must be positive");
  const Rect box = s.bounding_box().inflated(band + 0.0113 * s.diameter());
  const FunctionDef df = f.derivative();
  std::vector<ZeroPoleRecord> out;
  for (auto r : isolate_around(df, box, cfg)) {
    if (r.kind != PointKind::Zero) continue;
    if (s.distance(r.location) >= band) continue;
    r.kind = PointKind::CriticalPoint;
    out.push_back(r);
  }
  return out;
}

}  // namespace lemni
