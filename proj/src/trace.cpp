#include "lemni/trace.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

namespace lemni {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Stub {
  cplx z;
  double theta;
  bool outgoing;
  bool used = false;
};

struct Node {
  cplx c;
  int order;
  double theta;
  std::vector<Stub> stubs;
};

enum class Stop { Closed, LeftBox, Node };

struct Run {
  std::vector<cplx> pts;
  std::vector<double> th;
  Stop stop = Stop::LeftBox;
  int node = -1;
};

struct Edge {
  std::vector<cplx> pts;
  std::vector<double> th;
  int from = -1, to = -1;
  bool loop = false;
  std::vector<cplx> landings;
};

class Tracer {
 public:
  Tracer(const FunctionDef& f, const JordanCurve& gamma, const Rect& box, const TraceConfig& cfg)
      : f_(f), gamma_(gamma), box_(box), cfg_(cfg) {
    const double dg = gamma.diameter(), db = box.diagonal();
    tol_ = cfg.trace_tol > 0.0 ? cfg.trace_tol : 1e-9 * dg;
    closure_ = cfg.closure_tol > 0.0 ? cfg.closure_tol : 1e-6 * db;
    spatial_ = cfg.spatial_step > 0.0 ? cfg.spatial_step : 0.02 * db;
    r_ = cfg.stub_radius > 0.0 ? cfg.stub_radius : 1e-3 * db;
    branch_tol_ = cfg.branch_tol > 0.0 ? cfg.branch_tol : 1e-6 * dg;
  }

  std::vector<PathComponent> run(const std::vector<cplx>& seeds);

 private:
  cplx gamma_at(double th) const { return gamma_.point_at(th - std::floor(th)); }
  cplx gamma_dot(double th) const { return gamma_.tangent_at(th - std::floor(th)); }

  bool correct(cplx& z, double th) const;
  double nearest_node(cplx z, int* which) const;
  void find_nodes();
  void find_stubs(Node& n) const;
  Run follow(cplx z, double th, int dir, const cplx* close_to, std::vector<cplx>& landings) const;
  int claim_stub(int node, cplx near, bool outgoing);
  double unwrap_near(double th, double ref) const {
    return th + std::round(ref - th);
  }

  const FunctionDef& f_;
  const JordanCurve& gamma_;
  Rect box_;
  TraceConfig cfg_;
  double tol_, closure_, spatial_, r_, branch_tol_;
  std::vector<Node> nodes_;
};

bool Tracer::correct(cplx& z, double th) const {
  const cplx target = gamma_at(th);
  for (int it = 0; it < 12; ++it) {
    const cplx fz = f_.raw(z);
    const cplx d = f_.d1(z);
    if (!is_finite(fz) || !is_finite(d) || d == 0.0) return false;
    const cplx r = fz - target;
    if (std::abs(r) <= 0.01 * tol_) return true;
    z -= r / d;
  }
  const cplx fz = f_.raw(z);
  return is_finite(fz) && std::abs(fz - target) <= tol_;
}

double Tracer::nearest_node(cplx z, int* which) const {
  double best = kInf;
  for (std::size_t k = 0; k < nodes_.size(); ++k) {
    const double d = std::abs(z - nodes_[k].c);
    if (d < best) {
      best = d;
      if (which) *which = static_cast<int>(k);
    }
  }
  return best;
}

void Tracer::find_nodes() {
  const FunctionDef df = f_.derivative();
  for (const auto& r : isolate_around(df, box_, cfg_.locator)) {
    if (r.kind != PointKind::Zero || !box_.contains(r.location)) continue;
    const cplx v = f_.raw(r.location);
    if (!is_finite(v) || gamma_.distance(v) > branch_tol_) continue;
    Node n{r.location, r.order, gamma_.nearest_parameter(v), {}};
    find_stubs(n);
    nodes_.push_back(std::move(n));
  }
}

void Tracer::find_stubs(Node& n) const {
  const int m = 64 * (n.order + 1);
  auto g = [&](double phi) { return gamma_.signed_distance(f_.raw(n.c + std::polar(r_, phi))); };
  std::vector<double> phis(m + 1), vals(m + 1);
  for (int k = 0; k <= m; ++k) {
    phis[k] = 2.0 * std::numbers::pi * (k + 0.5) / m;
    vals[k] = k == m ? vals[0] : g(phis[k]);
  }
  for (int k = 0; k < m; ++k) {
    if ((vals[k] < 0.0) == (vals[k + 1] < 0.0)) continue;
    double lo = phis[k], hi = phis[k + 1], glo = vals[k];
    for (int it = 0; it < 60; ++it) {
      const double mid = 0.5 * (lo + hi);
      const double gm = g(mid);
      if ((gm < 0.0) == (glo < 0.0))
        lo = mid, glo = gm;
      else
        hi = mid;
    }
    Stub s;
    s.z = n.c + std::polar(r_, 0.5 * (lo + hi));
    s.theta = gamma_.nearest_parameter(f_.raw(s.z));
    correct(s.z, s.theta);
    const cplx v = gamma_dot(s.theta) / f_.d1(s.z);
    s.outgoing = (std::conj(s.z - n.c) * v).real() > 0.0;
    n.stubs.push_back(s);
  }
}

Run Tracer::follow(cplx z, double th, int dir, const cplx* close_to, std::vector<cplx>& landings) const {
  Run run;
  run.pts.push_back(z);
  run.th.push_back(th);
  double step = cfg_.initial_step;
  while (true) {
    if (run.pts.size() > cfg_.max_points)
      throw Error(ErrorKind::StepCollapse, "point budget exhausted while tracing");
    const double dn = nearest_node(z, nullptr);
    const double cap = std::min(spatial_, 0.5 * dn);
    const double next_int = dir > 0 ? std::floor(th) + 1.0 : std::ceil(th) - 1.0;
    const double to_int = std::abs(next_int - th);
    double dth = std::min(step, to_int);
    bool land = dth == to_int;
    cplx zn;
    double th1;
    while (true) {
      if (!land && dth < cfg_.min_step)
        throw Error(ErrorKind::StepCollapse, "continuation step underflow near (" + std::to_string(z.real()) +
                                                 ", " + std::to_string(z.imag()) + ")");
      th1 = land ? next_int : th + dir * dth;
      const cplx d = f_.d1(z);
      const cplx dz = gamma_dot(th) * (th1 - th) / d;
      if (!is_finite(dz)) {
        dth *= 0.5;
        land = false;
        continue;
      }
      const double len = std::abs(dz);
      if (len > cap) {
        dth *= 0.9 * cap / len;
        land = false;
        continue;
      }
      zn = z + dz;
      const cplx pred = zn;
      if (!correct(zn, th1) || std::abs(zn - pred) > 0.25 * len + tol_ || std::abs(zn - z) > cap) {
        dth *= 0.5;
        land = false;
        continue;
      }
      break;
    }
    if (!land || dth >= step) step = std::min(cfg_.max_step, 1.5 * dth);
    if (!box_.contains(zn)) {
      run.stop = Stop::LeftBox;
      return run;
    }
    z = zn;
    th = th1;
    run.pts.push_back(z);
    run.th.push_back(th);
    if (land) {
      landings.push_back(z);
      if (close_to && std::abs(z - *close_to) < closure_) {
        run.stop = Stop::Closed;
        return run;
      }
    }
    int k = -1;
    if (nearest_node(z, &k) < 0.9 * r_) {
      run.stop = Stop::Node;
      run.node = k;
      return run;
    }
  }
}

int Tracer::claim_stub(int node, cplx near, bool outgoing) {
  auto& stubs = nodes_[node].stubs;
  int best = -1;
  double bd = kInf;
  for (std::size_t k = 0; k < stubs.size(); ++k) {
    if (stubs[k].used || stubs[k].outgoing != outgoing) continue;
    const double d = std::abs(stubs[k].z - near);
    if (d < bd) bd = d, best = static_cast<int>(k);
  }
  if (best >= 0) stubs[best].used = true;
  return best;
}

std::vector<PathComponent> Tracer::run(const std::vector<cplx>& seeds) {
  find_nodes();
  std::vector<Edge> edges;

  // Arrival of a run at a node: swap the last point for the node itself and
  // consume the stub it came through.
  auto finish_at_node = [&](Run& r, bool outgoing_stub) {
    const cplx before = r.pts.size() > 1 ? r.pts[r.pts.size() - 2] : r.pts.back();
    claim_stub(r.node, before, outgoing_stub);
    const Node& n = nodes_[r.node];
    r.pts.back() = n.c;
    r.th.back() = unwrap_near(n.theta, r.th.back());
  };

  for (std::size_t j = 0; j < nodes_.size(); ++j) {
    for (std::size_t s = 0; s < nodes_[j].stubs.size(); ++s) {
      Stub& st = nodes_[j].stubs[s];
      if (!st.outgoing || st.used) continue;
      st.used = true;
      Edge e;
      Run r = follow(st.z, st.theta, +1, nullptr, e.landings);
      if (r.stop == Stop::Node) finish_at_node(r, false);
      e.pts = {nodes_[j].c};
      e.th = {unwrap_near(nodes_[j].theta, st.theta)};
      e.pts.insert(e.pts.end(), r.pts.begin(), r.pts.end());
      e.th.insert(e.th.end(), r.th.begin(), r.th.end());
      e.from = static_cast<int>(j);
      e.to = r.stop == Stop::Node ? r.node : -1;
      edges.push_back(std::move(e));
    }
  }
  for (std::size_t j = 0; j < nodes_.size(); ++j) {
    for (std::size_t s = 0; s < nodes_[j].stubs.size(); ++s) {
      Stub& st = nodes_[j].stubs[s];
      if (st.outgoing || st.used) continue;
      st.used = true;
      Edge e;
      Run r = follow(st.z, st.theta, -1, nullptr, e.landings);
      if (r.stop == Stop::Node) finish_at_node(r, true);
      std::reverse(r.pts.begin(), r.pts.end());
      std::reverse(r.th.begin(), r.th.end());
      e.pts = std::move(r.pts);
      e.th = std::move(r.th);
      e.pts.push_back(nodes_[j].c);
      e.th.push_back(unwrap_near(nodes_[j].theta, e.th.back()));
      e.from = r.stop == Stop::Node ? r.node : -1;
      e.to = static_cast<int>(j);
      edges.push_back(std::move(e));
    }
  }

  auto covered = [&](cplx z) {
    for (const auto& e : edges)
      for (const cplx p : e.landings)
        if (std::abs(p - z) < closure_) return true;
    return false;
  };
  for (const cplx seed : seeds) {
    // a seed at a branch point lies on the node's own edges
    if (covered(seed) || nearest_node(seed, nullptr) < r_) continue;
    Edge e;
    e.landings.push_back(seed);
    Run fw = follow(seed, 0.0, +1, &seed, e.landings);
    if (fw.stop == Stop::Closed) {
      e.pts = std::move(fw.pts);
      e.th = std::move(fw.th);
      e.loop = true;
    } else {
      if (fw.stop == Stop::Node) finish_at_node(fw, false);
      Run bw = follow(seed, 0.0, -1, nullptr, e.landings);
      if (bw.stop == Stop::Node) finish_at_node(bw, true);
      e.pts.assign(bw.pts.rbegin(), bw.pts.rend());
      e.th.assign(bw.th.rbegin(), bw.th.rend());
      e.pts.insert(e.pts.end(), fw.pts.begin() + 1, fw.pts.end());
      e.th.insert(e.th.end(), fw.th.begin() + 1, fw.th.end());
      e.from = bw.stop == Stop::Node ? bw.node : -1;
      e.to = fw.stop == Stop::Node ? fw.node : -1;
    }
    edges.push_back(std::move(e));
  }

  // Group edges through shared nodes.
  const std::size_t ne = edges.size();
  std::vector<std::size_t> parent(ne);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<long> owner(nodes_.size(), -1);
  for (std::size_t k = 0; k < ne; ++k)
    for (const int n : {edges[k].from, edges[k].to}) {
      if (n < 0) continue;
      if (owner[n] < 0)
        owner[n] = static_cast<long>(k);
      else
        parent[find(k)] = find(static_cast<std::size_t>(owner[n]));
    }

  std::vector<PathComponent> out;
  std::vector<std::vector<cplx>> out_landings;
  std::vector<long> slot(ne, -1);
  for (std::size_t k = 0; k < ne; ++k) {
    const std::size_t root = find(k);
    if (slot[root] < 0) {
      slot[root] = static_cast<long>(out.size());
      out.emplace_back();
      out.back().closed = true;
      out_landings.emplace_back();
    }
    PathComponent& pc = out[slot[root]];
    Edge& e = edges[k];
    TraceEdge te;
    auto local = [&](int n) -> int {
      if (n < 0) return -1;
      for (std::size_t b = 0; b < pc.branch_points.size(); ++b)
        if (pc.branch_points[b].location == nodes_[n].c) return static_cast<int>(b);
      pc.branch_points.push_back({nodes_[n].c, nodes_[n].order, 0});
      return static_cast<int>(pc.branch_points.size() - 1);
    };
    te.from = local(e.from);
    te.to = local(e.to);
    if (te.from >= 0) ++pc.branch_points[te.from].incident_edges;
    if (te.to >= 0) ++pc.branch_points[te.to].incident_edges;
    te.closed_loop = e.loop;
    if (!e.loop && (te.from < 0 || te.to < 0)) pc.closed = false;
    pc.points.insert(pc.points.end(), e.pts.begin(), e.pts.end());
    pc.parameter_track.insert(pc.parameter_track.end(), e.th.begin(), e.th.end());
    te.points = std::move(e.pts);
    te.thetas = std::move(e.th);
    pc.edges.push_back(std::move(te));
    out_landings[slot[root]].insert(out_landings[slot[root]].end(), e.landings.begin(), e.landings.end());
  }

  // Safety net against a curve traced twice: drop a node-free component all
  // of whose integer-parameter points already belong to an earlier one.
  std::vector<PathComponent> kept;
  std::vector<std::vector<cplx>> kept_landings;
  for (std::size_t k = 0; k < out.size(); ++k) {
    bool dup = !out_landings[k].empty() && out[k].branch_points.empty();
    for (const cplx p : out_landings[k]) {
      bool seen = false;
      for (const auto& kl : kept_landings)
        for (const cplx q : kl)
          if (std::abs(p - q) < closure_) seen = true;
      if (!seen) {
        dup = false;
        break;
      }
    }
    if (dup) continue;
    kept.push_back(std::move(out[k]));
    kept_landings.push_back(std::move(out_landings[k]));
  }

  auto key = [](const PathComponent& c) {
    cplx best = c.points.front();
    for (const cplx p : c.points)
      if (p.real() < best.real() || (p.real() == best.real() && p.imag() < best.imag())) best = p;
    return best;
  };
  std::stable_sort(kept.begin(), kept.end(), [&](const PathComponent& a, const PathComponent& b) {
    const cplx ka = key(a), kb = key(b);
    return ka.real() != kb.real() ? ka.real() < kb.real() : ka.imag() < kb.imag();
  });
  return kept;
}

}  // namespace

std::vector<cplx> seed_points(const FunctionDef& f, const JordanCurve& gamma, const Rect& box,
                              const TraceConfig& cfg) {
  box.validate();
  std::vector<cplx> out;
  for (const auto& r : isolate_around(f.shifted(gamma.point_at(0.0)), box, cfg.locator))
    if (r.kind == PointKind::Zero && box.contains(r.location)) out.push_back(r.location);
  return out;
}

std::vector<PathComponent> trace_components(const FunctionDef& f, const JordanCurve& gamma_in, const Rect& box,
                                            const TraceConfig& cfg) {
  box.validate();
  if (f.body().is_constant()) throw Error(ErrorKind::ConfigError, "cannot trace a constant function");
  if (!(cfg.initial_step > 0.0) || !(cfg.max_step > 0.0) || !(cfg.min_step > 0.0))
    throw Error(ErrorKind::ConfigError, "trace steps must be positive");
  const JordanCurve gamma = normalize(gamma_in);
  Tracer tracer(f, gamma, box, cfg);
  return tracer.run(seed_points(f, gamma, box, cfg));
}

}  // namespace lemni
