#include "ks/flows.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <unordered_map>

namespace ks {

namespace {

// hash grid over the R^3 chordal embedding of the sphere
struct CloudIndex {
  double cell;
  std::unordered_map<long long, std::vector<int>> buckets;
  std::vector<std::array<double, 3>> xyz;

  static std::array<double, 3> embed(const SpherePoint& p) {
    double n = std::norm(p.z1) + std::norm(p.z2);
    cx w = p.z1 * std::conj(p.z2);
    return {2.0 * w.real() / n, 2.0 * w.imag() / n,
            (std::norm(p.z1) - std::norm(p.z2)) / n};
  }

  static long long key(long ix, long iy, long iz) {
    return ((ix + (1 << 20)) << 42) ^ ((iy + (1 << 20)) << 21) ^ (iz + (1 << 20));
  }

  CloudIndex(const std::vector<SpherePoint>& pts, double eps) : cell(eps) {
    xyz.reserve(pts.size());
    for (int i = 0; i < static_cast<int>(pts.size()); ++i) {
      xyz.push_back(embed(pts[i]));
      const auto& q = xyz.back();
      buckets[key(std::lround(q[0] / cell), std::lround(q[1] / cell),
                  std::lround(q[2] / cell))]
          .push_back(i);
    }
  }

  bool within(const SpherePoint& p, double eps) const {
    auto q = embed(p);
    long ix = std::lround(q[0] / cell), iy = std::lround(q[1] / cell),
         iz = std::lround(q[2] / cell);
    double e2 = eps * eps;
    for (long dx = -1; dx <= 1; ++dx)
      for (long dy = -1; dy <= 1; ++dy)
        for (long dz = -1; dz <= 1; ++dz) {
          auto it = buckets.find(key(ix + dx, iy + dy, iz + dz));
          if (it == buckets.end()) continue;
          for (int i : it->second) {
            double a = q[0] - xyz[i][0], b = q[1] - xyz[i][1], c = q[2] - xyz[i][2];
            if (a * a + b * b + c * c <= e2) return true;
          }
        }
    return false;
  }
};

}  // namespace

Frame Frame::from_map(const MoebiusMap& m) {
  Frame f;
  f.g = m;
  f.backward = apply_moebius(m, SpherePoint(cx(0)));
  f.forward = apply_moebius(m, SpherePoint::infinity());
  return f;
}

Frame Frame::on_circle(const OrientedCircle& c, const SpherePoint& p_backward,
                       const SpherePoint& p_forward) {
  if (!c.contains(p_backward) || !c.contains(p_forward))
    fail(errc::invalid_params, "endpoints must lie on the circle");
  MoebiusMap chart = circle_chart(c);
  double a0 = chart_angle(chart, p_backward);
  double a1 = chart_angle(chart, p_forward);
  SpherePoint mid = chart_point(chart, norm_angle(a0 + 0.5 * ccw_gap(a0, a1)));
  return from_map(map_to_standard(p_backward, mid, p_forward).inverse());
}

std::pair<cx, double> Frame::base_point() const {
  // g(j) in the upper half space: height 1/(|c|^2 + |d|^2),
  // horizontal (b conj(d) + a conj(c)) * height
  double n = std::norm(g.c) + std::norm(g.d);
  return {(g.b * std::conj(g.d) + g.a * std::conj(g.c)) / n, 1.0 / n};
}

SpherePoint Frame::horocycle_endpoint(double s) const {
  return apply_moebius(g, SpherePoint(cx(s), cx(1)));
}

Frame geodesic_flow(const Frame& x, double t) {
  Frame f;
  f.g = x.g * MoebiusMap::geodesic(t);
  f.backward = x.backward;  // a(t) fixes 0 and inf
  f.forward = x.forward;
  return f;
}

Frame horocycle_flow(const Frame& x, double s) {
  Frame f;
  f.g = x.g * MoebiusMap::horocycle_u(s);
  f.backward = x.horocycle_endpoint(s);  // n_s moves 0 to s
  f.forward = x.forward;                 // n_s fixes inf
  return f;
}

bool in_rf(const Frame& x, const LimitSetApprox& lam, double eps) {
  return lam.distance(x.backward) <= eps && lam.distance(x.forward) <= eps;
}

ThickSetApprox ReturnTimeSet::thick_view() const {
  ThickSetApprox t;
  t.window = window;
  t.resolution = resolution;
  t.intervals = intervals;
  return t;
}

ReturnTimeSet return_times(const Frame& x, const LimitSetApprox& lam, double window,
                           double eta, double eps) {
  if (!(window > 0.0) || !(eta > 0.0) || !(eps > 0.0))
    fail(errc::invalid_params, "window, eta, eps must be positive");
  ReturnTimeSet out;
  out.window = window;
  out.resolution = eta;
  out.eps = eps;
  if (lam.distance(x.forward) > eps) {
    out.forward_escapes = true;
    return out;
  }
  CloudIndex index(lam.points, eps);
  long n = static_cast<long>(std::floor(window / eta));
  bool open = false;
  double first = 0.0, last = 0.0;
  for (long i = -n; i <= n; ++i) {
    double s = i * eta;
    bool hit = index.within(x.horocycle_endpoint(s), eps);
    if (hit && !open) {
      open = true;
      first = s;
    }
    if (hit) last = s;
    if (!hit && open) {
      open = false;
      out.intervals.push_back({std::max(first - 0.5 * eta, -window),
                               std::min(last + 0.5 * eta, window)});
    }
  }
  if (open)
    out.intervals.push_back({std::max(first - 0.5 * eta, -window),
                             std::min(last + 0.5 * eta, window)});
  return out;
}

namespace {

// residual arcs of the extraction, read off in the horocycle coordinate of
// the frame (the s with g(s) = point); the arc through the forward endpoint
// splits into two rays
std::vector<std::pair<double, double>> residual_intervals(const Frame& x,
                                                          const CantorApprox& ca,
                                                          double window) {
  MoebiusMap to_line = x.g.inverse();
  auto s_coord = [&](double phi) {
    SpherePoint p = apply_moebius(to_line, ca.point(phi));
    if (p.is_infinity(1e-9)) return std::numeric_limits<double>::infinity();
    return p.affine().real();
  };
  double phi_inf = chart_angle(ca.chart, x.forward);
  std::vector<std::pair<double, double>> out;
  for (auto [start, len] : ca.residual) {
    if (len >= 6.283) {  // K = C
      out.push_back({-window, window});
      continue;
    }
    double s1 = s_coord(start);
    double s2 = s_coord(norm_angle(start + len));
    if (in_open_arc(phi_inf, start, len) || !std::isfinite(s1) || !std::isfinite(s2)) {
      // wraps through infinity: two rays
      if (std::isfinite(s2)) out.push_back({-window, std::min(s2, window)});
      if (std::isfinite(s1)) out.push_back({std::max(s1, -window), window});
    } else {
      double lo = std::min(s1, s2), hi = std::max(s1, s2);
      if (hi < -window || lo > window) continue;
      out.push_back({std::max(lo, -window), std::min(hi, window)});
    }
  }
  std::sort(out.begin(), out.end());
  // merge overlaps from clipping
  std::vector<std::pair<double, double>> merged;
  for (auto [a, b] : out) {
    if (a > b) continue;
    if (!merged.empty() && a <= merged.back().second)
      merged.back().second = std::max(merged.back().second, b);
    else
      merged.push_back({a, b});
  }
  return merged;
}

std::vector<std::pair<double, double>> intersect_intervals(
    const std::vector<std::pair<double, double>>& A,
    const std::vector<std::pair<double, double>>& B) {
  std::vector<std::pair<double, double>> out;
  size_t i = 0, j = 0;
  while (i < A.size() && j < B.size()) {
    double lo = std::max(A[i].first, B[j].first);
    double hi = std::min(A[i].second, B[j].second);
    if (lo <= hi) out.push_back({lo, hi});
    (A[i].second < B[j].second ? i : j)++;
  }
  return out;
}

}  // namespace

CertificateReport rfk_certificate(const Frame& x, const LimitSetApprox& lam, double k,
                                  const RfkParams& params) {
  if (!(k > 1.0)) fail(errc::bad_k, "thickness constant must exceed 1");
  if (!in_rf(x, lam, params.eps))
    fail(errc::not_in_rf, "frame endpoints are not near the limit set");
  CertificateReport rep;
  rep.k = k;
  rep.params = params;
  rep.times = return_times(x, lam, params.window, params.eta, params.eps);
  ThickSetApprox T = rep.times.thick_view();
  if (!T.contains(0.0, 0.5 * params.eta)) {
    rep.witness = "none";
    return rep;
  }
  if (is_globally_k_thick(T, k)) {
    rep.pass = true;
    rep.witness = "return-times";
    rep.witness_set = T;
    return rep;
  }
  if (params.carpet) {
    LabeledGapSystem gaps = slice_circle(*params.carpet, x.plane_circle());
    if (gaps.whole_circle_label < 0 && !gaps.arcs.empty()) {
      CantorApprox ca = extract_cantor(gaps, params.stop);
      auto K = intersect_intervals(residual_intervals(x, ca, params.window),
                                   T.intervals);
      ThickSetApprox cand(K, params.window, params.eta);
      if (cand.contains(0.0, 0.5 * params.eta) && is_globally_k_thick(cand, k)) {
        rep.pass = true;
        rep.witness = "cantor-residual";
        rep.witness_set = cand;
        return rep;
      }
    }
  }
  rep.witness = "none";
  return rep;
}

}  // namespace ks
