#include "ks/modulus.hpp"

#include <algorithm>
#include <cmath>

namespace ks {

namespace {
constexpr double kTwoPi = 6.28318530717958647692528676655900577;
constexpr double kPi = 3.14159265358979323846264338327950288;
}  // namespace

double agm(double a, double b) {
  if (!(a > 0.0) || !(b > 0.0)) fail(errc::numeric_failure, "agm needs positive args");
  for (int i = 0; i < 64; ++i) {
    double an = 0.5 * (a + b);
    double bn = std::sqrt(a * b);
    if (std::abs(an - bn) <= 1e-17 * an) return an;
    a = an;
    b = bn;
  }
  return 0.5 * (a + b);
}

double two_slit_modulus(double x) {
  if (!(x > 0.0)) fail(errc::nonpositive_ratio, "cross-ratio coordinate must be > 0");
  // Teichmueller ring C^ - ([-1,0] u [x,inf]) has modulus (in log R units)
  // 2 mu(1/sqrt(1+x)) with mu(r) = pi/2 * K(r')/K(r); via K(r) = pi/(2 agm(1,r'))
  // this collapses to agm(1, r') / (2 agm(1, r)).
  double r = std::sqrt(1.0 / (1.0 + x));
  double rp = std::sqrt(x / (1.0 + x));
  return agm(1.0, rp) / (2.0 * agm(1.0, r));
}

double two_slit_modulus_inverse(double mod) {
  if (!(mod > 0.0)) fail(errc::nonpositive_delta, "modulus must be > 0");
  double lo = -60.0, hi = 60.0;  // log x
  if (two_slit_modulus(std::exp(lo)) > mod || two_slit_modulus(std::exp(hi)) < mod)
    fail(errc::numeric_failure, "modulus out of invertible range");
  for (int i = 0; i < 200; ++i) {
    double mid = 0.5 * (lo + hi);
    (two_slit_modulus(std::exp(mid)) < mod ? lo : hi) = mid;
    if (hi - lo < 1e-15 * std::max(1.0, std::abs(lo))) break;
  }
  return std::exp(0.5 * (lo + hi));
}

RoundRing::RoundRing(OrientedCircle d1, OrientedCircle d2) : disk1(d1), disk2(d2) {
  if (!(inversive() > 1.0))
    fail(errc::disks_not_disjoint, "disk closures are not disjoint");
}

namespace {

// Null direction of a singular Hermitian matrix (a, b; conj b, d).
SpherePoint hermitian_null(double a, cx b, double d) {
  // rows give (b, -a) and (d, -conj b); pick the better conditioned one
  double n1 = std::norm(b) + a * a;
  double n2 = d * d + std::norm(b);
  if (n1 >= n2) return SpherePoint(b, cx(-a));
  return SpherePoint(cx(d), -std::conj(b));
}

}  // namespace

MoebiusMap concentric_normalization(const RoundRing& r) {
  const OrientedCircle &m1 = r.disk1, &m2 = r.disk2;
  double I = r.inversive();
  double s = std::sqrt(I * I - 1.0);
  // det(M1 + t M2) = -1 + 2 I t - t^2 vanishes at t = I -+ s; the two
  // degenerate pencil members are point circles at the limit points.
  SpherePoint p[2];
  double roots[2] = {I - s, I + s};
  for (int i = 0; i < 2; ++i) {
    double t = roots[i];
    p[i] = hermitian_null(m1.a + t * m2.a, m1.b + t * m2.b, m1.d + t * m2.d);
  }
  // z -> det(z, p0) / det(z, p1) sends p0 -> 0, p1 -> inf
  return MoebiusMap(p[0].z2, -p[0].z1, p[1].z2, -p[1].z1);
}

double round_ring_modulus(const RoundRing& r) {
  MoebiusMap m = concentric_normalization(r);
  OrientedCircle c1 = map_circle(m, r.disk1);
  OrientedCircle c2 = map_circle(m, r.disk2);
  if (c1.is_line(1e-9) || c2.is_line(1e-9))
    fail(errc::numeric_failure, "normalization did not produce concentric circles");
  double r1 = c1.radius(), r2 = c2.radius();
  double off = std::max(std::abs(c1.center()), std::abs(c2.center()));
  if (off > 1e-6 * std::max(r1, r2))
    fail(errc::numeric_failure, "normalized circles are not concentric");
  return std::abs(std::log(r2 / r1)) / kTwoPi;
}

double disk_pair_distance(const RoundRing& r) { return std::acosh(r.inversive()); }

FourPointConfig FourPointConfig::from_points(const OrientedCircle& c,
                                             const std::array<SpherePoint, 4>& pts) {
  MoebiusMap chart = circle_chart(c);
  std::array<double, 4> ang;
  for (int i = 0; i < 4; ++i) {
    if (!c.contains(pts[i]))
      fail(errc::degenerate_config, "configuration point not on the circle");
    ang[i] = chart_angle(chart, pts[i]);
  }
  return from_angles(c, ang);
}

FourPointConfig FourPointConfig::from_angles(const OrientedCircle& c,
                                             const std::array<double, 4>& angles) {
  FourPointConfig cfg;
  cfg.circle = c;
  cfg.chart = circle_chart(c);
  for (int i = 0; i < 4; ++i) cfg.angle[i] = norm_angle(angles[i]);
  double total = 0.0;
  for (int i = 0; i < 4; ++i) {
    double g = ccw_gap(cfg.angle[i], cfg.angle[(i + 1) % 4]);
    if (g <= tol().angle || g >= kTwoPi - tol().angle)
      fail(errc::degenerate_config, "configuration points must be in strict cyclic order");
    total += g;
  }
  if (std::abs(total - kTwoPi) > 1e-9)
    fail(errc::degenerate_config, "configuration points are not cyclically ordered");
  return cfg;
}

std::array<double, 4> FourPointConfig::arc_lengths() const {
  return {ccw_gap(angle[0], angle[1]), ccw_gap(angle[1], angle[2]),
          ccw_gap(angle[2], angle[3]), ccw_gap(angle[3], angle[0])};
}

double cross_ratio_parameter(const FourPointConfig& cfg) {
  auto len = cfg.arc_lengths();
  double b1 = len[0], a1 = len[1], b2 = len[2], a2 = len[3];
  return (std::sin(0.5 * a1) * std::sin(0.5 * a2)) /
         (std::sin(0.5 * b1) * std::sin(0.5 * b2));
}

double arc_ring_modulus(const FourPointConfig& cfg) {
  return two_slit_modulus(cross_ratio_parameter(cfg));
}

double arc_length_ratio(const FourPointConfig& cfg) {
  auto len = cfg.arc_lengths();
  return std::min(len[1], len[3]) / std::min(len[0], len[2]);
}

XRatioBounds xratio_bounds(double t) {
  if (!(t > 0.0)) fail(errc::nonpositive_ratio, "length ratio must be > 0");
  double x_lo = t * t / (1.0 + 2.0 * t);
  double x_hi = t * (t + 2.0);
  return {two_slit_modulus(x_lo), two_slit_modulus(x_hi)};
}

bool check_teichmuller(const RoundRing& b, const FourPointConfig& cfg) {
  // b must separate the endpoints of I1 from the endpoints of I2
  SpherePoint e1[2] = {cfg.point(0), cfg.point(1)};
  SpherePoint e2[2] = {cfg.point(2), cfg.point(3)};
  double eps = tol().incidence;
  auto inside = [&](const OrientedCircle& disk, const SpherePoint& p) {
    return disk.eval(p) <= eps;
  };
  bool direct = inside(b.disk1, e1[0]) && inside(b.disk1, e1[1]) &&
                inside(b.disk2, e2[0]) && inside(b.disk2, e2[1]);
  bool swapped = inside(b.disk2, e1[0]) && inside(b.disk2, e1[1]) &&
                 inside(b.disk1, e2[0]) && inside(b.disk1, e2[1]);
  if (!direct && !swapped)
    fail(errc::not_separating, "ring does not separate the two endpoint pairs");
  return round_ring_modulus(b) <= arc_ring_modulus(cfg) + 1e-9;
}

}  // namespace ks
