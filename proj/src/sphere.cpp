#include "ks/sphere.hpp"

#include <algorithm>
#include <cmath>

namespace ks {

namespace {
constexpr double kTwoPi = 6.28318530717958647692528676655900577;
}

const char* errc_name(errc c) {
  switch (c) {
    case errc::degenerate_triple: return "DegenerateTriple";
    case errc::degenerate_config: return "DegenerateConfig";
    case errc::disks_not_disjoint: return "DisksNotDisjoint";
    case errc::not_separating: return "NotSeparating";
    case errc::nonpositive_ratio: return "NonpositiveRatio";
    case errc::nonpositive_delta: return "NonpositiveDelta";
    case errc::bad_k: return "BadK";
    case errc::invalid_params: return "InvalidParams";
    case errc::too_few_disks: return "TooFewDisks";
    case errc::too_few_bridges: return "TooFewBridges";
    case errc::no_bridge: return "NoBridge";
    case errc::single_type_dominates: return "SingleTypeDominates";
    case errc::elementary_group: return "ElementaryGroup";
    case errc::not_in_rf: return "NotInRF";
    case errc::unknown_artifact_kind: return "UnknownArtifactKind";
    case errc::io_error: return "IoError";
    case errc::numeric_failure: return "NumericFailure";
  }
  return "Error";
}

Tolerances make_profile(const char* name) {
  Tolerances t;
  if (std::string(name) == "strict") {
    t.incidence = 1e-12;
    t.circle_match = 1e-10;
    t.dedup = 1e-9;
  }
  return t;
}

SpherePoint::SpherePoint(cx a, cx b) : z1(a), z2(b) {
  double m = std::max(std::abs(z1), std::abs(z2));
  if (!(m > 0.0)) fail(errc::invalid_params, "zero homogeneous pair");
  z1 /= m;
  z2 /= m;
}

SpherePoint::SpherePoint(cx affine) : SpherePoint(affine, cx(1)) {}

cx pair_det(const SpherePoint& p, const SpherePoint& q) {
  return p.z1 * q.z2 - p.z2 * q.z1;
}

double chordal(const SpherePoint& p, const SpherePoint& q) {
  double np = std::sqrt(std::norm(p.z1) + std::norm(p.z2));
  double nq = std::sqrt(std::norm(q.z1) + std::norm(q.z2));
  return 2.0 * std::abs(pair_det(p, q)) / (np * nq);
}

MoebiusMap::MoebiusMap(cx a_, cx b_, cx c_, cx d_) : a(a_), b(b_), c(c_), d(d_) {
  cx det = a * d - b * c;
  if (std::abs(det) < 1e-300) fail(errc::invalid_params, "singular matrix");
  cx s = std::sqrt(det);
  a /= s;
  b /= s;
  c /= s;
  d /= s;
}

MoebiusMap MoebiusMap::geodesic(double t) {
  return MoebiusMap(std::exp(t), 0.0, 0.0, std::exp(-t));
}
MoebiusMap MoebiusMap::horocycle_u(double s) { return MoebiusMap(1.0, s, 0.0, 1.0); }
MoebiusMap MoebiusMap::horocycle_v(double s) {
  return MoebiusMap(1.0, cx(0.0, s), 0.0, 1.0);
}
MoebiusMap MoebiusMap::translation(cx b) { return MoebiusMap(1.0, b, 0.0, 1.0); }
MoebiusMap MoebiusMap::scaling(cx k) { return MoebiusMap(k, 0.0, 0.0, 1.0); }

double MoebiusMap::det_error() const { return std::abs(a * d - b * c - cx(1)); }

MoebiusMap operator*(const MoebiusMap& m, const MoebiusMap& n) {
  return MoebiusMap(m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d,
                    m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d);
}

SpherePoint apply_moebius(const MoebiusMap& m, const SpherePoint& p) {
  return SpherePoint(m.a * p.z1 + m.b * p.z2, m.c * p.z1 + m.d * p.z2);
}

double psl2_distance(const MoebiusMap& m, const MoebiusMap& n) {
  auto frob = [](cx a, cx b, cx c, cx d) {
    return std::sqrt(std::norm(a) + std::norm(b) + std::norm(c) + std::norm(d));
  };
  double plus = frob(m.a - n.a, m.b - n.b, m.c - n.c, m.d - n.d);
  double minus = frob(m.a + n.a, m.b + n.b, m.c + n.c, m.d + n.d);
  return std::min(plus, minus);
}

OrientedCircle::OrientedCircle(double a_, cx b_, double d_) : a(a_), b(b_), d(d_) {
  double det = a * d - std::norm(b);
  if (!(det < 0.0)) fail(errc::invalid_params, "Hermitian matrix has det >= 0");
  double s = std::sqrt(-det);
  a /= s;
  b /= s;
  d /= s;
}

OrientedCircle OrientedCircle::real_line() { return OrientedCircle(0.0, cx(0.0, -1.0), 0.0); }

OrientedCircle OrientedCircle::from_center_radius(cx center, double radius,
                                                  bool disk_positive) {
  if (!(radius > 0.0)) fail(errc::invalid_params, "radius must be positive");
  // |z - c|^2 = r^2  ->  (1/r)|z|^2 - (c/r) zbar - (cbar/r) z + (|c|^2 - r^2)/r
  OrientedCircle out(1.0 / radius, -center / radius,
                     (std::norm(center) - radius * radius) / radius);
  return disk_positive ? out : out.reversed();
}

double OrientedCircle::eval(const SpherePoint& p) const {
  double n = std::norm(p.z1) + std::norm(p.z2);
  double h = a * std::norm(p.z1) + 2.0 * (b * std::conj(p.z1) * p.z2).real() +
             d * std::norm(p.z2);
  return h / n;
}

bool OrientedCircle::contains(const SpherePoint& p, double eps) const {
  return std::abs(eval(p)) <= eps;
}

double OrientedCircle::positive_eigenvalue() const {
  // eigenvalues tr/2 +- sqrt((a-d)^2/4 + |b|^2); det = -1 so product is -1
  double tr_half = 0.5 * (a + d);
  double rad = std::sqrt(0.25 * (a - d) * (a - d) + std::norm(b));
  return tr_half + rad;
}

double OrientedCircle::cap_angular_radius() const {
  return 2.0 * std::atan(1.0 / positive_eigenvalue());
}

double OrientedCircle::cap_chordal_diameter() const {
  double alpha = cap_angular_radius();
  return alpha >= 0.5 * M_PI ? 2.0 : 2.0 * std::sin(alpha);
}

cx OrientedCircle::center() const {
  if (is_line()) fail(errc::numeric_failure, "line has no euclidean center");
  return -b / a;
}

double OrientedCircle::radius() const {
  if (is_line()) fail(errc::numeric_failure, "line has no euclidean radius");
  return 1.0 / std::abs(a);
}

double circle_distance(const OrientedCircle& c1, const OrientedCircle& c2) {
  double da = c1.a - c2.a;
  double dd = c1.d - c2.d;
  cx db = c1.b - c2.b;
  return std::sqrt(da * da + dd * dd + 2.0 * std::norm(db));
}

double circle_distance_unoriented(const OrientedCircle& c1, const OrientedCircle& c2) {
  return std::min(circle_distance(c1, c2), circle_distance(c1, c2.reversed()));
}

OrientedCircle map_circle(const MoebiusMap& m, const OrientedCircle& c) {
  MoebiusMap n = m.inverse();
  // (n)* M n with M = (a, b; conj b, d)
  cx col1_1 = c.a * n.a + c.b * n.c;
  cx col1_2 = std::conj(c.b) * n.a + c.d * n.c;
  cx col2_1 = c.a * n.b + c.b * n.d;
  cx col2_2 = std::conj(c.b) * n.b + c.d * n.d;
  cx a_new = std::conj(n.a) * col1_1 + std::conj(n.c) * col1_2;
  cx b_new = std::conj(n.a) * col2_1 + std::conj(n.c) * col2_2;
  cx d_new = std::conj(n.b) * col2_1 + std::conj(n.d) * col2_2;
  return OrientedCircle(a_new.real(), b_new, d_new.real());
}

MoebiusMap map_to_standard(const SpherePoint& p, const SpherePoint& q,
                           const SpherePoint& r) {
  cx qr = pair_det(q, r);
  cx qp = pair_det(q, p);
  if (std::abs(pair_det(p, q)) < 1e-14 || std::abs(qr) < 1e-14 ||
      std::abs(pair_det(p, r)) < 1e-14)
    fail(errc::degenerate_triple, "points must be pairwise distinct");
  // z -> det(z,p) det(q,r) / (det(z,r) det(q,p))
  return MoebiusMap(p.z2 * qr, -p.z1 * qr, r.z2 * qp, -r.z1 * qp);
}

OrientedCircle circle_through(const SpherePoint& p, const SpherePoint& q,
                              const SpherePoint& r) {
  MoebiusMap h = map_to_standard(p, q, r);
  return map_circle(h.inverse(), OrientedCircle::real_line());
}

cx cross_ratio(const SpherePoint& p1, const SpherePoint& p2,
               const SpherePoint& p3, const SpherePoint& p4) {
  cx d41 = pair_det(p4, p1);
  cx d23 = pair_det(p2, p3);
  cx d43 = pair_det(p4, p3);
  cx d21 = pair_det(p2, p1);
  if (std::abs(d23) < 1e-14 || std::abs(d21) < 1e-14 || std::abs(d43) < 1e-14 ||
      std::abs(pair_det(p1, p3)) < 1e-14)
    fail(errc::degenerate_triple, "cross-ratio needs pairwise distinct points");
  return (d41 * d23) / (d43 * d21);
}

double inversive_product(const OrientedCircle& c1, const OrientedCircle& c2) {
  // tr(M1 adj M2) / 2 with adj(a,b;bbar,d) = (d,-b;-bbar,a)
  return 0.5 * (c1.a * c2.d + c1.d * c2.a - 2.0 * (c1.b * std::conj(c2.b)).real());
}

MoebiusMap circle_chart(const OrientedCircle& c) {
  // M = U diag(lambda, -1/lambda) U*; chart = U diag(1/sqrt(lambda), sqrt(lambda)).
  double lambda = c.positive_eigenvalue();
  cx u1, u2;
  if (std::abs(c.b) > 1e-14 * (std::abs(c.a) + std::abs(c.d) + 1.0)) {
    u1 = c.b;
    u2 = cx(lambda - c.a);
  } else {
    // nearly diagonal: eigenvectors are the coordinate axes
    if (c.a >= c.d) {
      u1 = cx(1);
      u2 = cx(0);
    } else {
      u1 = cx(0);
      u2 = cx(1);
    }
  }
  double n = std::sqrt(std::norm(u1) + std::norm(u2));
  u1 /= n;
  u2 /= n;
  // fix phase: largest-modulus component real positive
  cx anchor = std::abs(u1) >= std::abs(u2) ? u1 : u2;
  cx phase = std::abs(anchor) / anchor;
  u1 *= phase;
  u2 *= phase;
  // second column: orthogonal unit vector (-conj u2, conj u1)
  cx v1 = -std::conj(u2), v2 = std::conj(u1);
  double rl = 1.0 / std::sqrt(lambda), rs = std::sqrt(lambda);
  return MoebiusMap(u1 * rl, v1 * rs, u2 * rl, v2 * rs);
}

double chart_angle(const MoebiusMap& chart, const SpherePoint& p) {
  SpherePoint q = apply_moebius(chart.inverse(), p);
  return norm_angle(std::arg(q.z1 * std::conj(q.z2)));
}

SpherePoint chart_point(const MoebiusMap& chart, double theta) {
  return apply_moebius(chart, SpherePoint(std::polar(1.0, theta), cx(1)));
}

double point_circle_distance(const SpherePoint& p, const OrientedCircle& c) {
  // rotate the circle to |w| = r; chordal distance has a closed form there
  MoebiusMap chart = circle_chart(c);
  // chart = U diag(r^-1/2, r^1/2) maps unit circle to c; U* maps c to a
  // concentric circle of radius 1/lambda around 0
  double lambda = c.positive_eigenvalue();
  double r = 1.0 / lambda;
  // recover U from the chart columns (undo the diagonal scaling)
  cx u1 = chart.a * std::sqrt(lambda);  // chart.a = u1 / sqrt(lambda)
  cx u2 = chart.c * std::sqrt(lambda);
  cx v1 = chart.b / std::sqrt(lambda);
  cx v2 = chart.d / std::sqrt(lambda);
  // w = U^{-1} p = (conj(u1) z1 + conj(u2) z2, conj(v1) z1 + conj(v2) z2)
  cx w1 = std::conj(u1) * p.z1 + std::conj(u2) * p.z2;
  cx w2 = std::conj(v1) * p.z1 + std::conj(v2) * p.z2;
  double aw = std::abs(w1), bw = std::abs(w2);
  // chordal distance from (w1 : w2) to {|w| = r}: 2 | |w1/w2| - r | / sqrt(...)
  // in homogeneous form, robust at infinity:
  double num = std::abs(aw - r * bw);
  double den = std::sqrt((aw * aw + bw * bw) * (1.0 + r * r));
  return 2.0 * num / den;
}

double norm_angle(double theta) {
  double t = std::fmod(theta, kTwoPi);
  if (t < 0.0) t += kTwoPi;
  if (t >= kTwoPi) t = 0.0;
  return t;
}

double ccw_gap(double a, double b) {
  double g = norm_angle(b) - norm_angle(a);
  if (g <= 0.0) g += kTwoPi;
  return g;
}

bool in_open_arc(double theta, double start, double len) {
  double off = norm_angle(theta - start);
  return off > 0.0 && off < len;
}

}  // namespace ks
