#pragma once

// Geometry on the Riemann sphere: points in homogeneous coordinates,
// Moebius maps as unimodular 2x2 complex matrices, and oriented circles
// as Hermitian matrices of determinant -1.
//
// Conventions:
//  * A point is a pair (z1, z2), not both zero, scaled so max(|z1|,|z2|) = 1.
//    Infinity is (1, 0); the affine point z is (z, 1).
//  * A circle is the zero set of H(p) = p* M p with M Hermitian, det M = -1.
//    The positive side of an oriented circle is where H < 0.  With this sign
//    convention the standard unit circle diag(1,-1) has positive side = the
//    unit disk, and the standard real line (0,-i; i,0) has positive side =
//    the upper half plane.  Reversing orientation negates M.
//  * g in PSL2(C) sends M to (g^-1)* M (g^-1); incidence and sides are
//    preserved exactly.

#include <array>
#include <complex>
#include <vector>

#include "ks/errors.hpp"
#include "ks/tolerances.hpp"

namespace ks {

using cx = std::complex<double>;

struct SpherePoint {
  cx z1{0.0, 0.0};
  cx z2{1.0, 0.0};

  SpherePoint() = default;
  SpherePoint(cx a, cx b);          // homogeneous, renormalized
  explicit SpherePoint(cx affine);  // the point z = affine
  static SpherePoint infinity() { return SpherePoint(cx(1), cx(0)); }

  bool is_infinity(double eps = 1e-14) const { return std::abs(z2) <= eps; }
  cx affine() const { return z1 / z2; }  // caller checks !is_infinity
};

// det(p, q) = z1*w2 - z2*w1; vanishes iff p == q projectively.
cx pair_det(const SpherePoint& p, const SpherePoint& q);

// Chordal metric on the sphere, range [0, 2].
double chordal(const SpherePoint& p, const SpherePoint& q);

struct MoebiusMap {
  // row-major (a b; c d), normalized to det = 1 (up to overall sign)
  cx a{1}, b{0}, c{0}, d{1};

  MoebiusMap() = default;
  MoebiusMap(cx a_, cx b_, cx c_, cx d_);  // renormalizes

  static MoebiusMap identity() { return {}; }
  static MoebiusMap geodesic(double t);       // a(t) = diag(e^t, e^-t)
  static MoebiusMap horocycle_u(double s);    // n_s = (1 s; 0 1), s real
  static MoebiusMap horocycle_v(double s);    // v(s) = (1 is; 0 1), s real
  static MoebiusMap translation(cx b);        // z -> z + b
  static MoebiusMap scaling(cx k);            // z -> k z, k != 0

  MoebiusMap inverse() const { return MoebiusMap(d, -b, -c, a); }
  double det_error() const;  // |det - 1|
};

MoebiusMap operator*(const MoebiusMap& m, const MoebiusMap& n);
SpherePoint apply_moebius(const MoebiusMap& m, const SpherePoint& p);

// Distance between maps in PSL2: min over the sign ambiguity of the
// entrywise Frobenius norm.
double psl2_distance(const MoebiusMap& m, const MoebiusMap& n);

struct OrientedCircle {
  // Hermitian (a, b; conj b, d), a and d real, det = a*d - |b|^2 = -1.
  double a{1.0};
  cx b{0.0, 0.0};
  double d{-1.0};

  OrientedCircle() = default;                    // unit circle, disk positive
  OrientedCircle(double a_, cx b_, double d_);   // rescales det to -1

  static OrientedCircle unit_circle() { return {}; }
  static OrientedCircle real_line();             // upper half plane positive
  static OrientedCircle from_center_radius(cx center, double radius,
                                           bool disk_positive = true);

  OrientedCircle reversed() const { return OrientedCircle(-a, -b, -d); }

  // Hermitian form at p, scale-invariantly normalized by |p|^2.
  double eval(const SpherePoint& p) const;
  bool contains(const SpherePoint& p, double eps = tol().incidence) const;
  bool positive_side(const SpherePoint& p) const { return eval(p) < 0.0; }

  // Eigenvalues (lambda, -1/lambda), lambda > 0.
  double positive_eigenvalue() const;

  // Spherical cap data for the positive side: angular radius in (0, pi),
  // via the eigenvalue (alpha = 2*atan(1/lambda)); chordal diameter of the cap.
  double cap_angular_radius() const;
  double cap_chordal_diameter() const;

  bool is_line(double eps = 1e-12) const { return std::abs(a) <= eps; }
  cx center() const;      // euclidean center (lines: fails)
  double radius() const;  // euclidean radius (lines: fails)
};

// Orientation-sensitive circle metric: Frobenius distance of the
// det = -1 Hermitian representatives.
double circle_distance(const OrientedCircle& c1, const OrientedCircle& c2);

// Unoriented variant: min over the two orientations of c2.
double circle_distance_unoriented(const OrientedCircle& c1, const OrientedCircle& c2);

// Image circle of c under m; incidence and positive sides commute with
// apply_moebius.
OrientedCircle map_circle(const MoebiusMap& m, const OrientedCircle& c);

// Circle through three distinct points, oriented so that (p, q, r) is
// positively ordered (the map sending them to (0, 1, inf) carries the
// positive side to the upper half plane).
OrientedCircle circle_through(const SpherePoint& p, const SpherePoint& q,
                              const SpherePoint& r);

// Moebius map sending (p, q, r) to (0, 1, inf).
MoebiusMap map_to_standard(const SpherePoint& p, const SpherePoint& q,
                           const SpherePoint& r);

// Cross-ratio under the convention (p1, p2, p3) -> (0, 1, inf), evaluated
// at p4.  Moebius-invariant.
cx cross_ratio(const SpherePoint& p1, const SpherePoint& p2,
               const SpherePoint& p3, const SpherePoint& p4);

// Moebius-invariant inversive product of two oriented circles.  For two
// disjoint round disks given as positive sides, the value exceeds 1, and the
// hyperbolic distance between the hulls of their boundaries is acosh of it.
double inversive_product(const OrientedCircle& c1, const OrientedCircle& c2);

// Canonical chart of a circle: a Moebius map taking the unit circle to c with
// H_c(chart(p)) = H_unit(p), so angle theta -> chart * (e^{i theta}, 1)
// traverses c leaving the positive side on the left.  Deterministic in the
// matrix entries of c.
MoebiusMap circle_chart(const OrientedCircle& c);

// Angle of a point p on c in the chart above (in [0, 2pi)).
double chart_angle(const MoebiusMap& chart, const SpherePoint& p);
SpherePoint chart_point(const MoebiusMap& chart, double theta);

// Exact chordal distance from a point to a circle.
double point_circle_distance(const SpherePoint& p, const OrientedCircle& c);

// Open arc on a parent circle, in the canonical chart of the parent:
// start angle in [0, 2pi), positive length < 2pi.
struct CircleArc {
  OrientedCircle parent;
  double start{0.0};
  double length{0.0};
  bool open_start{true};
  bool open_end{true};
};

// Angle helpers (all angles reduced to [0, 2pi)).
double norm_angle(double theta);
// Length of the positive-direction arc from a to b, in (0, 2pi].
double ccw_gap(double a, double b);
// Whether theta lies in the open positive-direction arc (start, start+len).
bool in_open_arc(double theta, double start, double len);

}  // namespace ks
