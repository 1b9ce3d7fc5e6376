#pragma once

// Conformal modulus of ring domains, normalized so a round annulus
// 1 < |z| < R has modulus log(R) / 2pi.
//
// Two kinds of rings appear:
//  * RoundRing: the region between two round disks with disjoint closures.
//    Its modulus is computed by an explicit Moebius normalization to
//    concentric position; independently, the hyperbolic distance between the
//    hulls of the boundary circles equals 2pi times the modulus.
//  * FourPointConfig: the sphere minus two disjoint closed arcs of a circle.
//    Writing the four arc lengths in cyclic order as beta1 (removed), alpha1,
//    beta2 (removed), alpha2, the modulus is a strictly increasing function F
//    of the invariant
//        x = sin(alpha1/2) sin(alpha2/2) / (sin(beta1/2) sin(beta2/2)),
//    which equals the cross-ratio coordinate sending the endpoints to
//    (-1, 0, x, inf).  F(x) = mod of C^ - ([-1,0] u [x,inf]), evaluated with
//    arithmetic-geometric means.

#include <array>

#include "ks/sphere.hpp"

namespace ks {

double agm(double a, double b);

// F(x): modulus of the two-slit ring with cross-ratio coordinate x > 0.
// Strictly increasing, F(1) = 1/2.
double two_slit_modulus(double x);

// Inverse of F (bisection).
double two_slit_modulus_inverse(double mod);

struct RoundRing {
  OrientedCircle disk1;  // positive side = the disk
  OrientedCircle disk2;

  RoundRing(OrientedCircle d1, OrientedCircle d2);  // checks disjoint closures
  double inversive() const { return inversive_product(disk1, disk2); }
};

// Modulus via Moebius normalization to concentric circles |z| = r1, r2
// (the pencil through the two boundary circles has two degenerate points,
// which are sent to 0 and infinity).  Returns log(r2/r1)/2pi.
double round_ring_modulus(const RoundRing& r);

// Hyperbolic distance in H^3 between the hulls of the two boundary circles:
// acosh of the inversive product.  Equals 2pi * round_ring_modulus.
double disk_pair_distance(const RoundRing& r);

// The normalizing map used by round_ring_modulus (limit points -> 0, inf).
MoebiusMap concentric_normalization(const RoundRing& r);

struct FourPointConfig {
  OrientedCircle circle;
  MoebiusMap chart;              // canonical chart of the circle
  std::array<double, 4> angle;   // strictly cyclic in the chart
  // removed arcs: I1 = (angle[0] -> angle[1]), I2 = (angle[2] -> angle[3])

  static FourPointConfig from_points(const OrientedCircle& c,
                                     const std::array<SpherePoint, 4>& pts);
  static FourPointConfig from_angles(const OrientedCircle& c,
                                     const std::array<double, 4>& angles);

  SpherePoint point(int i) const { return chart_point(chart, angle[i]); }
  // cyclic arc lengths beta1, alpha1, beta2, alpha2
  std::array<double, 4> arc_lengths() const;
};

// Cross-ratio coordinate x of the configuration (see header comment).
double cross_ratio_parameter(const FourPointConfig& cfg);

// mod(A, C): modulus of the sphere minus the two closed removed arcs.
double arc_ring_modulus(const FourPointConfig& cfg);

// Length ratio t = min(alpha) / min(beta) of kept to removed arcs.
double arc_length_ratio(const FourPointConfig& cfg);

// Certified bounds delta(t) <= mod(A, C) <= Delta(t) over all configurations
// with length ratio t.  Both are increasing and continuous; they come from
// the sharp range x in [t^2/(1+2t), t(t+2)] of the cross-ratio coordinate.
struct XRatioBounds {
  double delta;
  double Delta;
};
XRatioBounds xratio_bounds(double t);

// Teichmueller comparison: any round ring b separating the endpoints of I1
// from the endpoints of I2 satisfies mod(b) <= mod(A, C).  Returns the truth
// of that inequality (with 1e-9 slack); throws NotSeparating if b does not
// separate the endpoint pairs.
bool check_teichmuller(const RoundRing& b, const FourPointConfig& cfg);

}  // namespace ks
