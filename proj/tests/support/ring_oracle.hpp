#pragma once

// Independent extremal-length oracle for the two-slit ring modulus.
//
// The configuration is Moebius-normalized so the removed arcs become the
// real slits [-1, 0] and [x, inf].  The upper half plane is then a
// quadrilateral with corners (-1, 0, x, inf); its modulus m (extremal
// distance between the images of the slits) satisfies mod(ring) = m / 2 by
// reflection symmetry.  The oracle recovers m by matching harmonic measures
// of the four boundary sides seen from an interior point z0 = i sqrt(x):
// on the half plane these are exact Cauchy angles (or empirical frequencies
// of exactly-sampled Brownian exit points, which are Cauchy distributed);
// on the rectangle they are Fourier series in the unknowns (m, X, Y).
// Newton inversion of the 3x3 system yields m.
//
// n_samples == 0 selects the exact arctangent probabilities; otherwise
// seeded Monte-Carlo sampling with fixed sharding (deterministic).

#include "ks/modulus.hpp"

namespace ks::testing {

struct RingOracleResult {
  double modulus;      // m / 2
  double quad_modulus; // m
  double X, Y;         // rectangle image of z0
  double prob_sigma;   // binomial std dev per side probability (0 in exact mode)
};

// harmonic measure of the left end {0} x (0,1)-side of (0,a) x (0,b)
double rect_hm_left(double a, double b, double X, double Y);

// modulus of the two-slit ring with cross-ratio coordinate x
RingOracleResult oracle_modulus_from_x(double x, long n_samples, unsigned seed);

// full pipeline from a four-point configuration (normalization by the
// library's Moebius machinery; modulus evaluation independent of it)
RingOracleResult oracle_arc_ring_modulus(const FourPointConfig& cfg, long n_samples,
                                         unsigned seed);

}  // namespace ks::testing
