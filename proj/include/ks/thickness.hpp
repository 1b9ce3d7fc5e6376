#pragma once

// k-thickness of closed subsets of R represented as finite interval unions.
//
// T is k-thick when [1,k] * |T| covers [0, infinity): every x >= 0 admits
// s in T with |s| in [x, kx].  On finite data the quantifier is restricted
// to the window [eta, W/k]; the check itself is exact on the interval
// representation (equivalent to a dyadic grid refined to convergence).
// T is globally k-thick when T - x is k-thick for every x in T, certified
// here over interval endpoints and an eta-spaced grid inside the intervals.

#include <vector>

#include "ks/errors.hpp"

namespace ks {

struct ThickSetApprox {
  std::vector<std::pair<double, double>> intervals;  // closed [a, b], sorted, disjoint
  double window = 1.0;      // declared valid window [-W, W]
  double resolution = 1e-3; // eta

  ThickSetApprox() = default;
  ThickSetApprox(std::vector<std::pair<double, double>> iv, double W, double eta);

  ThickSetApprox scaled(double lambda) const;       // lambda T (window/eta scale too)
  ThickSetApprox translated(double x) const;        // T - x, clipped to the window
  bool contains(double x, double slack = 0.0) const;
};

struct ThicknessReport {
  bool pass = false;
  double k = 0.0;
  double window = 0.0;
  double resolution = 0.0;
  std::vector<double> witness_failures;  // uncovered magnitudes x
};

// Exact check of the windowed k-thickness condition; witnesses report
// uncovered x in [eta, W/k].
ThicknessReport k_thick_report(const ThickSetApprox& t, double k);
bool is_k_thick(const ThickSetApprox& t, double k);

// Global variant: every translate by interval endpoints and interior grid
// points must be k-thick.
ThicknessReport globally_k_thick_report(const ThickSetApprox& t, double k);
bool is_globally_k_thick(const ThickSetApprox& t, double k);

// Smallest passing k for is_globally_k_thick, bracketed to the given relative
// accuracy by bisection (the predicate is monotone in k).
double global_thickness_threshold(const ThickSetApprox& t, double rel_accuracy,
                                  double k_max = 1e4);

// Thickness constant of a Cantor set of modulus delta containing infinity:
// if no point of T has magnitude in [y, ky], the two gaps of R - T around
// +-y give a two-slit configuration whose cross-ratio coordinate is at most
// 4k/(k-1)^2, hence modulus at most F(4k/(k-1)^2).  Requiring that bound to
// fall below delta yields
//     k(delta) = B/2 + sqrt(B^2/4 - 1),   B = 2 + 4 / F^{-1}(delta),
// which is > 1, decreasing in delta, and tends to 1 as delta grows.
double k_from_modulus(double delta);

}  // namespace ks
