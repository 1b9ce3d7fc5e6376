#pragma once

namespace ks {

// Central tolerance table.  "strict" tightens incidence checks for
// high-precision runs; "default" is what the test suite pins.
struct Tolerances {
  double normalization = 1e-12;  // |det - 1| after renormalizing a map
  double incidence = 1e-10;      // Hermitian form residual for "point on circle"
  double circle_match = 1e-8;    // Frobenius distance for "same oriented circle"
  double dedup = 1e-7;           // point / circle de-duplication
  double angle = 1e-12;          // angular comparisons on a circle chart
};

inline const Tolerances& tol() {
  static Tolerances t;
  return t;
}

Tolerances make_profile(const char* name);  // "default" | "strict"

}  // namespace ks
