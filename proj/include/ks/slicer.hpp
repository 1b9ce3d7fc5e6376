#pragma once

// Greedy bridge extraction on a labeled gap system.
//
// A bridge of type i is an open arc whose two endpoints lie on the boundary
// of the arcs labeled i.  The construction picks a first bridge, renormalizes
// the circle so that it fills more than half, picks a maximal bridge of a
// different type disjoint from it, enlarges the first to a maximal same-type
// bridge disjoint from the second, and then repeatedly removes a longest
// bridge disjoint from everything chosen so far.  The complement of the
// chosen bridges is the extracted Cantor approximation.
//
// Selection is fully deterministic: candidates are ranked by (length desc,
// start asc, end asc, type asc), and the first bridge additionally prefers
// candidates that leave room for a different-type successor (on finite data
// the global maximum can swallow every other label, which would truncate the
// construction after one step).

#include <limits>
#include <string>
#include <vector>

#include "ks/carpet.hpp"
#include "ks/sphere.hpp"

namespace ks {

struct StopRule {
  double min_length = 0.0;  // stop before adding a bridge shorter than this
  int max_bridges = std::numeric_limits<int>::max();
};

struct BridgeArc {
  double start;   // chart angle in [0, 2pi), post-normalization
  double length;  // in (0, 2pi)
  int type;       // gap label whose boundary carries both endpoints
  double end() const { return norm_angle(start + length); }
};

struct CantorApprox {
  OrientedCircle circle;
  // unit circle -> sphere; angle phi corresponds to chart * (e^{i phi}, 1).
  // Includes the first-bridge renormalization.
  MoebiusMap chart;
  // sphere -> sphere map that was applied to renormalize the first bridge
  // (identity when the first bridge already filled half the circle)
  MoebiusMap normalization;
  std::vector<BridgeArc> bridges;  // selection order; lengths non-increasing
  std::vector<std::pair<double, double>> residual;  // closed arcs (start, length)
  double delta_certified = std::numeric_limits<double>::quiet_NaN();
  bool delta_known = false;
  std::string stop_reason;  // "min_length" | "max_count" | "gaps_exhausted"

  SpherePoint point(double phi) const { return chart_point(chart, phi); }
};

// Chart stretch used to renormalize the first bridge: theta ->
// 2 atan(lambda tan((theta - mid)/2)) + mid, realized by a hyperbolic
// element of the circle stabilizer expanding away from the midpoint.
double stretch_lambda(double length, double target_length);
double stretched_angle(double theta, double mid, double lambda);

// Target fill for the first bridge (0.55 of the circle).
double first_bridge_target();

CantorApprox extract_cantor(const LabeledGapSystem& gaps, const StopRule& stop);

struct PairModulus {
  int i, j;          // bridge indices
  double modulus;    // mod(A_ij, C)
  bool same_type;
  double t_ratio;    // min(kept)/min(removed) arc-length ratio
};

struct CantorVerifyReport {
  double min_modulus = std::numeric_limits<double>::infinity();
  int argmin_i = -1, argmin_j = -1;
  size_t pairs_checked = 0;
  bool exhaustive = true;
  double min_same_type_ratio = std::numeric_limits<double>::infinity();
  bool claimed_known = false;
  double claimed = std::numeric_limits<double>::quiet_NaN();
  bool pass = false;
};

// Min over bridge pairs (i, j) of the modulus of the circle minus the two
// closed bridges, compared against the certified delta' carried by `ca`.
CantorVerifyReport verify_cantor_modulus(const CantorApprox& ca, size_t pair_budget);

// Structural invariants of an extraction result (monotone lengths, disjoint
// closures, endpoints on the producing label boundaries, three distinct types
// in (I1, I2, Ik) for k >= 3).  Throws on violation; used by tests and by
// `slice verify`.
void check_cantor_invariants(const CantorApprox& ca, const LabeledGapSystem& gaps);

// Gap system with its arcs transported into the (renormalized) chart of `ca`.
LabeledGapSystem transport_gaps(const LabeledGapSystem& gaps, const CantorApprox& ca);

}  // namespace ks
