#pragma once

// Frame-bundle dynamics.  A frame is an element g of PSL2(C), read as the
// image of the base frame at the point above 0 on the vertical axis with
// forward direction toward infinity; its geodesic has backward endpoint g(0)
// and forward endpoint g(inf).  Geodesic and horocycle flows act on the
// right by a(t) = diag(e^t, e^-t) and n_s = (1 s; 0 1), so the commutation
// a(t) n_s = n_{e^{2t} s} a(t) holds and geodesic flow rescales horocycle
// time by e^{2t}.
//
// Frames cache their endpoints: the geodesic flow copies them verbatim
// (they are mathematically unchanged), which makes renormalized-frame
// membership exactly A-invariant.

#include <optional>
#include <string>
#include <vector>

#include "ks/carpet.hpp"
#include "ks/kleinian.hpp"
#include "ks/slicer.hpp"
#include "ks/thickness.hpp"

namespace ks {

struct Frame {
  MoebiusMap g;
  SpherePoint backward;  // g(0)
  SpherePoint forward;   // g(inf)

  static Frame from_map(const MoebiusMap& m);
  // frame tangent to the hull of c along the geodesic from p_backward to
  // p_forward (both on c)
  static Frame on_circle(const OrientedCircle& c, const SpherePoint& p_backward,
                         const SpherePoint& p_forward);

  // base point in the upper half space model: horizontal part and height
  std::pair<cx, double> base_point() const;
  // boundary circle of the tangent plane, g . R^
  OrientedCircle plane_circle() const { return map_circle(g, OrientedCircle::real_line()); }
  // backward endpoint of the horocycle-translated frame, g(s)
  SpherePoint horocycle_endpoint(double s) const;
};

Frame geodesic_flow(const Frame& x, double t);
Frame horocycle_flow(const Frame& x, double s);

// Renormalized-frame membership: both geodesic endpoints within eps of the
// limit-set cloud (exact for convex cocompact groups, one-sided at finite
// resolution).  Exactly invariant under geodesic_flow.
bool in_rf(const Frame& x, const LimitSetApprox& lam, double eps);

struct ReturnTimeSet {
  double window = 0.0;
  double resolution = 0.0;  // eta
  double eps = 0.0;
  bool forward_escapes = false;  // forward endpoint missed the cloud: empty set
  std::vector<std::pair<double, double>> intervals;

  ThickSetApprox thick_view() const;
};

// Horocycle return times {s in [-window, window] : g(s) within eps of the
// cloud}, scanned at spacing eta and fattened to eta/2 on each side.
ReturnTimeSet return_times(const Frame& x, const LimitSetApprox& lam, double window,
                           double eta, double eps);

struct RfkParams {
  double window = 20.0;
  double eta = 1e-3;
  double eps = 1e-2;
  const DiskFamily* carpet = nullptr;  // optional slice-based candidate
  StopRule stop{0.0, 400};
};

struct CertificateReport {
  bool pass = false;
  double k = 0.0;
  std::string witness;  // "return-times" | "cantor-residual" | "none"
  RfkParams params;
  ReturnTimeSet times;
  std::optional<ThickSetApprox> witness_set;
};

// Attempt to certify x in RF_k M: find a globally k-thick subsystem of the
// return-time set containing 0.  Candidates are the return-time set itself
// and, when carpet data is supplied, the greedy Cantor residual of the slice
// of the frame's plane circle (intersected with the return times).  Failure
// means "not certified at this resolution", never a disproof.
CertificateReport rfk_certificate(const Frame& x, const LimitSetApprox& lam, double k,
                                  const RfkParams& params);

}  // namespace ks
