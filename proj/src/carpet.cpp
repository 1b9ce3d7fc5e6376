#include "ks/carpet.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace ks {

namespace {

constexpr double kTwoPi = 6.28318530717958647692528676655900577;
constexpr double kPi = 3.14159265358979323846264338327950288;

void grid_cells(double cx_, double cy, double side, int gen, int depth, double gap,
                DiskFamily& out) {
  if (gen > depth) return;
  double sub = side / 3.0;
  out.disks.push_back(OrientedCircle::from_center_radius(
      cx(cx_, cy), 0.5 * sub * (1.0 - gap)));
  out.generation.push_back(gen);
  if (gen == depth) return;
  for (int i = -1; i <= 1; ++i)
    for (int j = -1; j <= 1; ++j) {
      if (i == 0 && j == 0) continue;
      grid_cells(cx_ + i * sub, cy + j * sub, sub, gen + 1, depth, gap, out);
    }
}

void nested_intervals(double lo, double hi, int gen, int depth, double gap,
                      DiskFamily& out) {
  if (gen > depth) return;
  double third = (hi - lo) / 3.0;
  double a = lo + third, b = hi - third;
  out.disks.push_back(OrientedCircle::from_center_radius(
      cx(0.5 * (a + b), 0.0), 0.5 * (b - a) * (1.0 - gap)));
  out.generation.push_back(gen);
  if (gen == depth) return;
  nested_intervals(lo, a, gen + 1, depth, gap, out);
  nested_intervals(b, hi, gen + 1, depth, gap, out);
}

}  // namespace

DiskFamily synth_carpet(CarpetStyle style, int depth, double gap) {
  if (depth < 1 || !(gap > 0.0) || !(gap < 1.0))
    fail(errc::invalid_params, "need depth >= 1 and 0 < gap < 1");
  DiskFamily f;
  f.depth = depth;
  f.gap = gap;
  if (style == CarpetStyle::grid) {
    f.style = "grid";
    grid_cells(0.0, 0.0, 2.0, 1, depth, gap, f);
  } else {
    f.style = "nested";
    nested_intervals(-1.0, 1.0, 1, depth, gap, f);
  }
  if (f.size() >= 2) f.delta = family_modulus(f, 2'000'000).delta;
  return f;
}

FamilyModulusReport family_modulus(const DiskFamily& f, size_t pair_budget) {
  size_t n = f.size();
  if (n < 2) fail(errc::too_few_disks, "family modulus needs at least two disks");
  FamilyModulusReport rep;
  size_t total_pairs = n * (n - 1) / 2;
  auto consider = [&](size_t i, size_t j) {
    double ip = inversive_product(f.disks[i], f.disks[j]);
    if (!(ip > 1.0))
      fail(errc::disks_not_disjoint, "family contains a non-disjoint disk pair");
    double mod = std::acosh(ip) / kTwoPi;
    ++rep.pairs_checked;
    if (rep.argmin_i < 0 || mod < rep.delta) {
      rep.delta = mod;
      rep.argmin_i = static_cast<int>(i);
      rep.argmin_j = static_cast<int>(j);
    }
  };
  rep.delta = std::numeric_limits<double>::infinity();
  if (total_pairs <= pair_budget) {
    for (size_t i = 0; i < n; ++i)
      for (size_t j = i + 1; j < n; ++j) consider(i, j);
    return rep;
  }
  // pruned scan: each disk against its nearest neighbors by chordal
  // distance between cap centers (the minimizing pair is a local one)
  rep.exhaustive = false;
  size_t k = std::max<size_t>(8, pair_budget / n);
  std::vector<SpherePoint> centers;
  centers.reserve(n);
  for (const auto& d : f.disks) {
    MoebiusMap ch = circle_chart(d);
    centers.push_back(apply_moebius(ch, SpherePoint(cx(0), cx(1))));
  }
  std::vector<std::pair<double, size_t>> dist(n);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j)
      dist[j] = {j == i ? 1e9 : chordal(centers[i], centers[j]), j};
    size_t kk = std::min(k, n - 1);
    std::partial_sort(dist.begin(), dist.begin() + kk, dist.end());
    for (size_t j = 0; j < kk; ++j)
      if (dist[j].second > i) consider(i, dist[j].second);
  }
  return rep;
}

LabeledGapSystem slice_circle(const DiskFamily& f, const OrientedCircle& c) {
  LabeledGapSystem gs;
  gs.circle = c;
  gs.chart = circle_chart(c);
  gs.family_delta = f.delta;
  MoebiusMap inv = gs.chart.inverse();
  for (size_t i = 0; i < f.size(); ++i) {
    // pull the disk back to the unit-circle chart; on e^{i theta} the form is
    // (a + d) + 2|b| cos(theta - arg b)
    OrientedCircle n = map_circle(inv, f.disks[i]);
    double s = n.a + n.d;
    double m = 2.0 * std::abs(n.b);
    if (m < 1e-15) {
      if (s < 0.0) gs.whole_circle_label = static_cast<int>(i);
      continue;
    }
    double c0 = s / m;
    if (c0 <= -1.0) {
      gs.whole_circle_label = static_cast<int>(i);
      continue;
    }
    if (c0 >= 1.0) continue;  // empty or tangent trace
    double w = kPi - std::acos(-c0);  // half-width of {form < 0}
    if (2.0 * w <= tol().angle) continue;
    if (2.0 * w >= kTwoPi - 1e-12) {
      gs.whole_circle_label = static_cast<int>(i);
      continue;
    }
    double center = std::arg(n.b) + kPi;
    gs.arcs.push_back({static_cast<int>(i), norm_angle(center - w), 2.0 * w});
  }
  std::sort(gs.arcs.begin(), gs.arcs.end(),
            [](const GapArc& x, const GapArc& y) { return x.start < y.start; });
  return gs;
}

void validate_gap_system(const LabeledGapSystem& gs) {
  const auto& a = gs.arcs;
  double total = 0.0;
  for (const auto& arc : a) {
    if (!(arc.length > 0.0) || arc.length >= kTwoPi)
      fail(errc::invalid_params, "gap arc length must be in (0, 2pi)");
    total += arc.length;
  }
  if (total >= kTwoPi) fail(errc::invalid_params, "gap arcs cover the circle");
  if (a.size() < 2) return;
  for (size_t i = 0; i + 1 < a.size(); ++i)
    if (!(a[i].start < a[i + 1].start))
      fail(errc::invalid_params, "gap arcs must be sorted by start angle");
  for (size_t i = 0; i < a.size(); ++i) {
    const GapArc& cur = a[i];
    const GapArc& nxt = a[(i + 1) % a.size()];
    // closure of cur must end strictly before the next arc starts (ccw)
    if (!(cur.length < ccw_gap(cur.start, nxt.start)))
      fail(errc::invalid_params, "gap arc closures must be pairwise disjoint");
  }
}

std::vector<SpherePoint> carpet_boundary_cloud(const DiskFamily& f, double spacing) {
  if (!(spacing > 0.0)) fail(errc::invalid_params, "spacing must be positive");
  std::vector<SpherePoint> cloud;
  for (const auto& d : f.disks) {
    MoebiusMap ch = circle_chart(d);
    double circ = kTwoPi * std::sin(d.cap_angular_radius());
    int n = std::max(8, static_cast<int>(std::ceil(circ / spacing)));
    for (int k = 0; k < n; ++k)
      cloud.push_back(chart_point(ch, kTwoPi * k / n));
  }
  return cloud;
}

}  // namespace ks
