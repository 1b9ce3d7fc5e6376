#include "ks/thickness.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ks/modulus.hpp"

namespace ks {

ThickSetApprox::ThickSetApprox(std::vector<std::pair<double, double>> iv, double W,
                               double eta)
    : intervals(std::move(iv)), window(W), resolution(eta) {
  if (!(W > 0.0) || !(eta > 0.0))
    fail(errc::invalid_params, "window and resolution must be positive");
  std::sort(intervals.begin(), intervals.end());
  for (size_t i = 0; i < intervals.size(); ++i) {
    auto& [a, b] = intervals[i];
    if (!(a <= b)) fail(errc::invalid_params, "interval with negative length");
    a = std::max(a, -window);
    b = std::min(b, window);
    if (a > b) fail(errc::invalid_params, "interval outside the window");
    if (i > 0 && a <= intervals[i - 1].second)
      fail(errc::invalid_params, "intervals must be disjoint");
  }
}

ThickSetApprox ThickSetApprox::scaled(double lambda) const {
  if (lambda == 0.0) fail(errc::invalid_params, "scale must be nonzero");
  ThickSetApprox out;
  out.window = window * std::abs(lambda);
  out.resolution = resolution * std::abs(lambda);
  for (auto [a, b] : intervals) {
    double x = a * lambda, y = b * lambda;
    out.intervals.push_back({std::min(x, y), std::max(x, y)});
  }
  std::sort(out.intervals.begin(), out.intervals.end());
  return out;
}

ThickSetApprox ThickSetApprox::translated(double x) const {
  ThickSetApprox out;
  out.window = window;
  out.resolution = resolution;
  for (auto [a, b] : intervals) {
    double lo = a - x, hi = b - x;
    if (hi < -window || lo > window) continue;
    out.intervals.push_back({std::max(lo, -window), std::min(hi, window)});
  }
  return out;
}

bool ThickSetApprox::contains(double x, double slack) const {
  for (auto [a, b] : intervals)
    if (x >= a - slack && x <= b + slack) return true;
  return false;
}

namespace {

// magnitude view |T|: fold negative intervals onto [0, inf) and merge
std::vector<std::pair<double, double>> magnitudes(const ThickSetApprox& t) {
  std::vector<std::pair<double, double>> m;
  for (auto [a, b] : t.intervals) {
    if (b <= 0.0)
      m.push_back({-b, -a});
    else if (a >= 0.0)
      m.push_back({a, b});
    else
      m.push_back({0.0, std::max(-a, b)});
  }
  std::sort(m.begin(), m.end());
  std::vector<std::pair<double, double>> merged;
  for (auto [a, b] : m) {
    if (!merged.empty() && a <= merged.back().second) {
      merged.back().second = std::max(merged.back().second, b);
    } else {
      merged.push_back({a, b});
    }
  }
  return merged;
}

}  // namespace

ThicknessReport k_thick_report(const ThickSetApprox& t, double k) {
  if (!(k > 1.0)) fail(errc::bad_k, "thickness constant must exceed 1");
  ThicknessReport rep;
  rep.k = k;
  rep.window = t.window;
  rep.resolution = t.resolution;
  double x_lo = t.resolution;
  double x_hi = t.window / k;
  if (x_hi < x_lo) {  // vacuous window
    rep.pass = true;
    return rep;
  }
  auto mag = magnitudes(t);
  // x is uncovered iff [x, kx] misses every magnitude interval; scan the
  // complementary gaps of |T| for windows of uncovered x
  auto note_gap = [&](double gap_lo, double gap_hi) {
    // uncovered x: x > gap_lo and kx < gap_hi, intersected with [x_lo, x_hi]
    double lo = std::max(gap_lo, x_lo);
    double hi = std::min(gap_hi / k, x_hi);
    if (lo < hi) rep.witness_failures.push_back(0.5 * (lo + hi));
    else if (lo == hi && gap_lo < lo && lo * k < gap_hi)
      rep.witness_failures.push_back(lo);
  };
  if (mag.empty()) {
    note_gap(0.0, std::numeric_limits<double>::infinity());
  } else {
    if (mag.front().first > 0.0) note_gap(0.0, mag.front().first);
    for (size_t i = 0; i + 1 < mag.size(); ++i)
      note_gap(mag[i].second, mag[i + 1].first);
    note_gap(mag.back().second, std::numeric_limits<double>::infinity());
  }
  rep.pass = rep.witness_failures.empty();
  return rep;
}

bool is_k_thick(const ThickSetApprox& t, double k) { return k_thick_report(t, k).pass; }

ThicknessReport globally_k_thick_report(const ThickSetApprox& t, double k) {
  if (!(k > 1.0)) fail(errc::bad_k, "thickness constant must exceed 1");
  ThicknessReport rep;
  rep.k = k;
  rep.window = t.window;
  rep.resolution = t.resolution;
  rep.pass = true;
  auto check_at = [&](double x) {
    if (!rep.pass) return;
    ThicknessReport sub = k_thick_report(t.translated(x), k);
    if (!sub.pass) {
      rep.pass = false;
      rep.witness_failures = sub.witness_failures;
      rep.witness_failures.push_back(x);  // last entry: the failing translate
    }
  };
  for (auto [a, b] : t.intervals) {
    check_at(a);
    if (!rep.pass) return rep;
    long n = static_cast<long>(std::floor((b - a) / t.resolution));
    for (long i = 1; i <= n && rep.pass; ++i) check_at(a + i * t.resolution);
    if (!rep.pass) return rep;
    check_at(b);
    if (!rep.pass) return rep;
  }
  return rep;
}

bool is_globally_k_thick(const ThickSetApprox& t, double k) {
  return globally_k_thick_report(t, k).pass;
}

double global_thickness_threshold(const ThickSetApprox& t, double rel_accuracy,
                                  double k_max) {
  double lo = 1.0 + 1e-9;
  double hi = k_max;
  if (is_globally_k_thick(t, lo)) return lo;
  if (!is_globally_k_thick(t, hi))
    fail(errc::numeric_failure, "no passing k up to the cap");
  while (hi / lo > 1.0 + rel_accuracy) {
    double mid = std::sqrt(lo * hi);
    (is_globally_k_thick(t, mid) ? hi : lo) = mid;
  }
  return hi;
}

double k_from_modulus(double delta) {
  if (!(delta > 0.0)) fail(errc::nonpositive_delta, "modulus must be positive");
  double x = two_slit_modulus_inverse(delta);
  double B = 2.0 + 4.0 / x;
  return 0.5 * B + std::sqrt(0.25 * B * B - 1.0);
}

}  // namespace ks
