#include "ks/slicer.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>

namespace ks {

namespace {

constexpr double kTwoPi = 6.28318530717958647692528676655900577;
constexpr double kPi = 3.14159265358979323846264338327950288;

struct Candidate {
  double length;
  double start;
  double end;
  int type;
};

// deterministic ranking: longest first, then smallest start, end, type
bool better(const Candidate& a, const Candidate& b) {
  if (a.length != b.length) return a.length > b.length;
  if (a.start != b.start) return a.start < b.start;
  if (a.end != b.end) return a.end < b.end;
  return a.type < b.type;
}

struct EndpointSet {
  std::vector<int> type;
  std::vector<double> angle;
  size_t size() const { return angle.size(); }
};

EndpointSet collect_endpoints(const LabeledGapSystem& gaps) {
  EndpointSet e;
  for (const auto& arc : gaps.arcs) {
    e.type.push_back(arc.label);
    e.angle.push_back(arc.start);
    e.type.push_back(arc.label);
    e.angle.push_back(norm_angle(arc.start + arc.length));
  }
  return e;
}

}  // namespace

double first_bridge_target() { return 0.55 * kTwoPi; }

double stretch_lambda(double length, double target_length) {
  return std::tan(0.25 * target_length) / std::tan(0.25 * length);
}

double stretched_angle(double theta, double mid, double lambda) {
  double rel = norm_angle(theta - mid);  // stretch fixes mid and mid + pi
  double half = 0.5 * (rel <= kPi ? rel : rel - kTwoPi);  // in (-pi/2, pi/2]
  double out = 2.0 * std::atan(lambda * std::tan(half));
  return norm_angle(out + mid);
}

namespace {

struct Extraction {
  const LabeledGapSystem& gaps;
  const StopRule& stop;
  EndpointSet pts;  // working endpoint set (angles mutate on normalization)
  CantorApprox out;

  Extraction(const LabeledGapSystem& g, const StopRule& s) : gaps(g), stop(s) {}

  // candidate admits a different-type bridge disjoint from it iff some other
  // label has two endpoints in the closed complement arc
  bool has_disjoint_other_type(const Candidate& c) const {
    double lo = c.end;
    double comp = kTwoPi - c.length;
    std::map<int, std::pair<double, double>> extremes;
    for (size_t i = 0; i < pts.size(); ++i) {
      if (pts.type[i] == c.type) continue;
      double off = norm_angle(pts.angle[i] - lo);
      if (off > comp) continue;
      auto [it, fresh] = extremes.try_emplace(pts.type[i], off, off);
      if (!fresh) {
        it->second.first = std::min(it->second.first, off);
        it->second.second = std::max(it->second.second, off);
      }
    }
    for (const auto& [t, mm] : extremes)
      if (mm.second > mm.first) return true;
    return false;
  }

  // best candidate among all ordered same-label endpoint pairs, whole circle
  std::optional<Candidate> best_full_circle(bool need_viable) const {
    std::map<int, std::vector<double>> by_label;
    for (size_t i = 0; i < pts.size(); ++i) by_label[pts.type[i]].push_back(pts.angle[i]);
    std::optional<Candidate> best;
    for (const auto& [t, angles] : by_label)
      for (double s : angles)
        for (double e : angles) {
          if (s == e) continue;
          Candidate c{ccw_gap(s, e), s, e, t};
          if (best && !better(c, *best)) continue;
          if (need_viable && !has_disjoint_other_type(c)) continue;
          best = c;
        }
    return best;
  }

  void renormalize_first(BridgeArc& b) {
    out.normalization = MoebiusMap::identity();
    out.chart = gaps.chart;
    if (b.length > kPi) return;
    double mid = norm_angle(b.start + 0.5 * b.length);
    double lambda = stretch_lambda(b.length, first_bridge_target());
    double e0 = b.end();
    for (auto& a : pts.angle) a = stretched_angle(a, mid, lambda);
    double s = stretched_angle(b.start, mid, lambda);
    double e = stretched_angle(e0, mid, lambda);
    b.start = s;
    b.length = ccw_gap(s, e);
    // the stretch as an element of the circle stabilizer:
    // rot(mid) o (z -> (z+c)/(1+cz)) o rot(-mid), with lambda = (1-c)/(1+c)
    double c = (1.0 - lambda) / (1.0 + lambda);
    MoebiusMap rot(std::polar(1.0, 0.5 * mid), 0.0, 0.0, std::polar(1.0, -0.5 * mid));
    MoebiusMap stretch(1.0, c, c, 1.0);
    MoebiusMap S = rot * stretch * rot.inverse();
    out.chart = gaps.chart * S.inverse();
    out.normalization = gaps.chart * S * gaps.chart.inverse();
  }

  // best candidate inside the closed free arc [lo, lo+len]: per label the
  // extreme endpoint pair is the longest; candidates are rebuilt from the raw
  // endpoint angles so ranking agrees bit-for-bit with pair enumeration
  void best_in_interval(double lo, double len, int forbid_type,
                        std::optional<Candidate>& best) const {
    std::map<int, std::pair<size_t, size_t>> extremes;  // type -> (argmin, argmax)
    std::map<int, std::pair<double, double>> offs;
    for (size_t i = 0; i < pts.size(); ++i) {
      int t = pts.type[i];
      if (t == forbid_type) continue;
      double off = norm_angle(pts.angle[i] - lo);
      if (off > len) continue;
      auto it = offs.find(t);
      if (it == offs.end()) {
        offs[t] = {off, off};
        extremes[t] = {i, i};
      } else {
        if (off < it->second.first) {
          it->second.first = off;
          extremes[t].first = i;
        }
        if (off > it->second.second) {
          it->second.second = off;
          extremes[t].second = i;
        }
      }
    }
    for (const auto& [t, mm] : extremes) {
      double s = pts.angle[mm.first];
      double e = pts.angle[mm.second];
      if (s == e) continue;
      Candidate c{ccw_gap(s, e), s, e, t};
      if (!best || better(c, *best)) best = c;
    }
  }

  // free closed arcs between chosen bridges
  std::vector<std::pair<double, double>> free_intervals() const {
    std::vector<BridgeArc> sorted = out.bridges;
    std::sort(sorted.begin(), sorted.end(),
              [](const BridgeArc& a, const BridgeArc& b) { return a.start < b.start; });
    std::vector<std::pair<double, double>> free;
    for (size_t i = 0; i < sorted.size(); ++i) {
      double lo = sorted[i].end();
      double len = ccw_gap(lo, sorted[(i + 1) % sorted.size()].start);
      if (sorted.size() == 1) len = kTwoPi - sorted[i].length;
      if (len > 0.0 && len < kTwoPi) free.push_back({lo, len});
    }
    return free;
  }

  void enlarge_first(BridgeArc& i1, const BridgeArc& i2) {
    double w_lo = i2.end();
    double w_len = kTwoPi - i2.length;
    double a = norm_angle(i1.start - w_lo);
    double b = norm_angle(i1.end() - w_lo);
    double best_a = a, best_b = b;
    double raw_start = i1.start, raw_end = i1.end();
    for (size_t i = 0; i < pts.size(); ++i) {
      if (pts.type[i] != i1.type) continue;
      double off = norm_angle(pts.angle[i] - w_lo);
      if (off > w_len) continue;
      if (off < best_a) {
        best_a = off;
        raw_start = pts.angle[i];
      }
      if (off > best_b) {
        best_b = off;
        raw_end = pts.angle[i];
      }
    }
    i1.start = raw_start;
    i1.length = ccw_gap(raw_start, raw_end);
  }

  void finalize(const std::string& reason) {
    out.stop_reason = reason;
    out.circle = gaps.circle;
    if (out.bridges.empty()) {
      out.chart = gaps.chart;
      out.normalization = MoebiusMap::identity();
      out.residual.push_back({0.0, kTwoPi});
    } else {
      for (auto f : free_intervals()) out.residual.push_back(f);
      std::sort(out.residual.begin(), out.residual.end());
    }
    if (!std::isnan(gaps.family_delta)) {
      out.delta_known = true;
      out.delta_certified = std::min(xratio_bounds(1.0).delta, gaps.family_delta);
    }
  }

  CantorApprox run() {
    validate_gap_system(gaps);
    if (gaps.whole_circle_label >= 0)
      fail(errc::single_type_dominates, "one disk trace covers the whole circle");
    out.circle = gaps.circle;
    out.chart = gaps.chart;
    out.normalization = MoebiusMap::identity();
    if (gaps.arcs.empty()) {
      finalize("gaps_exhausted");
      return out;
    }
    pts = collect_endpoints(gaps);
    if (stop.max_bridges <= 0) {
      finalize("max_count");
      return out;
    }
    // stage 1: first bridge, preferring candidates that leave room for a
    // different-type successor; renormalize it to fill > half the circle
    auto first = best_full_circle(true);
    if (!first) first = best_full_circle(false);
    if (!first) fail(errc::no_bridge, "no label admits a bridge");
    if (first->length < stop.min_length) {
      finalize("min_length");
      return out;
    }
    BridgeArc i1{first->start, first->length, first->type};
    renormalize_first(i1);
    out.bridges.push_back(i1);
    if (out.bridges.size() >= static_cast<size_t>(stop.max_bridges)) {
      finalize("max_count");
      return out;
    }
    // stage 2: maximal different-type bridge disjoint from I1, then enlarge
    // I1 to a maximal same-type bridge disjoint from I2
    std::optional<Candidate> second;
    best_in_interval(out.bridges[0].end(), kTwoPi - out.bridges[0].length,
                     out.bridges[0].type, second);
    if (!second) {
      finalize("gaps_exhausted");
      return out;
    }
    if (second->length < stop.min_length) {
      finalize("min_length");
      return out;
    }
    BridgeArc i2{second->start, second->length, second->type};
    enlarge_first(out.bridges[0], i2);
    out.bridges.push_back(i2);
    // induction: longest bridge disjoint from everything chosen
    while (out.bridges.size() < static_cast<size_t>(stop.max_bridges)) {
      std::optional<Candidate> next;
      for (auto [lo, len] : free_intervals()) best_in_interval(lo, len, -1, next);
      if (!next) {
        finalize("gaps_exhausted");
        return out;
      }
      if (next->length < stop.min_length) {
        finalize("min_length");
        return out;
      }
      out.bridges.push_back({next->start, next->length, next->type});
    }
    finalize("max_count");
    return out;
  }
};

}  // namespace

CantorApprox extract_cantor(const LabeledGapSystem& gaps, const StopRule& stop) {
  Extraction ex(gaps, stop);
  return ex.run();
}

LabeledGapSystem transport_gaps(const LabeledGapSystem& gaps, const CantorApprox& ca) {
  LabeledGapSystem out = gaps;
  out.chart = ca.chart;
  for (auto& arc : out.arcs) {
    double s = chart_angle(ca.chart, chart_point(gaps.chart, arc.start));
    double e = chart_angle(ca.chart,
                           chart_point(gaps.chart, norm_angle(arc.start + arc.length)));
    arc.start = s;
    arc.length = ccw_gap(s, e);
  }
  std::sort(out.arcs.begin(), out.arcs.end(),
            [](const GapArc& x, const GapArc& y) { return x.start < y.start; });
  return out;
}

namespace {

double pair_modulus(const BridgeArc& bi, const BridgeArc& bj, double* t_ratio) {
  // removed arcs are the two bridges; kept arcs join them
  double a1 = ccw_gap(bi.end(), bj.start);
  double a2 = ccw_gap(bj.end(), bi.start);
  double b1 = bi.length, b2 = bj.length;
  if (t_ratio) *t_ratio = std::min(a1, a2) / std::min(b1, b2);
  double x = (std::sin(0.5 * a1) * std::sin(0.5 * a2)) /
             (std::sin(0.5 * b1) * std::sin(0.5 * b2));
  return two_slit_modulus(x);
}

}  // namespace

CantorVerifyReport verify_cantor_modulus(const CantorApprox& ca, size_t pair_budget) {
  size_t n = ca.bridges.size();
  if (n < 2) fail(errc::too_few_bridges, "verification needs at least two bridges");
  CantorVerifyReport rep;
  rep.claimed_known = ca.delta_known;
  rep.claimed = ca.delta_certified;
  auto consider = [&](size_t i, size_t j) {
    double t = 0.0;
    double mod = pair_modulus(ca.bridges[i], ca.bridges[j], &t);
    ++rep.pairs_checked;
    if (mod < rep.min_modulus) {
      rep.min_modulus = mod;
      rep.argmin_i = static_cast<int>(i);
      rep.argmin_j = static_cast<int>(j);
    }
    if (ca.bridges[i].type == ca.bridges[j].type)
      rep.min_same_type_ratio = std::min(rep.min_same_type_ratio, t);
  };
  size_t total = n * (n - 1) / 2;
  if (total <= pair_budget) {
    for (size_t i = 0; i < n; ++i)
      for (size_t j = i + 1; j < n; ++j) consider(i, j);
  } else {
    rep.exhaustive = false;
    // angularly nearest pairs dominate the minimum
    size_t k = std::max<size_t>(8, pair_budget / n);
    std::vector<std::pair<double, size_t>> mids(n);
    for (size_t i = 0; i < n; ++i)
      mids[i] = {norm_angle(ca.bridges[i].start + 0.5 * ca.bridges[i].length), i};
    std::sort(mids.begin(), mids.end());
    for (size_t a = 0; a < n; ++a)
      for (size_t step = 1; step <= k && step < n; ++step) {
        size_t b = (a + step) % n;
        size_t i = std::min(mids[a].second, mids[b].second);
        size_t j = std::max(mids[a].second, mids[b].second);
        if (i != j) consider(i, j);
      }
  }
  rep.pass = !rep.claimed_known || rep.min_modulus >= rep.claimed - 1e-9;
  return rep;
}

void check_cantor_invariants(const CantorApprox& ca, const LabeledGapSystem& gaps) {
  const auto& br = ca.bridges;
  if (br.empty()) return;
  for (size_t k = 2; k < br.size(); ++k)
    if (br[k].length > br[k - 1].length + 1e-12)
      fail(errc::numeric_failure, "bridge lengths must be non-increasing");
  if (br.size() >= 2 && br[0].length + 1e-12 < br[1].length)
    fail(errc::numeric_failure, "first bridge must be longest");
  if (br[0].length <= kPi)
    fail(errc::numeric_failure, "first bridge must fill over half the circle");
  // pairwise disjoint closures
  std::vector<BridgeArc> sorted = br;
  std::sort(sorted.begin(), sorted.end(),
            [](const BridgeArc& a, const BridgeArc& b) { return a.start < b.start; });
  for (size_t i = 0; i < sorted.size() && sorted.size() > 1; ++i) {
    const BridgeArc& cur = sorted[i];
    const BridgeArc& nxt = sorted[(i + 1) % sorted.size()];
    if (!(cur.length < ccw_gap(cur.start, nxt.start)))
      fail(errc::numeric_failure, "bridge closures must be pairwise disjoint");
  }
  // three distinct types from the third bridge on
  if (br.size() >= 2 && br[0].type == br[1].type)
    fail(errc::numeric_failure, "first two bridges must differ in type");
  for (size_t k = 2; k < br.size(); ++k)
    if (br[k].type == br[0].type || br[k].type == br[1].type)
      fail(errc::numeric_failure, "bridge types must be distinct from I1 and I2");
  // endpoints lie on the boundary of their label and outside every gap arc
  LabeledGapSystem moved = transport_gaps(gaps, ca);
  for (const auto& b : br) {
    for (double ep : {b.start, b.end()}) {
      double best = 1e9;
      for (const auto& arc : moved.arcs) {
        if (arc.label != b.type) continue;
        for (double ge : {arc.start, norm_angle(arc.start + arc.length)}) {
          double d = std::abs(ep - ge);
          d = std::min(d, kTwoPi - d);
          best = std::min(best, d);
        }
      }
      if (best > 1e-9)
        fail(errc::numeric_failure, "bridge endpoint not on its label boundary");
      for (const auto& arc : moved.arcs) {
        double off = norm_angle(ep - arc.start);
        if (off > 1e-9 && off < arc.length - 1e-9)
          fail(errc::numeric_failure, "bridge endpoint inside a gap arc");
      }
    }
  }
  // residual arcs: positive length, disjoint from all bridges
  for (auto [s, len] : ca.residual) {
    if (!(len > 0.0)) fail(errc::numeric_failure, "residual arc with nonpositive length");
    if (len >= kTwoPi) continue;  // K = C case
    double mid = norm_angle(s + 0.5 * len);
    for (const auto& b : br)
      if (in_open_arc(mid, b.start, b.length))
        fail(errc::numeric_failure, "residual arc meets a bridge");
  }
}

}  // namespace ks
