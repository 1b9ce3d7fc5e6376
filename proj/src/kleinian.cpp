#include "ks/kleinian.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

namespace ks {

GroupGenerators GroupGenerators::from_maps(std::vector<MoebiusMap> gens,
                                           std::vector<PingPongPair> pairing) {
  if (gens.empty()) fail(errc::invalid_params, "need at least one generator");
  if (gens.size() > 26) fail(errc::invalid_params, "at most 26 generators");
  GroupGenerators g;
  g.gens = std::move(gens);
  g.pairing = std::move(pairing);
  for (size_t i = 0; i < g.gens.size(); ++i)
    g.names.push_back(std::string(1, static_cast<char>('a' + i)));
  if (!g.pairing.empty()) g.check_pairing();
  return g;
}

GroupGenerators GroupGenerators::schottky(const std::vector<std::pair<cx, cx>>& centers,
                                          double radius) {
  if (!(radius > 0.0)) fail(errc::invalid_params, "radius must be positive");
  std::vector<MoebiusMap> gens;
  std::vector<PingPongPair> pairing;
  for (auto [p, q] : centers) {
    // reflection in |z - p| = r followed by reflection in the perpendicular
    // bisector of (p, q): maps the exterior of the p-disk onto the q-disk
    // and sends p -> inf, inf -> q
    cx r2(radius * radius, 0.0);
    MoebiusMap m(q, r2 - p * q, cx(1.0), -p);
    gens.push_back(m);
    pairing.push_back({OrientedCircle::from_center_radius(p, radius),
                       OrientedCircle::from_center_radius(q, radius)});
  }
  auto g = from_maps(std::move(gens), std::move(pairing));
  return g;
}

void GroupGenerators::check_pairing() const {
  if (pairing.size() != gens.size())
    fail(errc::invalid_params, "pairing must list one disk pair per generator");
  for (size_t i = 0; i < gens.size(); ++i) {
    // g maps the exterior of `from` onto the interior of `to`: the image of
    // the reversed `from` circle must coincide with `to` (orientation included)
    OrientedCircle img = map_circle(gens[i], pairing[i].from.reversed());
    if (circle_distance(img, pairing[i].to) > 1e-8)
      fail(errc::invalid_params, "generator does not pair its circles");
  }
  std::vector<const OrientedCircle*> disks;
  for (const auto& pp : pairing) {
    disks.push_back(&pp.from);
    disks.push_back(&pp.to);
  }
  for (size_t i = 0; i < disks.size(); ++i)
    for (size_t j = i + 1; j < disks.size(); ++j)
      if (!(inversive_product(*disks[i], *disks[j]) > 1.0))
        fail(errc::invalid_params, "pairing disks must be pairwise disjoint");
}

namespace {

// letter codes: 2j = generator j, 2j+1 = its inverse
char letter_char(int code) {
  int j = code / 2;
  return static_cast<char>((code % 2 == 0 ? 'a' : 'A') + j);
}

}  // namespace

std::vector<Word> enumerate_words(const GroupGenerators& g, int max_len) {
  if (max_len < 0) fail(errc::invalid_params, "max_len must be >= 0");
  int r = static_cast<int>(g.rank());
  std::vector<MoebiusMap> letter(2 * r);
  for (int j = 0; j < r; ++j) {
    letter[2 * j] = g.gens[j];
    letter[2 * j + 1] = g.gens[j].inverse();
  }
  std::vector<Word> out;
  out.push_back({"", MoebiusMap::identity(), 0});
  std::vector<std::pair<std::vector<int>, MoebiusMap>> frontier;
  frontier.push_back({{}, MoebiusMap::identity()});
  for (int len = 1; len <= max_len; ++len) {
    std::vector<std::pair<std::vector<int>, MoebiusMap>> next;
    for (const auto& [word, map] : frontier)
      for (int code = 0; code < 2 * r; ++code) {
        if (!word.empty() && (word.back() ^ 1) == code) continue;  // free reduction
        auto w = word;
        w.push_back(code);
        next.push_back({w, map * letter[code]});
      }
    // lexicographic in the alphabet a, A, b, B, ... == code order
    std::sort(next.begin(), next.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    for (const auto& [word, map] : next) {
      std::string text;
      for (int code : word) text.push_back(letter_char(code));
      out.push_back({text, map, len});
    }
    frontier = std::move(next);
  }
  return out;
}

unsigned long long reduced_word_count(int rank, int n) {
  if (n == 0) return 1;
  unsigned long long c = 2ull * rank;
  for (int i = 1; i < n; ++i) c *= 2ull * rank - 1;
  return c;
}

bool is_loxodromic(const MoebiusMap& m, double eps) {
  // eigenvalue moduli differ from 1: |tr| outside the segment [-2, 2] of R
  cx tr = m.a + m.d;
  cx lam = 0.5 * (tr + std::sqrt(tr * tr - 4.0));
  double r = std::abs(lam);
  if (r < 1.0) r = 1.0 / r;
  return r > 1.0 + eps;
}

std::pair<SpherePoint, SpherePoint> fixed_points(const MoebiusMap& m) {
  cx tr = m.a + m.d;
  cx disc = std::sqrt(tr * tr - 4.0);
  cx l1 = 0.5 * (tr + disc), l2 = 0.5 * (tr - disc);
  if (std::abs(l1) < std::abs(l2)) std::swap(l1, l2);
  // eigenvector for eigenvalue l: (b, l - a) or (l - d, c)
  auto evec = [&](cx l) {
    cx v1 = m.b, v2 = l - m.a;
    cx w1 = l - m.d, w2 = m.c;
    if (std::norm(v1) + std::norm(v2) >= std::norm(w1) + std::norm(w2))
      return SpherePoint(v1, v2);
    return SpherePoint(w1, w2);
  };
  return {evec(l1), evec(l2)};  // attracting first (larger |eigenvalue|)
}

double LimitSetApprox::distance(const SpherePoint& p) const {
  double best = 2.0;
  for (const auto& q : points) best = std::min(best, chordal(p, q));
  return best;
}

namespace {

void require_nonelementary(const GroupGenerators& g) {
  // need two non-commuting loxodromic generators
  std::vector<size_t> lox;
  for (size_t i = 0; i < g.rank(); ++i)
    if (is_loxodromic(g.gens[i])) lox.push_back(i);
  for (size_t a = 0; a < lox.size(); ++a)
    for (size_t b = a + 1; b < lox.size(); ++b) {
      const MoebiusMap &x = g.gens[lox[a]], &y = g.gens[lox[b]];
      // common fixed point forces tr[x,y] = 2 (trace of a commutator is
      // independent of the SL2 lifts)
      MoebiusMap comm = x * y * x.inverse() * y.inverse();
      if (std::abs(comm.a + comm.d - cx(2.0)) > 1e-9) return;
    }
  fail(errc::elementary_group,
       "need two non-commuting loxodromic generators");
}

std::vector<SpherePoint> dedup_points(std::vector<SpherePoint> pts, double eps) {
  // deterministic greedy de-duplication on a stable ordering
  std::vector<SpherePoint> out;
  for (const auto& p : pts) {
    bool dup = false;
    for (const auto& q : out)
      if (chordal(p, q) <= eps) {
        dup = true;
        break;
      }
    if (!dup) out.push_back(p);
  }
  return out;
}

}  // namespace

LimitSetApprox limit_set_approx(const GroupGenerators& g, int max_len,
                                LimitSetMethod method) {
  require_nonelementary(g);
  LimitSetApprox lam;
  lam.max_len = max_len;
  auto words = enumerate_words(g, max_len);
  std::vector<SpherePoint> pts;
  if (method == LimitSetMethod::fixed_points) {
    lam.method = "fixed-points";
    for (const auto& w : words) {
      if (w.length == 0 || !is_loxodromic(w.map)) continue;
      auto [att, rep] = fixed_points(w.map);
      pts.push_back(att);
      pts.push_back(rep);
    }
  } else {
    lam.method = "orbit";
    // base point: attracting fixed point of the first loxodromic generator
    SpherePoint base(cx(0.0));
    for (const auto& m : g.gens)
      if (is_loxodromic(m)) {
        base = fixed_points(m).first;
        break;
      }
    for (const auto& w : words) pts.push_back(apply_moebius(w.map, base));
  }
  if (pts.empty()) fail(errc::elementary_group, "no loxodromic words found");
  lam.points = dedup_points(std::move(pts), tol().dedup);
  // invariance residual, reported as the heuristic resolution
  double res = 0.0;
  for (const auto& m : g.gens)
    for (const auto& p : lam.points)
      res = std::max(res, lam.distance(apply_moebius(m, p)));
  lam.resolution = res;
  return lam;
}

const char* separation_name(Separation s) {
  switch (s) {
    case Separation::separates: return "separates";
    case Separation::misses: return "misses";
    case Separation::touches_one_side: return "touches_one_side";
    case Separation::undecided: return "undecided";
  }
  return "undecided";
}

Separation separates_limit_set(const OrientedCircle& c, const LimitSetApprox& lam,
                               double margin) {
  size_t far_pos = 0, far_neg = 0, near = 0;
  for (const auto& p : lam.points) {
    double d = point_circle_distance(p, c);
    if (d <= margin) {
      ++near;
      continue;
    }
    (c.positive_side(p) ? far_pos : far_neg)++;
  }
  if (far_pos > 0 && far_neg > 0) return Separation::separates;
  if (far_pos + far_neg == 0) return Separation::undecided;
  return near > 0 ? Separation::touches_one_side : Separation::misses;
}

std::vector<Word> stabilizer_search(const GroupGenerators& g, const OrientedCircle& c,
                                    int max_len, double tolerance) {
  std::vector<Word> hits;
  for (const auto& w : enumerate_words(g, max_len))
    if (circle_distance(map_circle(w.map, c), c) <= tolerance) hits.push_back(w);
  return hits;
}

OrbitReport orbit_of_circle(const GroupGenerators& g, const OrientedCircle& c,
                            int max_len, double dedup_tol) {
  OrbitReport rep;
  rep.dedup_tolerance = dedup_tol;
  auto words = enumerate_words(g, max_len);
  for (const auto& w : words) {
    OrientedCircle img = map_circle(w.map, c);
    bool dup = false;
    for (const auto& seen : rep.circles)
      if (circle_distance(img, seen) <= dedup_tol) {
        dup = true;
        break;
      }
    if (!dup) {
      rep.circles.push_back(img);
      rep.word_length.push_back(w.length);
    }
  }
  // m_L: min pairwise distance among distinct orbit circles of length <= L
  for (int L = 0; L <= max_len; ++L) {
    double m = std::numeric_limits<double>::infinity();
    for (size_t i = 0; i < rep.circles.size(); ++i) {
      if (rep.word_length[i] > L) continue;
      for (size_t j = i + 1; j < rep.circles.size(); ++j) {
        if (rep.word_length[j] > L) continue;
        m = std::min(m, circle_distance(rep.circles[i], rep.circles[j]));
      }
    }
    rep.min_distance.push_back(m);
  }
  double last = rep.min_distance.back();
  if (!std::isfinite(last))
    rep.verdict = "undecided";  // orbit has a single circle
  else if (last <= 10.0 * dedup_tol)
    rep.verdict = "accumulating";
  else if (rep.min_distance.size() >= 3) {
    double prev = rep.min_distance[rep.min_distance.size() - 3];
    rep.verdict = last > 0.9 * prev ? "discrete-looking" : "undecided";
  } else {
    rep.verdict = "undecided";
  }
  return rep;
}

}  // namespace ks
