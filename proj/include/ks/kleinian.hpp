#pragma once

// Finitely generated matrix groups acting on the sphere: reduced-word
// enumeration, limit-set point clouds, circle orbits, separation tests and
// stabilizer search.  Only free (Schottky-type) and explicitly supplied
// groups are handled; discreteness is never solved for, only certified by an
// optional ping-pong disk pairing.

#include <string>
#include <vector>

#include "ks/sphere.hpp"

namespace ks {

struct PingPongPair {
  OrientedCircle from;  // positive side = protected disk of g^-1
  OrientedCircle to;    // positive side = image disk of g
};

struct GroupGenerators {
  std::vector<MoebiusMap> gens;
  std::vector<std::string> names;      // one letter per generator; inverse = uppercase
  std::vector<PingPongPair> pairing;   // optional, size 0 or gens.size()

  static GroupGenerators from_maps(std::vector<MoebiusMap> gens,
                                   std::vector<PingPongPair> pairing = {});
  // classical Schottky pair: generator j maps the exterior of pairing[j].from
  // onto the interior of pairing[j].to
  static GroupGenerators schottky(const std::vector<std::pair<cx, cx>>& centers,
                                  double radius);
  size_t rank() const { return gens.size(); }
  // checked to 1e-8 when a pairing is present; throws InvalidParams otherwise
  void check_pairing() const;
};

struct Word {
  std::string text;     // "a", "A" (= a^-1), "ab", ...; empty = identity
  MoebiusMap map;
  int length = 0;
};

// All freely reduced words up to max_len, ordered by length then
// lexicographically in the alphabet a, A, b, B, ...
std::vector<Word> enumerate_words(const GroupGenerators& g, int max_len);

// Count of reduced words of exact length n over r free generators.
unsigned long long reduced_word_count(int rank, int n);

enum class LimitSetMethod { fixed_points, orbit };

struct LimitSetApprox {
  std::vector<SpherePoint> points;
  std::string method;
  int max_len = 0;
  double resolution = 0.0;  // heuristic: max residual of generator invariance

  // chordal distance from p to the cloud (exact scan)
  double distance(const SpherePoint& p) const;
};

bool is_loxodromic(const MoebiusMap& m, double eps = 1e-9);
// attracting and repelling fixed points of a loxodromic map
std::pair<SpherePoint, SpherePoint> fixed_points(const MoebiusMap& m);

// Fixed-point method: attracting/repelling fixed points of all loxodromic
// words; orbit method: orbit of a base point.  Throws ElementaryGroup unless
// two non-commuting loxodromic generators are present.
LimitSetApprox limit_set_approx(const GroupGenerators& g, int max_len,
                                LimitSetMethod method);

enum class Separation { separates, misses, touches_one_side, undecided };
const char* separation_name(Separation s);

// Whether the cloud meets both open sides of c, with witnesses required to
// clear `margin` in chordal distance from the circle.
Separation separates_limit_set(const OrientedCircle& c, const LimitSetApprox& lam,
                               double margin);

// Words w with distance(w . c, c) <= tol in the oriented circle metric.
std::vector<Word> stabilizer_search(const GroupGenerators& g, const OrientedCircle& c,
                                    int max_len, double tolerance);

struct OrbitReport {
  std::vector<OrientedCircle> circles;   // de-duplicated orbit
  std::vector<int> word_length;          // producing word length per circle
  std::vector<double> min_distance;      // m_L: min pairwise distance, per max length L
  double dedup_tolerance = 0.0;
  std::string verdict;  // "discrete-looking" | "accumulating" | "undecided"
};

// Orbit of a circle under all words up to max_len, de-duplicated at
// tolerance; m_L trends drive a heuristic (never a proof) discreteness label.
OrbitReport orbit_of_circle(const GroupGenerators& g, const OrientedCircle& c,
                            int max_len, double dedup_tol = tol().dedup);

}  // namespace ks
