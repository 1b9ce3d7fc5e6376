#pragma once

// Disk-family models of Sierpinski-curve complements, and circular slices
// of them.  Disks are always round and are stored as oriented circles whose
// positive side is the open disk.

#include <string>
#include <vector>

#include "ks/modulus.hpp"
#include "ks/sphere.hpp"

namespace ks {

enum class CarpetStyle { grid, nested };

struct DiskFamily {
  std::vector<OrientedCircle> disks;     // positive side = the open disk
  std::vector<int> generation;           // construction depth per disk (1-based)
  std::string style = "custom";
  int depth = 0;
  double gap = 0.0;
  // certified min pairwise ring modulus; +inf when there are fewer than
  // two disks (no pairs to compete)
  double delta = std::numeric_limits<double>::infinity();

  size_t size() const { return disks.size(); }
};

// Synthetic carpet complements.
//  * grid: Sierpinski-carpet layout on [-1,1]^2; each generation subdivides
//    the live cells 3x3 and inscribes a disk (shrunk by `gap`) in the center
//    cell.  Disk count (8^depth - 1) / 7.
//  * nested: middle-thirds cascade on [-1,1]; generation g contributes the
//    2^(g-1) disks sitting over the removed middle-third intervals.  Slicing
//    by the real line reproduces a Cantor complement.
// The returned family carries its certified pairwise modulus in `delta`.
DiskFamily synth_carpet(CarpetStyle style, int depth, double gap);

struct FamilyModulusReport {
  double delta = 0.0;
  bool exhaustive = true;
  size_t pairs_checked = 0;
  int argmin_i = -1;
  int argmin_j = -1;
};

// Minimum pairwise ring modulus over all disk pairs (the carpet modulus).
// Exhaustive when the pair count fits the budget; otherwise pruned to
// nearest-neighbor candidates with `exhaustive = false` in the report.
FamilyModulusReport family_modulus(const DiskFamily& f, size_t pair_budget);

struct GapArc {
  int label;       // index of the disk that produced the arc
  double start;    // chart angle in [0, 2pi)
  double length;   // in (0, 2pi)
};

struct LabeledGapSystem {
  OrientedCircle circle;
  MoebiusMap chart;             // canonical chart of `circle`
  std::vector<GapArc> arcs;     // sorted by start; pairwise disjoint closures
  int whole_circle_label = -1;  // set when the circle lies inside one disk
  double family_delta = std::numeric_limits<double>::quiet_NaN();
};

// Trace of each disk on the circle c.  For round disks every nonempty trace
// is a single open arc; empty traces are omitted.
LabeledGapSystem slice_circle(const DiskFamily& f, const OrientedCircle& c);

// Validate the disjoint-closure invariant of a hand-built system (throws
// InvalidParams on violation); used by parsers and test generators.
void validate_gap_system(const LabeledGapSystem& gs);

// Point cloud sampled from the disk boundary circles at the given chordal
// spacing; stands in for the underlying Sierpinski curve in flow tests.
std::vector<SpherePoint> carpet_boundary_cloud(const DiskFamily& f, double spacing);

}  // namespace ks
