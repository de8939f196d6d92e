#pragma once

#include <cstdint>
#include <vector>

namespace ringpack {

// Floor snap: counts come from floor(pi / asin(...)), which lands exactly on
// an integer whenever a ring closes tangent. floor(v + kFloorSnap) keeps
// those analytic integers from being lost to floating-point round-down.
inline constexpr double kFloorSnap = 1e-9;

// Slack for the feasibility comparisons that decide how many concentric
// rings fit and whether a central circle remains. Exact-boundary inputs
// (e.g. a ratio of exactly 1/3) stay on their intended branch even after
// rounding through division.
inline constexpr double kCaseTol = 1e-9;

/// Problem instance: a container circle of radius `outer_radius` filled with
/// congruent circles of radius `filler_radius`. `ratio` is always
/// filler_radius / outer_radius; build instances through the factories so the
/// three fields stay consistent.
struct PackingSpec {
  double outer_radius = 1.0;
  double filler_radius = 1.0;
  double ratio = 1.0;

  static PackingSpec from_radii(double outer_radius, double filler_radius);
  static PackingSpec from_ratio(double ratio);  // unit container

  friend bool operator==(const PackingSpec&, const PackingSpec&) = default;
};

/// How the ring construction terminates.
///   A: the last ring closes exactly tangent (its centers sit at distance
///      equal to the filler radius from the origin boundary condition).
///   B: no further ring fits but one central circle does.
///   C: nothing fits inside the last completed ring.
enum class Case : char { A = 'a', B = 'b', C = 'c' };

struct CaseTag {
  Case kind = Case::C;
  std::int64_t terminal_index = 1;  // ring index at which the construction stops

  friend bool operator==(const CaseTag&, const CaseTag&) = default;
};

/// Ring-by-ring count of a packing. `total` is the grand total including the
/// optional central circle; a total of zero means the filler does not fit in
/// the container at all.
struct CountBreakdown {
  CaseTag tag;
  std::vector<std::int64_t> ring_counts;  // counts for rings 1..K, outermost first
  bool central_circle = false;
  std::int64_t total = 0;

  bool empty() const { return total == 0; }

  friend bool operator==(const CountBreakdown&, const CountBreakdown&) = default;
};

/// Radius of the biggest circle inscribed in one of `divisions` equal sectors
/// of a circle of radius `outer_radius`:  R / (1 + 1/sin(pi/n)).
/// Strictly decreasing in n; at most outer_radius/2. Throws std::domain_error
/// for divisions < 2 (a lone sector is the whole circle and has no third
/// boundary to touch) or a non-positive radius.
double sector_inscribed_radius(double outer_radius, std::int64_t divisions);

/// Distance from the container center to the centers of ring k, for a unit
/// container: 1 - (2k-1)*ratio. Every circle of ring k touches the concentric
/// circle of radius 1 - (2k-2)*ratio from the inside.
double ring_center_radius(double ratio, std::int64_t ring_index);

/// Number of non-overlapping filler circles that fit on ring k:
/// floor(pi / asin(ratio / ring_center_radius)). At least 2 whenever the ring
/// is feasible. Throws std::domain_error when the ring is infeasible, i.e.
/// ring_center_radius < ratio (beyond kCaseTol slack).
std::int64_t ring_count(double ratio, std::int64_t ring_index);

/// Finds the terminal ring index m and which termination case applies.
/// m is the smallest index whose center radius drops below the filler radius,
/// except that an exact tangency (center radius == ratio within kCaseTol) is
/// reported as Case::A at that index. Ratios above 1 come back as Case::C
/// with terminal index 1: the empty packing, not an error.
CaseTag classify_case(double ratio);

/// Full analytical count for a unit container: per-ring counts for every
/// feasible ring plus one central circle in Case::B. Throws std::domain_error
/// for ratio <= 0; ratios above 1 + kCaseTol give the empty breakdown.
CountBreakdown count_total(double ratio);

/// Dimensional form: normalizes to ratio = r/R internally and agrees
/// bit-for-bit with count_total(spec.ratio).
CountBreakdown count_total(const PackingSpec& spec);

/// Same breakdown computed without case classification: count the feasible
/// rings directly, then add a central circle iff the residual hole
/// 1 - 2*K*ratio still admits one. Kept as an independent cross-check of
/// count_total; the two must agree field for field.
CountBreakdown count_total_iterative(double ratio);

}  // namespace ringpack
