#include "ringpack/ring_math.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>

namespace ringpack {

namespace {

constexpr double kPi = std::numbers::pi;

// 1 - (2m-1)x without intermediate integer overflow for large m.
double center_radius(double x, std::int64_t m) {
  return 1.0 - (2.0 * static_cast<double>(m) - 1.0) * x;
}

}  // namespace

PackingSpec PackingSpec::from_radii(double outer_radius, double filler_radius) {
  if (!(outer_radius > 0.0) || !(filler_radius > 0.0)) {
    throw std::domain_error("packing spec requires positive outer and filler radii");
  }
  return PackingSpec{outer_radius, filler_radius, filler_radius / outer_radius};
}

PackingSpec PackingSpec::from_ratio(double ratio) {
  if (!(ratio > 0.0)) {
    throw std::domain_error("packing spec requires a positive radius ratio");
  }
  return PackingSpec{1.0, ratio, ratio};
}

double sector_inscribed_radius(double outer_radius, std::int64_t divisions) {
  if (!(outer_radius > 0.0)) {
    throw std::domain_error("sector_inscribed_radius: outer radius must be positive");
  }
  if (divisions < 2) {
    throw std::domain_error(
        "sector_inscribed_radius: divisions must be at least 2; a single sector "
        "has no inscribed-circle solution (got " + std::to_string(divisions) + ")");
  }
  const double s = std::sin(kPi / static_cast<double>(divisions));
  return outer_radius / (1.0 + 1.0 / s);
}

double ring_center_radius(double ratio, std::int64_t ring_index) {
  if (!(ratio > 0.0)) throw std::domain_error("ring_center_radius: ratio must be positive");
  if (ring_index < 1) throw std::domain_error("ring_center_radius: ring index starts at 1");
  return center_radius(ratio, ring_index);
}

std::int64_t ring_count(double ratio, std::int64_t ring_index) {
  if (!(ratio > 0.0)) throw std::domain_error("ring_count: ratio must be positive");
  if (ring_index < 1) throw std::domain_error("ring_count: ring index starts at 1");
  const double rho = center_radius(ratio, ring_index);
  if (rho <= 0.0 || rho < ratio - kCaseTol) {
    throw std::domain_error(
        "ring_count: ring " + std::to_string(ring_index) +
        " is infeasible: center radius 1-(2k-1)*x = " + std::to_string(rho) +
        " falls below the filler radius x = " + std::to_string(ratio));
  }
  // rho may sit a hair under ratio inside the tolerance band; that is the
  // tangent configuration, so the asin argument clamps to 1.
  double arg = ratio / rho;
  if (arg > 1.0) arg = 1.0;
  const double slots = kPi / std::asin(arg);
  if (slots >= 9.0e18) {
    throw std::domain_error("ring_count: count exceeds the representable range");
  }
  return static_cast<std::int64_t>(std::floor(slots + kFloorSnap));
}

CaseTag classify_case(double ratio) {
  if (!(ratio > 0.0)) throw std::domain_error("classify_case: ratio must be positive");
  // Start the scan far enough down that every skipped index is strictly above
  // the equality band; for small ratios this avoids an O(1/x) walk.
  std::int64_t m = 1;
  if (ratio < 0.25) {
    const double est = std::ceil((1.0 - kCaseTol) / (2.0 * ratio)) - 3.0;
    if (est > 1.0) m = static_cast<std::int64_t>(est);
  }
  for (;; ++m) {
    const double g = center_radius(ratio, m);
    if (std::abs(g - ratio) <= kCaseTol) return {Case::A, m};
    if (g < ratio - kCaseTol) {
      return {g >= -kCaseTol ? Case::B : Case::C, m};
    }
  }
}

CountBreakdown count_total(double ratio) {
  if (!(ratio > 0.0)) throw std::domain_error("count_total: ratio must be positive");
  const CaseTag tag = classify_case(ratio);
  const std::int64_t rings =
      (tag.kind == Case::A) ? tag.terminal_index : tag.terminal_index - 1;

  CountBreakdown out;
  out.tag = tag;
  out.ring_counts.reserve(static_cast<std::size_t>(rings));
  for (std::int64_t k = 1; k <= rings; ++k) {
    out.ring_counts.push_back(ring_count(ratio, k));
  }
  out.central_circle = (tag.kind == Case::B);
  out.total = std::accumulate(out.ring_counts.begin(), out.ring_counts.end(),
                              std::int64_t{0}) +
              (out.central_circle ? 1 : 0);
  return out;
}

CountBreakdown count_total(const PackingSpec& spec) {
  return count_total(spec.ratio);
}

CountBreakdown count_total_iterative(double ratio) {
  if (!(ratio > 0.0)) throw std::domain_error("count_total: ratio must be positive");

  // K = number of feasible rings, i.e. indices with center radius >= x - tol.
  // Closed-form estimate, then nudge until the boundary comparisons agree.
  std::int64_t feasible = static_cast<std::int64_t>(
      std::floor((1.0 + kCaseTol) / (2.0 * ratio)));
  if (feasible < 0) feasible = 0;
  while (feasible > 0 && center_radius(ratio, feasible) < ratio - kCaseTol) {
    --feasible;
  }
  while (center_radius(ratio, feasible + 1) >= ratio - kCaseTol) {
    ++feasible;
  }

  CountBreakdown out;
  out.ring_counts.reserve(static_cast<std::size_t>(feasible));
  for (std::int64_t k = 1; k <= feasible; ++k) {
    out.ring_counts.push_back(ring_count(ratio, k));
  }
  const double hole = 1.0 - 2.0 * static_cast<double>(feasible) * ratio;
  out.central_circle = hole >= ratio - kCaseTol;
  out.total = std::accumulate(out.ring_counts.begin(), out.ring_counts.end(),
                              std::int64_t{0}) +
              (out.central_circle ? 1 : 0);

  if (out.central_circle) {
    out.tag = {Case::B, feasible + 1};
  } else if (feasible >= 1 &&
             std::abs(center_radius(ratio, feasible) - ratio) <= kCaseTol) {
    out.tag = {Case::A, feasible};
  } else {
    out.tag = {Case::C, feasible + 1};
  }
  return out;
}

}  // namespace ringpack
