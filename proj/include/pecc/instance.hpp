#ifndef PECC_INSTANCE_HPP
#define PECC_INSTANCE_HPP

#include <map>
#include <optional>
#include <vector>

#include "pecc/layout.hpp"
#include "pecc/rng.hpp"

namespace pecc {

// A problem instance: n unit circles and the quick-start container radius.
struct Instance {
  int n = 1;
  double baseline_radius = 1.0;

  Instance(int n_, double baseline_radius_);
};

// A layout paired with a container radius and its total elastic energy.
struct Solution {
  Layout layout;
  double radius = 1.0;
  double energy = 0.0;
};

// Builds a Solution with the energy field recomputed from (layout, radius).
Solution make_solution(Layout layout, double radius);

struct FeasibilityReport {
  bool feasible = false;
  // Largest amount by which any pair distance falls below 2 (0 if none).
  double max_pair_violation = 0.0;
  // Largest amount by which any |center| + 1 exceeds R (0 if none).
  double max_container_violation = 0.0;
};

// Map from n to the best-known container radius, loaded from a CSV file.
struct BestKnownRegistry {
  std::map<int, double> entries;

  std::optional<double> lookup(int n) const;
};

inline constexpr double kFeasibilityTol = 1e-9;

// Each coordinate drawn independently and uniformly from the open interval
// (-R, R). Deterministic given the rng state.
Layout random_layout(int n, double R, Rng& rng);

FeasibilityReport check_feasibility(const Layout& layout, double R,
                                    double tol = kFeasibilityTol);

// Per-circle count of other circles whose center distance is <= 2 + eps.
std::vector<int> contact_counts(const Layout& layout, double eps);

}  // namespace pecc

#endif
