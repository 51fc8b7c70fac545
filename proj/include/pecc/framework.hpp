#ifndef PECC_FRAMEWORK_HPP
#define PECC_FRAMEWORK_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "pecc/container.hpp"
#include "pecc/instance.hpp"
#include "pecc/sed.hpp"

namespace pecc {

struct SolveConfig {
  // Wall-clock budget in seconds; 0 disables it. At least one of
  // cutoff_seconds / cutoff_cycles must be positive.
  double cutoff_seconds = 0.0;
  // Budget in SED+adjust cycles; 0 disables it. Used for reproducible runs.
  std::int64_t cutoff_cycles = 0;
  // Stop early once the best radius is at or below this; 0 disables it.
  double target_radius = 0.0;
  SedConfig sed;
  AdjustConfig adjust;
  std::uint64_t seed = 0;
};

struct ImprovementEvent {
  // Seconds since the run started, or the cycle index when only a cycle
  // budget is set.
  double elapsed = 0.0;
  double radius = 0.0;
};

struct SolveReport {
  std::optional<Solution> best;
  std::vector<ImprovementEvent> history;  // radii strictly decreasing
  std::int64_t runs_completed = 0;        // SED+adjust cycles
};

// One seeded run: quick-start at the baseline radius (random layout, batch
// descent, container adjustment; retried on infeasibility), then repeated
// SED + adjustment cycles targeting min(baseline, best) until a budget is
// exhausted. best is empty only when no feasible solution was found at all.
SolveReport solve(int n, double baseline_radius, const SolveConfig& config);

}  // namespace pecc

#endif
