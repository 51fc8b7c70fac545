#ifndef PECC_GBO_HPP
#define PECC_GBO_HPP

#include <cstddef>
#include <functional>
#include <optional>

#include "pecc/energy.hpp"
#include "pecc/linalg.hpp"
#include "pecc/neighbor.hpp"
#include "pecc/partition.hpp"
#include "pecc/rng.hpp"

namespace pecc {

struct GboConfig {
  int k = 1;
  PartitionStrategy strategy = PartitionStrategy::sector;
  int max_iter = 5000;
  double grad_tol = 1e-12;
  double l_cut = kDefaultCutoff;
};

// Throws std::invalid_argument on out-of-range fields (k < 1,
// grad_tol > 1e-6, l_cut < 2, ...).
void validate_config(const GboConfig& config);

struct LineSearchResult {
  double alpha = 1.0;
  int evals = 0;  // objective evaluations spent
};

inline constexpr double kArmijoC1 = 1e-4;
inline constexpr int kMaxHalvings = 50;

// Backtracking Armijo search on phi(alpha), starting from alpha = 1 and
// halving until phi(alpha) <= f0 + c1 * alpha * g_dot_d. Requires
// g_dot_d < 0. Returns nullopt when no acceptable step exists within
// kMaxHalvings halvings; the caller skips the move.
std::optional<LineSearchResult> line_search(
    const std::function<double(double)>& phi, double f0, double g_dot_d);

inline constexpr double kCurvatureFloor = 1e-14;

// Inverse-Hessian update from a step u and gradient difference v. Skipped
// (returns false, H untouched) when the curvature v.u is at or below
// kCurvatureFloor * |u| * |v|, which keeps H positive definite on
// non-convex stretches.
bool bfgs_update_inplace(SquareMatrix& H, std::span<const double> u,
                         std::span<const double> v);

// Value-returning variant of the update.
SquareMatrix bfgs_update(SquareMatrix H, std::span<const double> u,
                         std::span<const double> v);

// Total stored inverse-Hessian entries for n circles split into k batches:
// sum over batches of (2 * batch size)^2.
std::size_t hessian_entry_count(int n, int k);

// Snapshot passed to the observer once per iteration, after the k batch
// moves and the maintenance step.
struct GboIteration {
  int iter = 0;  // 1-based
  const Layout& layout;
  const NeighborTable& table;
  const Partition& partition;
  double grad_norm_sum = 0.0;
};

using GboObserver = std::function<void(const GboIteration&)>;

struct GboResult {
  Layout layout;
  int iterations = 0;
  bool converged = false;
  double grad_norm_sum = 0.0;
  std::size_t hessian_entries = 0;
};

// Batched quasi-Newton descent at fixed container radius: partition once,
// then per iteration sweep the batches in order (gradient, line search,
// move, inverse-Hessian update) with the other batches held fixed, followed
// by one neighbor maintenance step. Stops when the sum of batch gradient
// norms drops to config.grad_tol or max_iter is reached. Never throws past
// argument validation; returns the final merged layout either way.
GboResult gbo_minimize(const Layout& layout, double R, const GboConfig& config,
                       Rng& rng, const GboObserver& observer = {});

}  // namespace pecc

#endif
