#ifndef PECC_BENCH_HPP
#define PECC_BENCH_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "pecc/instance.hpp"
#include "pecc/partition.hpp"

namespace pecc {

struct BenchSpec {
  std::vector<int> n_values;
  std::vector<int> k_values;
  std::vector<PartitionStrategy> strategies;
  int runs_per_cell = 1;
  std::uint64_t seed = 0;
  int max_iter = 5000;
  double l_cut = kDefaultCutoff;
};

struct BenchRow {
  int n = 0;
  int k = 0;
  PartitionStrategy strategy = PartitionStrategy::sector;
  double radius = 0.0;
  double mean_seconds = 0.0;
  double mean_energy = 0.0;
  std::size_t hessian_entries = 0;
  int runs = 0;
};

struct BenchReport {
  std::vector<BenchRow> rows;
  std::vector<std::string> skipped;  // cells with k > n, noted not run
};

// Reference radius when the registry has no entry for n: a container at
// ~0.85 packing density, tight enough that random starts converge to
// conflicting local minima.
double fallback_radius(int n);

// Radius used for a bench cell: registry entry if present, otherwise the
// fallback estimate.
double bench_radius(int n, const BestKnownRegistry* registry);

// For every (n, k, strategy) cell, runs gbo_minimize from seeded random
// layouts and records mean wall time to convergence, mean converged energy,
// and the exact inverse-Hessian entry count.
BenchReport run_bench(const BenchSpec& spec, const BestKnownRegistry* registry);

// CSV with one row per cell; wall-time columns vary run to run, everything
// else is stable under a fixed seed.
std::string bench_csv(const BenchReport& report);

}  // namespace pecc

#endif
