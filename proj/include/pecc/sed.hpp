#ifndef PECC_SED_HPP
#define PECC_SED_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "pecc/gbo.hpp"
#include "pecc/layout.hpp"
#include "pecc/rng.hpp"

namespace pecc {

struct SedConfig {
  int s_iter = 500;
  double feasible_energy = 1e-25;
  double perturb_range = 0.8;
  GboConfig gbo;
};

// Integer quality score ceil(-log10(E)). Requires E > 0; the feasibility
// check precedes any use of it.
int j_metric(double energy);

// Adds an independent uniform draw from (-range, range) to every
// coordinate. range == 0 returns the input unchanged.
Layout perturb(const Layout& layout, double range, Rng& rng);

struct Candidate {
  Layout layout;
  double energy = 0.0;
};

// exp(J_i) / sum_j exp(J_j), computed with the max shift.
std::vector<double> softmax_weights(std::span<const int> j_values);

// Index of the chosen candidate: the argmin when some candidate improves on
// current_energy (ties by lowest index), otherwise a softmax draw over the
// candidates' J values. All candidate energies must be positive on the
// softmax branch.
std::size_t select_index(std::span<const Candidate> candidates,
                         double current_energy, Rng& rng);

struct SedTrace {
  // Best energy seen after each completed loop iteration (plus the initial
  // descent as entry 0).
  std::vector<double> best_energies;
  int iterations = 0;
};

struct SedResult {
  Layout layout;
  double energy = 0.0;
};

// Solution-space exploring and descent at fixed radius: random start, batch
// descent, then up to s_iter rounds of perturb + descend over m = max(1, J)
// candidates with softmax-guided selection. Returns the lowest-energy layout
// encountered; returns early once that energy reaches feasible_energy.
SedResult sed(int n, double R, const SedConfig& config, Rng& rng,
              SedTrace* trace = nullptr);

}  // namespace pecc

#endif
