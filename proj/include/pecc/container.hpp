#ifndef PECC_CONTAINER_HPP
#define PECC_CONTAINER_HPP

#include <vector>

#include "pecc/instance.hpp"
#include "pecc/layout.hpp"
#include "pecc/neighbor.hpp"

namespace pecc {

struct AdjustConfig {
  double lambda0 = 1e-4;
  int outer_iters = 35;
  int inner_max_iter = 2000;
  double inner_grad_tol = 1e-12;
  double l_cut = kDefaultCutoff;
};

struct AdjustResult {
  Solution solution;
  bool feasible = false;  // check_feasibility at tol 1e-9 on the result
  FeasibilityReport report;
  // Radius after each outer iteration; outer_iters entries.
  std::vector<double> radius_trace;
};

// Penalty-based radius adjustment: minimize U(z, lambda) over positions and
// R by full BFGS, halving lambda each outer iteration so the radius settles
// at a locally minimal feasible value. On runs that fail the final
// feasibility check the result carries the lowest-energy z reached.
AdjustResult adjust_container(const Layout& layout, double R,
                              const AdjustConfig& config);

}  // namespace pecc

#endif
