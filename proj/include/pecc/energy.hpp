#ifndef PECC_ENERGY_HPP
#define PECC_ENERGY_HPP

#include <span>
#include <vector>

#include "pecc/layout.hpp"
#include "pecc/neighbor.hpp"

namespace pecc {

using Gradient = std::vector<double>;

// Candidate solution with the container radius as a trailing free variable:
// (x_0, y_0, ..., x_{n-1}, y_{n-1}, R).
struct AugmentedVector {
  std::vector<double> coords;

  AugmentedVector() = default;
  AugmentedVector(const Layout& layout, double R);

  int n() const { return static_cast<int>((coords.size() - 1) / 2); }
  double radius() const { return coords.back(); }
  double& radius() { return coords.back(); }
  Layout layout() const;
};

// Overlapping distance of two unit circles: max(0, 2 - |ci - cj|).
double pair_overlap(Point ci, Point cj);

// Overlapping distance of a circle to the container: max(0, |ci| + 1 - R).
double container_overlap(Point ci, double R);

// Total elastic energy: sum of squared pair overlaps over unordered pairs
// plus squared container overlaps. Zero iff the layout is feasible at tol 0.
double total_energy(const Layout& layout, double R);

// Energy attributed to one batch: pair terms where i is in the batch and
// (j outside the batch, counted fully) or (j < i inside it, counted once),
// plus the batch's container terms. With a neighbor table only the lists
// are enumerated; the table must be valid for this layout.
double batch_energy(const Layout& layout, std::span<const int> batch,
                    double R, const NeighborTable* neighbors = nullptr);

// Analytic partials of batch_energy with respect to the batch's own
// coordinates, laid out (x, y) per batch member in batch order.
Gradient batch_gradient(const Layout& layout, std::span<const int> batch,
                        double R, const NeighborTable* neighbors = nullptr);

// Penalty-augmented energy: total energy at (layout(z), R(z)) plus
// lambda * R^2.
double penalty_energy(const AugmentedVector& z, double lambda,
                      const NeighborTable* neighbors = nullptr);

// All 2n+1 partials of the penalty energy; the last entry is
// dU/dR = 2*lambda*R - 2 * sum_i d_i0.
Gradient penalty_gradient(const AugmentedVector& z, double lambda,
                          const NeighborTable* neighbors = nullptr);

}  // namespace pecc

#endif
