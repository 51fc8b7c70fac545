#include "pecc/instance.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

#include "pecc/energy.hpp"

namespace pecc {

void validate_layout(const Layout& layout) {
  if (layout.coords.empty() || layout.coords.size() % 2 != 0) {
    throw std::invalid_argument("layout must hold 2n coordinates, n >= 1");
  }
  for (double v : layout.coords) {
    if (!std::isfinite(v)) {
      throw std::invalid_argument("layout coordinates must be finite");
    }
  }
}

Instance::Instance(int n_, double baseline_radius_)
    : n(n_), baseline_radius(baseline_radius_) {
  if (n < 1) throw std::invalid_argument("instance needs n >= 1");
  if (!(baseline_radius >= 1.0)) {
    throw std::invalid_argument("baseline radius must be >= 1");
  }
}

Solution make_solution(Layout layout, double radius) {
  validate_layout(layout);
  if (!(radius > 0.0)) throw std::invalid_argument("radius must be positive");
  const double energy = total_energy(layout, radius);
  return Solution{std::move(layout), radius, energy};
}

std::optional<double> BestKnownRegistry::lookup(int n) const {
  auto it = entries.find(n);
  if (it == entries.end()) return std::nullopt;
  return it->second;
}

Layout random_layout(int n, double R, Rng& rng) {
  if (n < 1) throw std::invalid_argument("random_layout needs n >= 1");
  if (!(R > 0.0)) throw std::invalid_argument("random_layout needs R > 0");
  Layout layout(n);
  for (double& v : layout.coords) v = rng.uniform(-R, R);
  return layout;
}

FeasibilityReport check_feasibility(const Layout& layout, double R,
                                    double tol) {
  const int n = layout.n();
  FeasibilityReport report;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double dx = layout.x(i) - layout.x(j);
      const double dy = layout.y(i) - layout.y(j);
      const double gap = 2.0 - std::sqrt(dx * dx + dy * dy);
      if (gap > report.max_pair_violation) report.max_pair_violation = gap;
    }
    const double out =
        std::sqrt(layout.x(i) * layout.x(i) + layout.y(i) * layout.y(i)) +
        1.0 - R;
    if (out > report.max_container_violation) {
      report.max_container_violation = out;
    }
  }
  report.feasible = report.max_pair_violation <= tol &&
                    report.max_container_violation <= tol;
  return report;
}

std::vector<int> contact_counts(const Layout& layout, double eps) {
  const int n = layout.n();
  std::vector<int> counts(n, 0);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double dx = layout.x(i) - layout.x(j);
      const double dy = layout.y(i) - layout.y(j);
      if (std::sqrt(dx * dx + dy * dy) <= 2.0 + eps) {
        ++counts[i];
        ++counts[j];
      }
    }
  }
  return counts;
}

}  // namespace pecc
