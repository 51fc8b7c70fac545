#ifndef PECC_LAYOUT_HPP
#define PECC_LAYOUT_HPP

#include <cstddef>
#include <vector>

namespace pecc {

struct Point {
  double x = 0.0;
  double y = 0.0;
};

// Circle-center coordinates of a candidate layout, flattened as
// (x_0, y_0, x_1, y_1, ...). Lengths are in container units; centers may lie
// outside the container, the elastic model permits it.
struct Layout {
  std::vector<double> coords;

  Layout() = default;
  explicit Layout(int n) : coords(2 * static_cast<std::size_t>(n), 0.0) {}

  int n() const { return static_cast<int>(coords.size() / 2); }

  double x(int i) const { return coords[2 * static_cast<std::size_t>(i)]; }
  double y(int i) const { return coords[2 * static_cast<std::size_t>(i) + 1]; }
  double& x(int i) { return coords[2 * static_cast<std::size_t>(i)]; }
  double& y(int i) { return coords[2 * static_cast<std::size_t>(i) + 1]; }

  Point center(int i) const { return {x(i), y(i)}; }

  bool operator==(const Layout& other) const = default;
};

// Throws std::invalid_argument unless coords has even, nonzero length and
// every entry is finite.
void validate_layout(const Layout& layout);

}  // namespace pecc

#endif
