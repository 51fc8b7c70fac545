#ifndef PECC_SVG_HPP
#define PECC_SVG_HPP

#include <string>

#include "pecc/instance.hpp"

namespace pecc {

// Contact tolerance used when coloring circles by contact count.
inline constexpr double kContactEps = 1e-10;

// Fill color for a given contact count; counts of 6 and above share the
// last palette entry.
std::string contact_color(int count);

// SVG 1.1 document: container outline plus unit circles filled by contact
// count, viewBox fixed to [-R-1, R+1]^2. Byte-deterministic for identical
// inputs.
std::string render_svg(const Solution& solution, double eps = kContactEps);

}  // namespace pecc

#endif
