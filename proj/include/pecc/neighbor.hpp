#ifndef PECC_NEIGHBOR_HPP
#define PECC_NEIGHBOR_HPP

#include <cstdint>
#include <vector>

#include "pecc/layout.hpp"

namespace pecc {

// Per-circle neighbor lists under a cutoff distance: j is in lists[i] iff
// the center distance l_ij is strictly below l_cut and i != j. Lists are
// sorted ascending and symmetric.
struct NeighborTable {
  std::vector<std::vector<int>> lists;
  double l_cut = 4.0;

  int n() const { return static_cast<int>(lists.size()); }
};

inline constexpr double kDefaultCutoff = 4.0;
// Below this cutoff a table can miss overlapping pairs.
inline constexpr double kMinCutoff = 2.0;

// Scan-line construction: sort circles by x (ties by index), test only the
// window of circles whose x differs by less than l_cut. Exact under the
// strict cutoff. Expected O(n sqrt(n)) for near-uniform packings.
NeighborTable build_neighbors(const Layout& layout, double l_cut);

// True iff every per-circle list is set-equal. Throws on mismatched n or
// cutoff.
bool neighbors_equal(const NeighborTable& a, const NeighborTable& b);

// Deferred-maintenance state: the table is rebuilt only every `len` steps,
// and `len` doubles while consecutive rebuilds find no change.
struct AnmState {
  std::int64_t cnt = 0;
  std::int64_t len = 1;
  NeighborTable table;
};

AnmState make_anm_state(const Layout& layout, double l_cut);

// One maintenance step: increment cnt; once cnt reaches len, rebuild and
// either reset (len = 1) on change or double len on stability.
AnmState anm_step(AnmState state, const Layout& layout);

}  // namespace pecc

#endif
