#ifndef PECC_PARTITION_HPP
#define PECC_PARTITION_HPP

#include <string>
#include <vector>

#include "pecc/layout.hpp"
#include "pecc/rng.hpp"

namespace pecc {

enum class PartitionStrategy { sector, annulus, fence, random };

std::string to_string(PartitionStrategy s);
// Parses "sector|annulus|fence|random"; throws on anything else.
PartitionStrategy parse_strategy(const std::string& name);

// k disjoint batches of circle indices covering {0..n-1}; each batch is
// sorted ascending and has floor(n/k) or ceil(n/k) members.
struct Partition {
  std::vector<std::vector<int>> batches;
  PartitionStrategy strategy = PartitionStrategy::sector;

  int k() const { return static_cast<int>(batches.size()); }
};

// Sorts circles by the strategy key (sector: atan2(y, x); annulus: |c|;
// fence: x; random: seeded shuffle), slices the order into k consecutive
// runs, the first n%k runs one larger. Ties break by circle index.
Partition make_partition(const Layout& layout, int k,
                         PartitionStrategy strategy, Rng& rng);

}  // namespace pecc

#endif
