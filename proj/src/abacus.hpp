#pragma once

#include "partition.hpp"

namespace blockledger {

// Beta-set of a partition for a given bead count b >= rows:
//   beads = { part(i) + b - i : i = 1..b }, strictly decreasing.
// All runner operations below pad b up to a multiple of p, which pins the
// runner labelling: bead value v sits on runner (v mod p) at position
// floor(v / p). Results are independent of which multiple of p is used.
struct BetaSet {
  std::vector<int> beads;  // strictly decreasing, nonnegative

  int bead_count() const { return static_cast<int>(beads.size()); }
  static BetaSet of(const Partition& la, int bead_count);
  Partition to_partition() const;
};

// Exactly p components; component i is read off runner i.
using QuotientTuple = std::vector<Partition>;

// Tower of cores: layer j holds p^j entries (p-cores), indexed by runner
// tuples (i1,...,ij) at flat position i1*p^(j-1) + ... + ij. Trailing
// all-empty layers are trimmed; layer 0 is always present.
struct CoreTower {
  int p = 0;
  std::vector<std::vector<Partition>> layers;

  int depth() const { return static_cast<int>(layers.size()); }
  int layer_size(int j) const;  // total boxes in layer j, 0 when absent
  int size() const;             // sum_j layer_size(j) * p^j
  std::string str() const;      // e.g. [["0"],["1","1"]]
  bool operator==(const CoreTower&) const = default;
};

bool is_p_core(const Partition& la, int p);

// Slide every runner's beads to the bottom and read the partition back.
Partition p_core(const Partition& la, int p);

// Per-runner bead positions read as partitions, component i from runner i.
QuotientTuple p_quotient(const Partition& la, int p);

// Inverse of (p_core, p_quotient); `core` must be a p-core, `q` must have
// exactly p components.
Partition from_core_quotient(const Partition& core, const QuotientTuple& q, int p);

// (|la| - |p_core(la)|) / p.
int weight(const Partition& la, int p);

// Layer 0 is the p-core; layer j collects the cores of the j-fold iterated
// quotient components in runner-tuple order.
CoreTower core_tower(const Partition& la, int p);

// Inverse of core_tower; every entry must be a p-core of the tower's p.
Partition from_tower(const CoreTower& t);

}  // namespace blockledger
