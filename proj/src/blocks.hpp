#pragma once

#include <set>

#include "abacus.hpp"

namespace blockledger {

// A p-block of the symmetric group on n = |core| + weight*p letters,
// labelled by its p-core and weight.
struct BlockLabel {
  int p = 2;
  Partition core;
  int weight = 0;

  int n() const { return core.size() + weight * p; }
  std::string str() const;  // "p=2 core=1 w=2"
  bool operator==(const BlockLabel&) const = default;
};

// Validates: p prime, core a p-core, weight >= 0.
BlockLabel make_block_label(int p, Partition core, int weight);

BlockLabel block_of(const Partition& la, int p);

// Base-p digits (a_1..a_k) of the weight, most significant digit a_k != 0;
// empty when weight == 0. The defect group is a direct product of a_j copies
// of the Sylow p-subgroup on p^j letters, so its derived length is k.
struct DefectShape {
  std::vector<int> digits;
  int k() const { return static_cast<int>(digits.size()); }
  bool operator==(const DefectShape&) const = default;
};

DefectShape defect_shape(const BlockLabel& b);
int derived_length(const DefectShape& s);
int defect(const BlockLabel& b);  // v_p((weight*p)!)

// All members: one per quotient tuple of total size `weight`; canonical order.
std::vector<Partition> enumerate_block(const BlockLabel& b);

// Height of a member: v_p(degree) minus the minimal valuation in the block,
// v_p(n!) - defect.
int height_valuation(const Partition& la, const BlockLabel& b);

// Same quantity from the core tower alone:
//   ( sum_{j>=1} |T_j(la)| - a_j ) / (p - 1),
// where a_j are the defect-shape digits (zero beyond k).
int height_tower(const Partition& la, const BlockLabel& b);

struct BlockReport {
  BlockLabel label;
  std::vector<Partition> members;  // canonical order
  std::vector<BigInt> degrees;     // aligned with members
  std::set<BigInt> cd;             // distinct degrees
  std::set<int> heights;
  int defect = 0;
  int dl = 0;           // derived length of the defect group
  bool thm_c = false;   // dl <= |heights|
  bool question_a = false;  // dl <= |cd|
};

// cross_check recomputes every height by valuation and treats a mismatch as
// internal corruption.
BlockReport block_report(const BlockLabel& b, bool cross_check = true);

// All p-cores of m, canonical order.
std::vector<Partition> p_core_partitions(int m, int p);

// All blocks of the symmetric group on n letters for the prime p, ordered by
// decreasing weight and canonical core order.
std::vector<BlockLabel> blocks_of(int n, int p);

}  // namespace blockledger
