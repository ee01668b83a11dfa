#pragma once

#include "blocks.hpp"

namespace blockledger {

// View of the index-2 subgroup's block covered by a symmetric-group block:
// restrictions stay irreducible for non-self-conjugate labels (the pair
// {la, la'} restricts to one constituent of degree d), while self-conjugate
// labels split into two constituents of degree d/2.
struct AltBlockView {
  BlockLabel source;
  Partition paired_core;         // conjugate core; equals source.core when self-paired
  std::vector<BigInt> degrees;   // constituent degrees, ascending
  std::set<int> heights;
  int q_valuation = 0;           // v_p of the covered block's defect group order
  int dl_q = 0;                  // derived length of that defect group (or bound)
  enum class Mode { kExact, kFormula, kSkipped } dlq_mode = Mode::kFormula;
  int k = 0;                     // derived length of the source defect group
  bool paper_gap = false;        // k exceeds the number of constituent heights
};

const char* mode_name(AltBlockView::Mode m);

// Requires n >= 5. dl_q is exact (brute-force enumeration of the even part
// of the Sylow subgroup) for p = 2 with weight*p <= 16, the closed form k for
// odd p where the defect groups coincide, and the bound k otherwise
// (mode kSkipped).
AltBlockView restrict_block(const BlockLabel& b);

struct AltCheck {
  bool ok = false;
  AltBlockView view;
};

// dl_q <= number of distinct constituent heights; skipped modes pass.
AltCheck verify_alt(const BlockLabel& b);

}  // namespace blockledger
