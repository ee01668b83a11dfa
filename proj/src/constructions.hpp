#pragma once

#include "blocks.hpp"

namespace blockledger {

// The hook shape (p, 1^a) for 1 <= a <= p-1: a p-core of p + a boxes.
Partition hook_partition(int p, int a);

// A ladder of k = dl(defect group) members of the block whose heights are
// exactly 0, 1, ..., k-1. Member j is produced from member j-1 by a local
// rewrite of tower layers k-j and k-j+1 that moves p^(k-j+1) boxes down one
// layer (layer sizes change by +p and -1 respectively).
struct HeightLadder {
  BlockLabel label;
  int k = 0;
  std::vector<Partition> members;     // lambda_0 .. lambda_{k-1}
  std::vector<int> heights;           // 0 .. k-1
  std::vector<bool> self_conjugate;   // recorded, never asserted
  std::vector<CoreTower> towers;      // aligned with members
};

// Requires weight >= 1.
HeightLadder build_height_ladder(const BlockLabel& b);

struct LadderCheck {
  bool ok = false;
  std::string failure;  // first failed condition; empty when ok
  HeightLadder ladder;
};

// Rebuilds the ladder and checks: members distinct and in the block, heights
// equal to 0..k-1 by both height routes, and the per-step layer-size ledger.
LadderCheck verify_height_ladder(const BlockLabel& b);

}  // namespace blockledger
