#include "constructions.hpp"

#include <algorithm>
#include <stdexcept>

#include "errors.hpp"

namespace blockledger {

Partition hook_partition(int p, int a) {
  require_prime(p);
  if (a < 1 || a > p - 1)
    throw std::invalid_argument("hook leg must satisfy 1 <= a <= p-1");
  std::vector<int> parts{p};
  parts.insert(parts.end(), a, 1);
  return Partition::from_parts(std::move(parts));
}

namespace {

// The rewrite only ever meets layers of four forms.
enum class LayerForm { kEmpty, kSingleRow, kHook, kRowAndBox };

struct LayerClass {
  LayerForm form;
  int a = 0;  // row length for kSingleRow, hook leg for kHook
};

LayerClass classify(const std::vector<Partition>& layer, int p) {
  for (size_t i = 2; i < layer.size(); ++i)
    if (!layer[i].empty()) return {LayerForm::kEmpty, -1};  // unrecognised; caller rejects
  const Partition& first = layer.empty() ? Partition() : layer[0];
  const Partition& second = layer.size() < 2 ? Partition() : layer[1];
  if (second.empty()) {
    if (first.empty()) return {LayerForm::kEmpty, 0};
    if (first.rows() == 1 && first.part(1) <= p - 1) return {LayerForm::kSingleRow, first.part(1)};
    if (first.part(1) == p && first.rows() >= 2) {
      const int a = first.rows() - 1;
      if (a <= p - 1 && first == hook_partition(p, a)) return {LayerForm::kHook, a};
    }
    return {LayerForm::kEmpty, -1};
  }
  if (first == Partition::single_row(p - 1) && second == Partition::single_row(1))
    return {LayerForm::kRowAndBox, 0};
  return {LayerForm::kEmpty, -1};
}

void store(std::vector<Partition>& layer, const Partition& first, const Partition& second) {
  std::fill(layer.begin(), layer.end(), Partition());
  layer[0] = first;
  if (!second.empty()) {
    if (layer.size() < 2) throw internal_error("layer too narrow for two entries");
    layer[1] = second;
  }
}

}  // namespace

HeightLadder build_height_ladder(const BlockLabel& b) {
  make_block_label(b.p, b.core, b.weight);  // validate
  if (b.weight < 1) throw std::invalid_argument("height ladder requires weight >= 1");
  const int p = b.p;
  const DefectShape shape = defect_shape(b);
  const int k = shape.k();

  // Tower of lambda_0: core at layer 0, a single row (a_j) at each layer j.
  CoreTower t;
  t.p = p;
  t.layers.push_back({b.core});
  long long entries = 1;
  for (int j = 1; j <= k; ++j) {
    entries *= p;
    std::vector<Partition> layer(entries);
    layer[0] = Partition::single_row(shape.digits[j - 1]);
    t.layers.push_back(std::move(layer));
  }

  HeightLadder ladder;
  ladder.label = b;
  ladder.k = k;
  auto push = [&ladder, &b](const CoreTower& tower, int expected_height) {
    CoreTower trimmed = tower;
    while (trimmed.depth() > 1 && trimmed.layer_size(trimmed.depth() - 1) == 0)
      trimmed.layers.pop_back();
    const Partition la = from_tower(trimmed);
    if (la.size() != b.n()) throw internal_error("ladder member has wrong size");
    const int h = height_tower(la, b);
    if (h != expected_height || h != height_valuation(la, b))
      throw internal_error("ladder member " + la.str() + " has unexpected height");
    ladder.members.push_back(la);
    ladder.heights.push_back(h);
    ladder.self_conjugate.push_back(la.self_conjugate());
    ladder.towers.push_back(std::move(trimmed));
  };
  push(t, 0);

  for (int j = 1; j <= k - 1; ++j) {
    auto& upper = t.layers[k - j];      // gains p boxes
    auto& lower = t.layers[k - j + 1];  // loses one box
    const LayerClass uc = classify(upper, p);
    const LayerClass lc = classify(lower, p);

    switch (uc.form) {
      case LayerForm::kEmpty:
        if (uc.a != 0) throw internal_error("unexpected tower layer in ladder step");
        store(upper, Partition::single_row(p - 1), Partition::single_row(1));
        break;
      case LayerForm::kSingleRow:
        store(upper, hook_partition(p, uc.a), {});
        break;
      default:
        throw internal_error("unexpected tower layer in ladder step");
    }
    switch (lc.form) {
      case LayerForm::kSingleRow:
        store(lower, Partition::single_row(lc.a - 1), {});
        break;
      case LayerForm::kHook:
        if (lc.a >= 2)
          store(lower, hook_partition(p, lc.a - 1), {});
        else
          store(lower, Partition::single_row(p - 1), Partition::single_row(1));
        break;
      case LayerForm::kRowAndBox:
        store(lower, Partition::single_row(p - 1), {});
        break;
      default:
        throw internal_error("unexpected tower layer in ladder step");
    }
    push(t, j);
  }
  return ladder;
}

LadderCheck verify_height_ladder(const BlockLabel& b) {
  LadderCheck check;
  try {
    check.ladder = build_height_ladder(b);
  } catch (const std::exception& e) {
    check.failure = e.what();
    return check;
  }
  const HeightLadder& ladder = check.ladder;
  auto fail = [&check](const std::string& why) {
    check.failure = why;
    return check;
  };

  if (static_cast<int>(ladder.members.size()) != ladder.k)
    return fail("expected k members");
  for (int i = 0; i < ladder.k; ++i) {
    const Partition& la = ladder.members[i];
    for (int j = i + 1; j < ladder.k; ++j)
      if (la == ladder.members[j]) return fail("ladder members not distinct");
    if (!(block_of(la, b.p) == b)) return fail("member " + la.str() + " not in block");
    if (ladder.heights[i] != i) return fail("heights are not 0..k-1");
    if (height_valuation(la, b) != i) return fail("valuation height disagrees");
  }
  for (int j = 1; j <= ladder.k - 1; ++j) {
    const CoreTower& prev = ladder.towers[j - 1];
    const CoreTower& cur = ladder.towers[j];
    const int upper = ladder.k - j, lower = ladder.k - j + 1;
    if (cur.layer_size(upper) != prev.layer_size(upper) + b.p)
      return fail("step " + std::to_string(j) + ": layer " + std::to_string(upper) +
                  " did not gain p boxes");
    if (cur.layer_size(lower) != prev.layer_size(lower) - 1)
      return fail("step " + std::to_string(j) + ": layer " + std::to_string(lower) +
                  " did not lose one box");
  }
  check.ok = true;
  return check;
}

}  // namespace blockledger
