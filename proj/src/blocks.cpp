#include "blocks.hpp"

#include <algorithm>
#include <stdexcept>

#include "errors.hpp"

namespace blockledger {

std::string BlockLabel::str() const {
  return "p=" + std::to_string(p) + " core=" + core.str() + " w=" + std::to_string(weight);
}

BlockLabel make_block_label(int p, Partition core, int weight) {
  require_prime(p);
  if (weight < 0) throw std::invalid_argument("block weight must be nonnegative");
  if (!is_p_core(core, p))
    throw std::invalid_argument("not a p-core for p=" + std::to_string(p) + ": " + core.str());
  return BlockLabel{p, std::move(core), weight};
}

BlockLabel block_of(const Partition& la, int p) {
  require_prime(p);
  return BlockLabel{p, p_core(la, p), weight(la, p)};
}

DefectShape defect_shape(const BlockLabel& b) {
  DefectShape s;
  for (int w = b.weight; w > 0; w /= b.p) s.digits.push_back(w % b.p);
  return s;
}

int derived_length(const DefectShape& s) { return s.k(); }

int defect(const BlockLabel& b) {
  return legendre_valuation(static_cast<long long>(b.weight) * b.p, b.p);
}

namespace {

// All p-component tuples with total size w, appended to out.
void gen_tuples(int w, int components, QuotientTuple& acc, const BlockLabel& b,
                std::vector<Partition>& out) {
  if (components == 1) {
    for (const Partition& la : partitions_of(w)) {
      acc.push_back(la);
      out.push_back(from_core_quotient(b.core, acc, b.p));
      acc.pop_back();
    }
    return;
  }
  for (int s = 0; s <= w; ++s) {
    for (const Partition& la : partitions_of(s)) {
      acc.push_back(la);
      gen_tuples(w - s, components - 1, acc, b, out);
      acc.pop_back();
    }
  }
}

}  // namespace

std::vector<Partition> enumerate_block(const BlockLabel& b) {
  make_block_label(b.p, b.core, b.weight);  // validate
  std::vector<Partition> members;
  QuotientTuple acc;
  acc.reserve(b.p);
  gen_tuples(b.weight, b.p, acc, b, members);
  std::sort(members.begin(), members.end(), canonical_less);
  return members;
}

namespace {

void require_member(const Partition& la, const BlockLabel& b) {
  if (!(block_of(la, b.p) == b))
    throw std::invalid_argument("partition " + la.str() + " is not in block " + b.str());
}

}  // namespace

int height_valuation(const Partition& la, const BlockLabel& b) {
  require_member(la, b);
  const int h = degree_valuation(la, b.p) - (legendre_valuation(la.size(), b.p) - defect(b));
  if (h < 0) throw internal_error("negative height");
  return h;
}

int height_tower(const Partition& la, const BlockLabel& b) {
  require_member(la, b);
  const CoreTower t = core_tower(la, b.p);
  const DefectShape shape = defect_shape(b);
  const int layers = std::max(t.depth() - 1, shape.k());
  int sum = 0;
  for (int j = 1; j <= layers; ++j) {
    sum += t.layer_size(j);
    if (j <= shape.k()) sum -= shape.digits[j - 1];
  }
  if (sum % (b.p - 1) != 0) throw internal_error("height numerator not divisible by p-1");
  const int h = sum / (b.p - 1);
  if (h < 0) throw internal_error("negative height");
  return h;
}

BlockReport block_report(const BlockLabel& b, bool cross_check) {
  BlockReport r;
  r.label = b;
  r.members = enumerate_block(b);
  r.degrees.reserve(r.members.size());
  for (const Partition& la : r.members) {
    r.degrees.push_back(degree(la));
    r.cd.insert(r.degrees.back());
    const int h = height_tower(la, b);
    if (cross_check && h != height_valuation(la, b))
      throw internal_error("height mismatch between tower and valuation for " + la.str());
    r.heights.insert(h);
  }
  r.defect = defect(b);
  r.dl = derived_length(defect_shape(b));
  r.thm_c = r.dl <= static_cast<int>(r.heights.size());
  r.question_a = r.dl <= static_cast<int>(r.cd.size());
  return r;
}

std::vector<Partition> p_core_partitions(int m, int p) {
  require_prime(p);
  std::vector<Partition> cores;
  for (const Partition& la : partitions_of(m))
    if (is_p_core(la, p)) cores.push_back(la);
  return cores;
}

std::vector<BlockLabel> blocks_of(int n, int p) {
  require_prime(p);
  if (n < 0) throw std::invalid_argument("n must be nonnegative");
  std::vector<BlockLabel> blocks;
  for (int w = n / p; w >= 0; --w)
    for (const Partition& core : p_core_partitions(n - w * p, p))
      blocks.push_back(BlockLabel{p, core, w});
  return blocks;
}

}  // namespace blockledger
