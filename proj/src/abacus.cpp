#include "abacus.hpp"

#include <algorithm>
#include <stdexcept>

#include "errors.hpp"

namespace blockledger {

BetaSet BetaSet::of(const Partition& la, int bead_count) {
  if (bead_count < la.rows())
    throw std::invalid_argument("bead count smaller than number of parts");
  BetaSet b;
  b.beads.reserve(bead_count);
  for (int i = 1; i <= bead_count; ++i) b.beads.push_back(la.part(i) + bead_count - i);
  return b;
}

Partition BetaSet::to_partition() const {
  std::vector<int> sorted = beads;
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  const int b = static_cast<int>(sorted.size());
  std::vector<int> parts;
  for (int i = 1; i <= b; ++i) {
    if (i > 1 && sorted[i - 1] == sorted[i - 2])
      throw std::invalid_argument("beta-set beads must be distinct");
    const int part = sorted[i - 1] - (b - i);
    if (part < 0) throw internal_error("negative part from beta-set");
    if (part > 0) parts.push_back(part);
  }
  return Partition::from_parts(std::move(parts));
}

namespace {

// Smallest positive multiple of p that can hold every part of la.
int padded_bead_count(const Partition& la, int p) {
  const int need = std::max(la.rows(), 1);
  return ((need + p - 1) / p) * p;
}

// Bead positions per runner, each sorted decreasing.
std::vector<std::vector<int>> runner_positions(const BetaSet& b, int p) {
  std::vector<std::vector<int>> pos(p);
  for (int v : b.beads) pos[v % p].push_back(v / p);
  for (auto& r : pos) std::sort(r.begin(), r.end(), std::greater<>());
  return pos;
}

}  // namespace

bool is_p_core(const Partition& la, int p) {
  require_prime(p);
  for (int h : hook_lengths(la))
    if (h % p == 0) return false;
  return true;
}

Partition p_core(const Partition& la, int p) {
  require_prime(p);
  const BetaSet b = BetaSet::of(la, padded_bead_count(la, p));
  const auto pos = runner_positions(b, p);
  BetaSet slid;
  for (int r = 0; r < p; ++r)
    for (int q = 0; q < static_cast<int>(pos[r].size()); ++q) slid.beads.push_back(q * p + r);
  return slid.to_partition();
}

QuotientTuple p_quotient(const Partition& la, int p) {
  require_prime(p);
  const BetaSet b = BetaSet::of(la, padded_bead_count(la, p));
  const auto pos = runner_positions(b, p);
  QuotientTuple q(p);
  for (int r = 0; r < p; ++r) {
    BetaSet sub;
    sub.beads = pos[r];
    q[r] = sub.to_partition();
  }
  return q;
}

Partition from_core_quotient(const Partition& core, const QuotientTuple& q, int p) {
  require_prime(p);
  if (static_cast<int>(q.size()) != p)
    throw std::invalid_argument("quotient must have exactly p components");
  if (!is_p_core(core, p))
    throw std::invalid_argument("core argument is not a p-core: " + core.str());

  int max_rows = 0;
  for (const Partition& comp : q) max_rows = std::max(max_rows, comp.rows());
  const int b = padded_bead_count(core, p) + p * (max_rows + 1);

  const auto pos = runner_positions(BetaSet::of(core, b), p);
  BetaSet beta;
  for (int r = 0; r < p; ++r) {
    const int c = static_cast<int>(pos[r].size());
    // A p-core's beads sit at the bottom of each runner.
    if (c > 0 && pos[r][0] != c - 1) throw internal_error("core beads not slid down");
    if (q[r].rows() > c) throw internal_error("bead padding too small for quotient");
    for (int i = 1; i <= c; ++i) beta.beads.push_back((q[r].part(i) + c - i) * p + r);
  }
  return beta.to_partition();
}

int weight(const Partition& la, int p) {
  const int diff = la.size() - p_core(la, p).size();
  if (diff % p != 0) throw internal_error("core size incompatible with p");
  return diff / p;
}

int CoreTower::layer_size(int j) const {
  if (j < 0 || j >= depth()) return 0;
  int total = 0;
  for (const Partition& la : layers[j]) total += la.size();
  return total;
}

int CoreTower::size() const {
  int total = 0;
  long long pw = 1;
  for (int j = 0; j < depth(); ++j, pw *= p) total += static_cast<int>(pw) * layer_size(j);
  return total;
}

std::string CoreTower::str() const {
  std::string s = "[";
  for (int j = 0; j < depth(); ++j) {
    if (j) s += ',';
    s += '[';
    for (size_t i = 0; i < layers[j].size(); ++i) {
      if (i) s += ',';
      s += '"' + layers[j][i].str() + '"';
    }
    s += ']';
  }
  s += ']';
  return s;
}

CoreTower core_tower(const Partition& la, int p) {
  require_prime(p);
  CoreTower t;
  t.p = p;
  t.layers.push_back({p_core(la, p)});
  if (is_p_core(la, p)) return t;

  const QuotientTuple q = p_quotient(la, p);
  std::vector<CoreTower> sub;
  sub.reserve(p);
  int sub_depth = 0;
  for (const Partition& comp : q) {
    sub.push_back(core_tower(comp, p));
    sub_depth = std::max(sub_depth, sub.back().depth());
  }
  long long entries = 1;
  for (int j = 1; j <= sub_depth; ++j) {
    // Layer j of the tower is the concatenation of the components' layers
    // j-1, padded to full width so tuple indexing stays positional.
    std::vector<Partition> layer;
    layer.reserve(static_cast<size_t>(entries) * p);
    for (int r = 0; r < p; ++r) {
      const auto& s = sub[r];
      if (j - 1 < s.depth()) {
        layer.insert(layer.end(), s.layers[j - 1].begin(), s.layers[j - 1].end());
        layer.resize(layer.size() + (entries - static_cast<long long>(s.layers[j - 1].size())));
      } else {
        layer.resize(layer.size() + entries);
      }
    }
    t.layers.push_back(std::move(layer));
    entries *= p;
  }
  while (t.depth() > 1 && t.layer_size(t.depth() - 1) == 0) t.layers.pop_back();
  return t;
}

Partition from_tower(const CoreTower& t) {
  const int p = t.p;
  require_prime(p);
  if (t.depth() == 0) throw std::invalid_argument("tower must have at least layer 0");
  long long entries = 1;
  for (int j = 0; j < t.depth(); ++j, entries *= p) {
    if (static_cast<long long>(t.layers[j].size()) != entries)
      throw std::invalid_argument("tower layer " + std::to_string(j) + " must hold p^j entries");
    for (const Partition& la : t.layers[j])
      if (!is_p_core(la, p))
        throw std::invalid_argument("tower entry is not a p-core: " + la.str());
  }
  if (t.depth() == 1) return t.layers[0][0];

  QuotientTuple q(p);
  for (int r = 0; r < p; ++r) {
    CoreTower sub;
    sub.p = p;
    sub.layers.push_back({t.layers[1][r]});
    long long chunk = 1;
    for (int j = 2; j < t.depth(); ++j, chunk *= p) {
      const auto& layer = t.layers[j];
      sub.layers.emplace_back(layer.begin() + r * chunk * p,
                              layer.begin() + (r + 1) * chunk * p);
    }
    while (sub.depth() > 1 && sub.layer_size(sub.depth() - 1) == 0) sub.layers.pop_back();
    q[r] = from_tower(sub);
  }
  return from_core_quotient(t.layers[0][0], q, p);
}

}  // namespace blockledger
