#include "groupcalc.hpp"

#include <algorithm>
#include <stdexcept>

#include "errors.hpp"
#include "partition.hpp"  // is_prime / require_prime

namespace blockledger {

namespace {

std::size_t fnv1a(const std::uint8_t* data, std::size_t len, std::uint64_t h) {
  for (std::size_t i = 0; i < len; ++i) {
    h ^= data[i];
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

constexpr std::uint64_t kFnvSeed = 1469598103934665603ull;

}  // namespace

Perm Perm::identity(int points) {
  if (points < 0 || points > 16)
    throw std::invalid_argument("permutations support at most 16 points");
  Perm e;
  e.points_ = static_cast<std::uint8_t>(points);
  for (int i = 0; i < points; ++i) e.img_[i] = static_cast<std::uint8_t>(i);
  return e;
}

Perm Perm::from_images(const std::vector<int>& images) {
  Perm g = identity(static_cast<int>(images.size()));
  std::uint32_t seen = 0;
  for (int i = 0; i < g.points(); ++i) {
    const int v = images[i];
    if (v < 0 || v >= g.points() || (seen & (1u << v)))
      throw std::invalid_argument("not a permutation");
    seen |= 1u << v;
    g.img_[i] = static_cast<std::uint8_t>(v);
  }
  return g;
}

bool Perm::is_identity() const {
  for (int i = 0; i < points_; ++i)
    if (img_[i] != i) return false;
  return true;
}

bool Perm::is_even() const {
  std::uint32_t seen = 0;
  int cycles = 0;
  for (int i = 0; i < points_; ++i) {
    if (seen & (1u << i)) continue;
    ++cycles;
    for (int j = i; !(seen & (1u << j)); j = img_[j]) seen |= 1u << j;
  }
  return ((points_ - cycles) & 1) == 0;
}

Perm Perm::compose(const Perm& g) const {
  if (points_ != g.points_) throw std::invalid_argument("degree mismatch");
  Perm r;
  r.points_ = points_;
  for (int i = 0; i < points_; ++i) r.img_[i] = img_[g.img_[i]];
  return r;
}

Perm Perm::inverse() const {
  Perm r;
  r.points_ = points_;
  for (int i = 0; i < points_; ++i) r.img_[img_[i]] = static_cast<std::uint8_t>(i);
  return r;
}

std::size_t Perm::hash() const {
  return fnv1a(img_.data(), points_, kFnvSeed ^ points_);
}

UniMat UniMat::identity(int dim, int p) {
  if (dim < 1 || dim > 6) throw std::invalid_argument("matrix dimension must be 1..6");
  if (p < 2 || p > 251 || !is_prime(p))
    throw std::invalid_argument("matrix entries need a prime modulus <= 251");
  UniMat e;
  e.dim_ = static_cast<std::uint8_t>(dim);
  e.p_ = static_cast<std::uint8_t>(p);
  for (int i = 0; i < dim; ++i) e.a_[i * dim + i] = 1;
  return e;
}

UniMat UniMat::transvection(int dim, int p, int row, int scalar) {
  UniMat t = identity(dim, p);
  if (row < 0 || row + 1 >= dim) throw std::invalid_argument("transvection row out of range");
  if (scalar < 1 || scalar >= p) throw std::invalid_argument("transvection scalar out of range");
  t.a_[row * dim + row + 1] = static_cast<std::uint8_t>(scalar);
  return t;
}

bool UniMat::is_identity() const { return *this == identity(dim_, p_); }

UniMat UniMat::compose(const UniMat& g) const {
  if (dim_ != g.dim_ || p_ != g.p_) throw std::invalid_argument("matrix shape mismatch");
  UniMat r;
  r.dim_ = dim_;
  r.p_ = p_;
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) {
      int acc = 0;
      for (int k = 0; k < dim_; ++k) acc += at(i, k) * g.at(k, j);
      r.a_[i * dim_ + j] = static_cast<std::uint8_t>(acc % p_);
    }
  return r;
}

UniMat UniMat::inverse() const {
  // (I + N)^-1 = I - N + N^2 - ... for the nilpotent strictly upper part N.
  UniMat nil = *this;
  for (int i = 0; i < dim_; ++i) nil.a_[i * dim_ + i] = 0;
  UniMat inv = identity(dim_, p_);
  UniMat term = identity(dim_, p_);
  int sign = 1;
  for (int s = 1; s < dim_; ++s) {
    term = term.compose(nil);
    sign = -sign;
    for (int i = 0; i < dim_ * dim_; ++i) {
      const int v = inv.a_[i] + sign * term.a_[i];
      inv.a_[i] = static_cast<std::uint8_t>(((v % p_) + p_) % p_);
    }
  }
  if (!compose(inv).is_identity()) throw internal_error("matrix inverse failed");
  return inv;
}

std::size_t UniMat::hash() const {
  return fnv1a(a_.data(), static_cast<std::size_t>(dim_) * dim_, kFnvSeed ^ (dim_ * 256 + p_));
}

template <class E>
FiniteGroup<E> FiniteGroup<E>::closure(const E& identity, std::vector<E> gens,
                                       std::size_t budget) {
  FiniteGroup g;
  g.id_ = identity;
  g.budget_ = budget;
  auto push = [&g, budget](E y) {
    if (g.elems_.size() >= budget)
      throw budget_error("group enumeration exceeds budget of " + std::to_string(budget));
    g.elems_.push_back(std::move(y));
  };
  g.set_.insert(identity);
  push(identity);
  // Keep only generators that are new; order of gens_ is deterministic.
  for (const E& x : gens)
    if (g.set_.insert(x).second) {
      push(x);
      g.gens_.push_back(x);
    }
  for (std::size_t i = 0; i < g.elems_.size(); ++i) {
    for (const E& x : g.gens_) {
      E y = g.elems_[i].compose(x);
      if (g.set_.insert(y).second) push(std::move(y));
    }
  }
  if (g.gens_.empty()) g.gens_.push_back(identity);
  return g;
}

template <class E>
FiniteGroup<E> FiniteGroup<E>::generated_by(const E& identity, std::vector<E> gens,
                                            std::size_t budget) {
  return closure(identity, std::move(gens), budget);
}

template <class E>
FiniteGroup<E> FiniteGroup<E>::from_elements(const E& identity, const std::vector<E>& elements) {
  // Sift: each kept generator at least doubles the subgroup, so the passes
  // stay logarithmic in the order.
  //
  // Overflowing the probe budget below already proves the set is not closed:
  // a closed set contains the closure of any of its subsets.
  try {
    std::vector<E> gens;
    FiniteGroup g = closure(identity, {}, elements.size() + 1);
    for (const E& x : elements) {
      if (!g.contains(x)) {
        gens.push_back(x);
        g = closure(identity, gens, elements.size() + 1);
      }
    }
    if (g.order() != elements.size())
      throw std::invalid_argument("element set is not closed under the operation");
    return g;
  } catch (const budget_error&) {
    throw std::invalid_argument("element set is not closed under the operation");
  }
}

template <class E>
FiniteGroup<E> FiniteGroup<E>::normal_closure(std::vector<E> seeds) const {
  std::vector<E> gens;
  {
    std::unordered_set<E, ElementHash<E>> dedup;
    for (E& x : seeds)
      if (!x.is_identity() && dedup.insert(x).second) gens.push_back(std::move(x));
  }
  FiniteGroup k = closure(id_, gens, order() + 1);
  bool grew = true;
  while (grew) {
    grew = false;
    for (std::size_t i = 0; i < k.elems_.size() && !grew; ++i) {
      for (const E& g : gens_) {
        E y = g.inverse().compose(k.elems_[i]).compose(g);
        if (!k.contains(y)) {
          gens.push_back(std::move(y));
          k = closure(id_, gens, order() + 1);
          grew = true;
          break;
        }
      }
    }
  }
  return k;
}

template <class E>
FiniteGroup<E> FiniteGroup<E>::derived_subgroup_via_pairs() const {
  std::unordered_set<E, ElementHash<E>> comms;
  std::vector<E> inverses;
  inverses.reserve(order());
  for (const E& a : elems_) inverses.push_back(a.inverse());
  std::vector<E> gens;
  for (std::size_t i = 0; i < elems_.size(); ++i)
    for (std::size_t j = 0; j < elems_.size(); ++j) {
      E c = inverses[i].compose(inverses[j]).compose(elems_[i]).compose(elems_[j]);
      if (!c.is_identity() && comms.insert(c).second) gens.push_back(std::move(c));
    }
  return closure(id_, std::move(gens), order() + 1);
}

template <class E>
FiniteGroup<E> FiniteGroup<E>::derived_subgroup_via_closure() const {
  std::vector<E> seeds;
  for (const E& a : gens_)
    for (const E& b : gens_) seeds.push_back(commutator(a, b));
  return normal_closure(std::move(seeds));
}

template <class E>
FiniteGroup<E> FiniteGroup<E>::derived_subgroup() const {
  return order() <= kAllPairsLimit ? derived_subgroup_via_pairs() : derived_subgroup_via_closure();
}

template <class E>
std::vector<std::size_t> FiniteGroup<E>::derived_series() const {
  std::vector<std::size_t> orders{order()};
  FiniteGroup cur = *this;
  while (cur.order() > 1) {
    FiniteGroup next = cur.derived_subgroup();
    if (next.order() == cur.order()) break;  // perfect and nontrivial
    orders.push_back(next.order());
    cur = std::move(next);
  }
  return orders;
}

template <class E>
int FiniteGroup<E>::derived_length() const {
  const auto series = derived_series();
  if (series.back() != 1) throw std::invalid_argument("group is not solvable");
  return static_cast<int>(series.size()) - 1;
}

template <class E>
FiniteGroup<E> FiniteGroup<E>::ambient_commutator(const FiniteGroup& sub) const {
  std::vector<E> seeds;
  for (const E& a : sub.gens_)
    for (const E& b : gens_) seeds.push_back(commutator(a, b));
  return normal_closure(std::move(seeds));
}

template <class E>
std::vector<std::size_t> FiniteGroup<E>::lower_central_series() const {
  std::vector<std::size_t> orders{order()};
  FiniteGroup cur = *this;
  while (true) {
    FiniteGroup next = ambient_commutator(cur);
    if (next.order() == cur.order()) break;
    orders.push_back(next.order());
    cur = std::move(next);
  }
  return orders;
}

template <class E>
int FiniteGroup<E>::nilpotency_class() const {
  const auto series = lower_central_series();
  if (series.back() != 1) throw std::invalid_argument("group is not nilpotent");
  return static_cast<int>(series.size()) - 1;
}

template class FiniteGroup<Perm>;
template class FiniteGroup<UniMat>;

namespace {

// Shift generators of the iterated wreath tower on [offset, offset + p^levels).
void wreath_generators(int offset, int levels, int p, int points, std::vector<Perm>& out) {
  int span = 1;
  for (int level = 1; level <= levels; ++level) {
    span *= p;  // p^level
    std::vector<int> img(points);
    for (int x = 0; x < points; ++x) img[x] = x;
    const int block = span / p;
    for (int x = 0; x < span; ++x) img[offset + x] = offset + (x + block) % span;
    out.push_back(Perm::from_images(img));
  }
}

}  // namespace

FiniteGroup<Perm> sylow_symmetric(int m, int p) {
  require_prime(p);
  if (m < 0 || m > 16)
    throw std::invalid_argument("Sylow enumeration supports at most 16 letters");
  const int v = legendre_valuation(m, p);
  std::size_t target = 1;
  for (int i = 0; i < v; ++i) {
    target *= static_cast<std::size_t>(p);
    if (target > kPermGroupBudget)
      throw budget_error("Sylow subgroup order exceeds the enumeration budget");
  }
  std::vector<Perm> gens;
  int offset = 0;
  std::vector<int> digits;
  for (int rest = m; rest > 0; rest /= p) digits.push_back(rest % p);
  for (int i = static_cast<int>(digits.size()) - 1; i >= 1; --i) {
    int block = 1;
    for (int j = 0; j < i; ++j) block *= p;
    for (int copy = 0; copy < digits[i]; ++copy) {
      wreath_generators(offset, i, p, m, gens);
      offset += block;
    }
  }
  FiniteGroup<Perm> g = FiniteGroup<Perm>::generated_by(Perm::identity(m), std::move(gens),
                                                        kPermGroupBudget);
  if (g.order() != target) throw internal_error("Sylow subgroup has unexpected order");
  return g;
}

FiniteGroup<Perm> even_part(const FiniteGroup<Perm>& g) {
  std::vector<Perm> even;
  for (const Perm& x : g.elements())
    if (x.is_even()) even.push_back(x);
  return FiniteGroup<Perm>::from_elements(g.identity(), even);
}

FiniteGroup<UniMat> unitriangular(int n, int p) {
  require_prime(p);
  if (n < 1 || n > 6)
    throw std::invalid_argument("unitriangular enumeration supports dimensions 1..6");
  if (p > 251) throw std::invalid_argument("matrix entries need a prime modulus <= 251");
  std::size_t target = 1;
  for (int i = 0; i < n * (n - 1) / 2; ++i) {
    target *= static_cast<std::size_t>(p);
    if (target > kMatrixGroupBudget)
      throw budget_error("unitriangular group order exceeds the enumeration budget");
  }
  std::vector<UniMat> gens;
  for (int row = 0; row + 1 < n; ++row)
    for (int c = 1; c < p; ++c) gens.push_back(UniMat::transvection(n, p, row, c));
  FiniteGroup<UniMat> g = FiniteGroup<UniMat>::generated_by(UniMat::identity(n, p),
                                                            std::move(gens), kMatrixGroupBudget);
  if (g.order() != target) throw internal_error("unitriangular group has unexpected order");
  return g;
}

}  // namespace blockledger
