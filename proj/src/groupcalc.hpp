#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <unordered_set>
#include <vector>

namespace blockledger {

// Hard enumeration budgets; exceeding one raises budget_error up front.
inline constexpr std::size_t kPermGroupBudget = std::size_t{1} << 15;
inline constexpr std::size_t kMatrixGroupBudget = std::size_t{1} << 16;
// Derived subgroups use all element pairs up to this order, generator
// commutators plus normal closure above it.
inline constexpr std::size_t kAllPairsLimit = 4096;

// Permutation of {0..points-1}, points <= 16.
class Perm {
 public:
  Perm() = default;
  static Perm identity(int points);
  static Perm from_images(const std::vector<int>& images);

  int points() const { return points_; }
  int image(int x) const { return img_[x]; }
  bool is_identity() const;
  bool is_even() const;

  Perm compose(const Perm& g) const;  // (this.compose(g))(x) = this(g(x))
  Perm inverse() const;

  std::size_t hash() const;
  bool operator==(const Perm&) const = default;

 private:
  std::uint8_t points_ = 0;
  std::array<std::uint8_t, 16> img_{};
};

// Square matrix over F_p, dimension <= 6, p <= 251; constructors only build
// upper unitriangular ones.
class UniMat {
 public:
  UniMat() = default;
  static UniMat identity(int dim, int p);
  // I + scalar * E_{row,row+1}, rows 0-based.
  static UniMat transvection(int dim, int p, int row, int scalar);

  int dim() const { return dim_; }
  int prime() const { return p_; }
  int at(int r, int c) const { return a_[r * dim_ + c]; }
  bool is_identity() const;

  UniMat compose(const UniMat& g) const;  // matrix product, this * g
  UniMat inverse() const;

  std::size_t hash() const;
  bool operator==(const UniMat&) const = default;

 private:
  std::uint8_t dim_ = 0;
  std::uint8_t p_ = 0;
  std::array<std::uint8_t, 36> a_{};
};

template <class E>
struct ElementHash {
  std::size_t operator()(const E& e) const { return e.hash(); }
};

// [a, b] = a^-1 b^-1 a b.
template <class E>
E commutator(const E& a, const E& b) {
  return a.inverse().compose(b.inverse()).compose(a).compose(b);
}

// A finite group held as its full element list plus a small generating set.
template <class E>
class FiniteGroup {
 public:
  static FiniteGroup generated_by(const E& identity, std::vector<E> gens, std::size_t budget);
  // `elements` must be closed under the operation; derives a generating set.
  static FiniteGroup from_elements(const E& identity, const std::vector<E>& elements);

  std::size_t order() const { return elems_.size(); }
  const E& identity() const { return id_; }
  const std::vector<E>& elements() const { return elems_; }
  const std::vector<E>& generators() const { return gens_; }
  bool contains(const E& e) const { return set_.contains(e); }

  // Path chosen by order: all element pairs up to kAllPairsLimit, otherwise
  // generator commutators closed under conjugation by the generators.
  FiniteGroup derived_subgroup() const;
  FiniteGroup derived_subgroup_via_pairs() const;    // exposed for cross-checks
  FiniteGroup derived_subgroup_via_closure() const;  // exposed for cross-checks

  std::vector<std::size_t> derived_series() const;  // orders, down to 1
  int derived_length() const;                       // throws if not solvable
  std::vector<std::size_t> lower_central_series() const;
  int nilpotency_class() const;                     // throws if not nilpotent

 private:
  FiniteGroup() = default;
  static FiniteGroup closure(const E& identity, std::vector<E> gens, std::size_t budget);
  FiniteGroup normal_closure(std::vector<E> seeds) const;  // closure in *this
  FiniteGroup ambient_commutator(const FiniteGroup& sub) const;  // [sub, *this]

  E id_{};
  std::vector<E> gens_;
  std::vector<E> elems_;
  std::unordered_set<E, ElementHash<E>> set_;
  std::size_t budget_ = 0;
};

extern template class FiniteGroup<Perm>;
extern template class FiniteGroup<UniMat>;

// Sylow p-subgroup of the symmetric group on m letters (m <= 16): direct
// product, over the base-p digits of m, of iterated wreath products built
// from block-shift generators on disjoint segments.
FiniteGroup<Perm> sylow_symmetric(int m, int p);

// Even-signature elements as a group (index 2 unless already all even).
FiniteGroup<Perm> even_part(const FiniteGroup<Perm>& g);

// Upper unitriangular n x n matrices over F_p, generated by the first
// superdiagonal transvections with every nonzero scalar.
FiniteGroup<UniMat> unitriangular(int n, int p);

}  // namespace blockledger
