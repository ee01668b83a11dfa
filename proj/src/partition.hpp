#pragma once

#include <set>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace blockledger {

using BigInt = boost::multiprecision::cpp_int;

bool is_prime(int p);
void require_prime(int p);  // throws std::invalid_argument otherwise

// Integer partition: weakly decreasing positive parts, canonical storage
// (no trailing zeros). The empty partition has no parts.
class Partition {
 public:
  Partition() = default;

  // Validates weakly decreasing, positive parts.
  static Partition from_parts(std::vector<int> parts);
  // Accepts any order, drops zeros, sorts descending. Rejects negatives.
  static Partition normalized(std::vector<int> parts);
  // Comma-separated parts, e.g. "3,1,1"; "" and "0" denote the empty partition.
  static Partition parse(const std::string& text);
  // Single row (a); empty when a == 0.
  static Partition single_row(int a);

  const std::vector<int>& parts() const { return parts_; }
  int rows() const { return static_cast<int>(parts_.size()); }
  int size() const { return size_; }  // number of boxes
  bool empty() const { return parts_.empty(); }
  int part(int i) const;  // 1-based; 0 beyond the last row

  Partition conjugate() const;
  bool self_conjugate() const { return *this == conjugate(); }

  std::string str() const;  // "3,1,1"; "0" for the empty partition

  bool operator==(const Partition&) const = default;

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

// Display order: lexicographically decreasing part sequences, so for fixed n
// the row (n) comes first and (1,...,1) last.
bool canonical_less(const Partition& a, const Partition& b);

// Hook lengths in row-major box order.
std::vector<int> hook_lengths(const Partition& la);

BigInt factorial(int n);

// Character degree of the irreducible labelled by `la` in the symmetric group
// on |la| letters: |la|! divided by the product of all hook lengths.
BigInt degree(const Partition& la);

// v_p(m!) = sum_i floor(m / p^i).
int legendre_valuation(long long m, int p);

// v_p(x) for x != 0.
int valuation(BigInt x, int p);

// v_p(degree(la)) computed purely from hook lengths (no big-integer division):
// v_p(n!) - sum of v_p over all hooks.
int degree_valuation(const Partition& la, int p);

// All partitions of n in canonical order. Returned reference is stable and
// safe to share across threads once obtained.
const std::vector<Partition>& partitions_of(int n);

// p(n) by Euler's pentagonal-number recurrence; independent of partitions_of.
unsigned long long partition_count(int n);

}  // namespace blockledger
