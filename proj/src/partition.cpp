#include "partition.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include "errors.hpp"

namespace blockledger {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; static_cast<long long>(d) * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

void require_prime(int p) {
  if (!is_prime(p)) throw std::invalid_argument("p must be prime, got " + std::to_string(p));
}

Partition Partition::from_parts(std::vector<int> parts) {
  for (size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (i && parts[i] > parts[i - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
  Partition la;
  la.size_ = std::accumulate(parts.begin(), parts.end(), 0);
  la.parts_ = std::move(parts);
  return la;
}

Partition Partition::normalized(std::vector<int> parts) {
  for (int x : parts)
    if (x < 0) throw std::invalid_argument("partition parts must be nonnegative");
  std::erase(parts, 0);
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return from_parts(std::move(parts));
}

Partition Partition::parse(const std::string& text) {
  std::vector<int> parts;
  size_t i = 0;
  const size_t n = text.size();
  auto skip_ws = [&] { while (i < n && (text[i] == ' ' || text[i] == '\t')) ++i; };
  skip_ws();
  while (i < n) {
    bool neg = false;
    if (text[i] == '-') { neg = true; ++i; }
    if (i >= n || text[i] < '0' || text[i] > '9')
      throw std::invalid_argument("bad partition syntax: \"" + text + "\"");
    long v = 0;
    while (i < n && text[i] >= '0' && text[i] <= '9') {
      v = v * 10 + (text[i] - '0');
      if (v > 1000000) throw std::invalid_argument("partition part out of range");
      ++i;
    }
    parts.push_back(neg ? -static_cast<int>(v) : static_cast<int>(v));
    skip_ws();
    if (i < n) {
      if (text[i] != ',') throw std::invalid_argument("bad partition syntax: \"" + text + "\"");
      ++i;
      skip_ws();
      if (i == n) throw std::invalid_argument("bad partition syntax: \"" + text + "\"");
    }
  }
  return normalized(std::move(parts));
}

Partition Partition::single_row(int a) {
  if (a < 0) throw std::invalid_argument("row length must be nonnegative");
  if (a == 0) return {};
  return from_parts({a});
}

int Partition::part(int i) const {
  if (i < 1) throw std::invalid_argument("part index is 1-based");
  return i <= rows() ? parts_[i - 1] : 0;
}

Partition Partition::conjugate() const {
  if (empty()) return {};
  std::vector<int> cols(parts_[0], 0);
  for (int r = 0; r < rows(); ++r)
    for (int c = 0; c < parts_[r]; ++c) ++cols[c];
  return from_parts(std::move(cols));
}

std::string Partition::str() const {
  if (empty()) return "0";
  std::string s;
  for (int i = 0; i < rows(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s;
}

bool canonical_less(const Partition& a, const Partition& b) {
  return std::lexicographical_compare(b.parts().begin(), b.parts().end(),
                                      a.parts().begin(), a.parts().end());
}

std::vector<int> hook_lengths(const Partition& la) {
  const Partition conj = la.conjugate();
  std::vector<int> hooks;
  hooks.reserve(la.size());
  for (int r = 1; r <= la.rows(); ++r)
    for (int c = 1; c <= la.part(r); ++c)
      hooks.push_back(la.part(r) - c + conj.part(c) - r + 1);
  return hooks;
}

BigInt factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial of negative number");
  static std::vector<BigInt> cache{1};  // cache[k] = k!
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  while (static_cast<int>(cache.size()) <= n) cache.push_back(cache.back() * static_cast<int>(cache.size()));
  return cache[n];
}

BigInt degree(const Partition& la) {
  BigInt hooks = 1;
  for (int h : hook_lengths(la)) hooks *= h;
  const BigInt fact = factorial(la.size());
  BigInt deg = fact / hooks;
  if (deg * hooks != fact) throw internal_error("hook product does not divide n!");
  return deg;
}

int legendre_valuation(long long m, int p) {
  require_prime(p);
  if (m < 0) throw std::invalid_argument("factorial valuation of negative number");
  int v = 0;
  while (m > 0) {
    m /= p;
    v += static_cast<int>(m);
  }
  return v;
}

int valuation(BigInt x, int p) {
  require_prime(p);
  if (x == 0) throw std::invalid_argument("valuation of zero");
  if (x < 0) x = -x;
  int v = 0;
  while (x % p == 0) {
    x /= p;
    ++v;
  }
  return v;
}

int degree_valuation(const Partition& la, int p) {
  int v = legendre_valuation(la.size(), p);
  for (int h : hook_lengths(la)) {
    while (h % p == 0) {
      h /= p;
      --v;
    }
  }
  return v;
}

namespace {

void gen_partitions(int remaining, int max_part, std::vector<int>& acc,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(Partition::from_parts(acc));
    return;
  }
  for (int k = std::min(max_part, remaining); k >= 1; --k) {
    acc.push_back(k);
    gen_partitions(remaining - k, k, acc, out);
    acc.pop_back();
  }
}

}  // namespace

const std::vector<Partition>& partitions_of(int n) {
  if (n < 0) throw std::invalid_argument("partitions of negative number");
  static std::map<int, std::vector<Partition>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) {
    std::vector<Partition> all;
    std::vector<int> acc;
    gen_partitions(n, n, acc, all);
    it = cache.emplace(n, std::move(all)).first;
  }
  return it->second;  // map nodes are stable; safe to use after unlock
}

unsigned long long partition_count(int n) {
  if (n < 0) throw std::invalid_argument("partition count of negative number");
  if (n > 200) throw std::invalid_argument("partition count limited to n <= 200");
  // p(n) = sum_k (-1)^(k-1) [ p(n - k(3k-1)/2) + p(n - k(3k+1)/2) ]
  std::vector<unsigned long long> p(static_cast<size_t>(n) + 1, 0);
  p[0] = 1;
  for (int m = 1; m <= n; ++m) {
    unsigned long long acc = 0;
    for (int k = 1;; ++k) {
      const int g1 = k * (3 * k - 1) / 2;
      const int g2 = k * (3 * k + 1) / 2;
      if (g1 > m && g2 > m) break;
      const bool plus = (k % 2) == 1;
      if (g1 <= m) acc += plus ? p[m - g1] : -p[m - g1];
      if (g2 <= m) acc += plus ? p[m - g2] : -p[m - g2];
    }
    p[m] = acc;
  }
  return p[n];
}

}  // namespace blockledger
