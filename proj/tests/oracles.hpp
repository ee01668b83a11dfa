// Independent brute-force oracles used only by the tests. These deliberately
// avoid the library's beta-set machinery so that agreement is meaningful.
#pragma once

#include <map>
#include <stdexcept>
#include <unordered_set>
#include <vector>

#include "groupcalc.hpp"

namespace oracles {

// Number of ways to fill the diagram with 1..n increasing along rows and
// columns, by exhaustive removal of the largest entry (always at a corner).
inline long long syt_count(const std::vector<int>& parts) {
  static std::map<std::vector<int>, long long> memo;
  if (parts.empty()) return 1;
  const auto it = memo.find(parts);
  if (it != memo.end()) return it->second;
  long long total = 0;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i + 1 < parts.size() && parts[i] == parts[i + 1]) continue;  // not a corner
    std::vector<int> next = parts;
    if (--next[i] == 0) next.erase(next.begin() + i);
    total += syt_count(next);
  }
  memo[parts] = total;
  return total;
}

// Column lengths of the diagram: number of rows with at least j+1 boxes.
inline int column_length(const std::vector<int>& parts, int j) {
  int r = 0;
  while (r < static_cast<int>(parts.size()) && parts[r] > j) ++r;
  return r;
}

// Hook length of the box in row i, column j (0-based; box must exist):
// arm (parts[i]-j-1) + leg (column_length-i-1) + 1.
inline int hook_at(const std::vector<int>& parts, int i, int j) {
  return parts[i] - j + column_length(parts, j) - i - 1;
}

// Remove the length-hook_at(i,j) rim hook determined by box (i, j): rows
// i..r-2 take the next row's length minus one and row r-1 is cut to j boxes,
// where r is the column length at j.
inline std::vector<int> remove_rim_hook(const std::vector<int>& parts, int i, int j) {
  const int r = column_length(parts, j);
  std::vector<int> next = parts;
  for (int k = i; k + 1 < r; ++k) next[k] = parts[k + 1] - 1;
  next[r - 1] = j;
  std::erase(next, 0);
  for (size_t k = 1; k < next.size(); ++k)
    if (next[k] > next[k - 1]) throw std::logic_error("rim hook removal broke the diagram");
  return next;
}

// Strip length-p rim hooks in every possible order; all orders must agree.
inline std::vector<int> rim_hook_core(const std::vector<int>& parts, int p) {
  static std::map<std::pair<std::vector<int>, int>, std::vector<int>> memo;
  const auto key = std::make_pair(parts, p);
  const auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  bool found = false;
  std::vector<int> core;
  for (int i = 0; i < static_cast<int>(parts.size()); ++i) {
    for (int j = 0; j < parts[i]; ++j) {
      if (hook_at(parts, i, j) != p) continue;
      const std::vector<int> sub = rim_hook_core(remove_rim_hook(parts, i, j), p);
      if (found && sub != core)
        throw std::logic_error("rim hook stripping is not order-independent");
      core = sub;
      found = true;
    }
  }
  if (!found) core = parts;  // no hook of length p anywhere
  memo[key] = core;
  return core;
}

// Number of hooks stripped on the way to the core.
inline int rim_hook_weight(const std::vector<int>& parts, int p) {
  int boxes = 0;
  for (int x : parts) boxes += x;
  int residue = 0;
  for (int x : rim_hook_core(parts, p)) residue += x;
  if ((boxes - residue) % p != 0) throw std::logic_error("stripped boxes not a multiple of p");
  return (boxes - residue) / p;
}

// Conjugacy classes of an enumerated permutation group, by direct orbit walk.
inline int conjugacy_class_count(const blockledger::FiniteGroup<blockledger::Perm>& g) {
  std::unordered_set<blockledger::Perm, blockledger::ElementHash<blockledger::Perm>> seen;
  int classes = 0;
  for (const auto& e : g.elements()) {
    if (seen.contains(e)) continue;
    ++classes;
    for (const auto& h : g.elements()) seen.insert(h.compose(e).compose(h.inverse()));
  }
  return classes;
}

}  // namespace oracles
