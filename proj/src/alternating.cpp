#include "alternating.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

#include "errors.hpp"
#include "groupcalc.hpp"

namespace blockledger {

const char* mode_name(AltBlockView::Mode m) {
  switch (m) {
    case AltBlockView::Mode::kExact: return "exact";
    case AltBlockView::Mode::kFormula: return "formula";
    case AltBlockView::Mode::kSkipped: return "skipped";
  }
  return "?";
}

namespace {

// Exact derived length of the even part of the Sylow 2-subgroup on `wp`
// letters; cached, wp <= 16.
int exact_even_sylow_dl(int wp) {
  static std::map<int, int> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(wp);
  if (it == cache.end()) {
    const FiniteGroup<Perm> d = sylow_symmetric(wp, 2);
    const FiniteGroup<Perm> q = even_part(d);
    it = cache.emplace(wp, q.derived_length()).first;
  }
  return it->second;
}

}  // namespace

AltBlockView restrict_block(const BlockLabel& b) {
  make_block_label(b.p, b.core, b.weight);  // validate
  const int n = b.n();
  if (n < 5)
    throw std::invalid_argument("index-2 restriction requires n >= 5, got n=" + std::to_string(n));

  AltBlockView view;
  view.source = b;
  view.paired_core = b.core.conjugate();
  view.k = derived_length(defect_shape(b));

  const int d_b = defect(b);
  const int wp = b.weight * b.p;
  if (b.p == 2) {
    view.q_valuation = b.weight >= 1 ? d_b - 1 : 0;
    if (b.weight == 0) {
      view.dl_q = 0;
      view.dlq_mode = AltBlockView::Mode::kFormula;
    } else if (wp <= 16) {
      view.dl_q = exact_even_sylow_dl(wp);
      view.dlq_mode = AltBlockView::Mode::kExact;
    } else {
      view.dl_q = view.k;  // derived length of the full defect group bounds it
      view.dlq_mode = AltBlockView::Mode::kSkipped;
    }
  } else {
    // Odd p: the covered block keeps the full defect group.
    view.q_valuation = d_b;
    view.dl_q = view.k;
    view.dlq_mode = AltBlockView::Mode::kFormula;
  }

  const bool self_paired = b.core.self_conjugate();
  const int base = legendre_valuation(n, b.p) - (b.p == 2 ? 1 : 0) - view.q_valuation;
  for (const Partition& la : enumerate_block(b)) {
    const Partition conj = la.conjugate();
    if (la == conj) {
      BigInt d = degree(la);
      if (d % 2 != 0) throw internal_error("self-conjugate member with odd degree: " + la.str());
      d /= 2;
      view.degrees.push_back(d);
      view.degrees.push_back(std::move(d));
    } else if (!self_paired || canonical_less(la, conj)) {
      // One constituent per conjugate pair; when the paired core differs the
      // partner lives in the paired block, so every member counts here.
      view.degrees.push_back(degree(la));
    }
  }
  std::sort(view.degrees.begin(), view.degrees.end());
  for (const BigInt& d : view.degrees) {
    const int h = valuation(d, b.p) - base;
    if (h < 0) throw internal_error("negative constituent height");
    view.heights.insert(h);
  }
  view.paper_gap = view.k > static_cast<int>(view.heights.size());
  return view;
}

AltCheck verify_alt(const BlockLabel& b) {
  AltCheck check;
  check.view = restrict_block(b);
  check.ok = check.view.dlq_mode == AltBlockView::Mode::kSkipped ||
             check.view.dl_q <= static_cast<int>(check.view.heights.size());
  return check;
}

}  // namespace blockledger
