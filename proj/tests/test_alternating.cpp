#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "alternating.hpp"

using namespace blockledger;

namespace {
Partition P(const char* s) { return Partition::parse(s); }
}  // namespace

TEST_CASE("the five letter block with a repeated height drop") {
  const BlockLabel b = make_block_label(2, P("1"), 2);
  const AltBlockView v = restrict_block(b);
  CHECK(v.degrees == std::vector<BigInt>{1, 3, 3, 5});
  CHECK(v.heights == std::set<int>{0});
  CHECK(v.q_valuation == 2);
  CHECK(v.dl_q == 1);
  CHECK(v.dlq_mode == AltBlockView::Mode::kExact);
  CHECK(v.k == 2);
  CHECK(v.paper_gap);  // k exceeds the single constituent height

  const AltCheck check = verify_alt(b);
  CHECK(check.ok);  // 1 <= 1
}

TEST_CASE("odd primes keep the defect group") {
  const BlockLabel b = make_block_label(3, Partition(), 2);  // six letters
  const AltBlockView v = restrict_block(b);
  CHECK(v.heights == std::set<int>{0});
  CHECK(v.dl_q == 1);
  CHECK(v.dlq_mode == AltBlockView::Mode::kFormula);
  CHECK(v.q_valuation == defect(b));
  CHECK_FALSE(v.paper_gap);
  CHECK(verify_alt(b).ok);
  CHECK(v.heights == block_report(b).heights);
}

TEST_CASE("weight zero viewpoints") {
  // Non-self-conjugate core: the pair collapses to a single constituent.
  const BlockLabel single = make_block_label(5, P("3,2"), 0);
  const AltBlockView v1 = restrict_block(single);
  CHECK(v1.degrees == std::vector<BigInt>{degree(P("3,2"))});
  CHECK(v1.heights == std::set<int>{0});
  CHECK(v1.dl_q == 0);
  CHECK(v1.paired_core == P("2,2,1"));
  CHECK(verify_alt(single).ok);

  // Self-conjugate member: two constituents of half the degree.
  const BlockLabel split = make_block_label(3, P("3,1,1"), 0);
  const AltBlockView v2 = restrict_block(split);
  const BigInt half = degree(P("3,1,1")) / 2;
  CHECK(v2.degrees == std::vector<BigInt>{half, half});
  CHECK(v2.heights == std::set<int>{0});
  CHECK(v2.dl_q == 0);
  CHECK(verify_alt(split).ok);
}

TEST_CASE("conjugate cores are merged") {
  const BlockLabel b = make_block_label(3, P("2"), 1);  // five letters
  const AltBlockView v = restrict_block(b);
  CHECK(v.paired_core == P("1,1"));
  const BlockReport r = block_report(b);
  CHECK(v.degrees.size() == r.members.size());  // one constituent per pair
  CHECK(v.heights == r.heights);
  CHECK(v.dl_q == 1);
  CHECK(verify_alt(b).ok);
}

TEST_CASE("odd primes preserve heights and degrees") {
  for (int n = 5; n <= 12; ++n)
    for (int p : {3, 5})
      for (const BlockLabel& b : blocks_of(n, p)) {
        if (canonical_less(b.core.conjugate(), b.core)) continue;  // one view per pair
        const AltBlockView v = restrict_block(b);
        const BlockReport r = block_report(b);
        CHECK(v.heights == r.heights);
        // Degree multiset agreement under the pairing and splitting rule.
        std::map<BigInt, int> expected, got;
        const bool self_paired = b.core.self_conjugate();
        for (size_t i = 0; i < r.members.size(); ++i) {
          const Partition& la = r.members[i];
          if (la.self_conjugate()) {
            expected[r.degrees[i] / 2] += 2;
          } else if (!self_paired || canonical_less(la, la.conjugate())) {
            expected[r.degrees[i]] += 1;
          }
        }
        for (const BigInt& d : v.degrees) got[d] += 1;
        CHECK(expected == got);
      }
}

TEST_CASE("self conjugate members drop one height at two") {
  for (int n = 5; n <= 12; ++n)
    for (const BlockLabel& b : blocks_of(n, 2)) {
      if (b.weight < 1) continue;
      const AltBlockView v = restrict_block(b);
      const int base = legendre_valuation(n, 2) - 1 - v.q_valuation;
      for (const Partition& la : enumerate_block(b)) {
        if (!la.self_conjugate()) continue;
        const BigInt constituent = degree(la) / 2;
        CHECK(valuation(constituent, 2) - base == height_valuation(la, b) - 1);
      }
    }
}

TEST_CASE("everything verifies on the small range") {
  for (int n = 5; n <= 14; ++n)
    for (int p : {2, 3, 5})
      for (const BlockLabel& b : blocks_of(n, p)) {
        if (canonical_less(b.core.conjugate(), b.core)) continue;
        const AltCheck check = verify_alt(b);
        CHECK(check.ok);
        if (b.p == 2 && b.weight * 2 <= 16)
          CHECK(check.view.dlq_mode != AltBlockView::Mode::kSkipped);
      }
}

TEST_CASE("large even weights are skipped honestly") {
  const BlockLabel b = make_block_label(2, Partition(), 9);  // eighteen letters
  const AltBlockView v = restrict_block(b);
  CHECK(v.dlq_mode == AltBlockView::Mode::kSkipped);
  CHECK(v.dl_q == 4);  // the digit-count bound for weight 9
  CHECK(verify_alt(b).ok);  // skipped checks never fail
}

TEST_CASE("small groups are rejected") {
  CHECK_THROWS_AS(restrict_block(make_block_label(2, Partition(), 2)),
                  std::invalid_argument);  // four letters
  CHECK_THROWS_AS(restrict_block(make_block_label(2, P("2,1"), 0)),
                  std::invalid_argument);  // three letters
}
