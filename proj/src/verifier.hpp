#pragma once

#include <json.hpp>

#include "blocks.hpp"

namespace blockledger {

struct SweepConfig {
  int max_n = 10;
  std::vector<int> primes{2, 3};
  bool alternating = false;
  // kAuto recomputes every height by the valuation route for n <= 25.
  enum class CrossCheck { kAuto, kOn, kOff } cross_check = CrossCheck::kAuto;
  int jobs = 1;
};

// Rows are emitted in a fixed order (prime, then n, then block order), so the
// rendered report is byte-identical regardless of the job count. Timing
// appears only in the table footer.
struct SweepReport {
  SweepConfig config;
  std::vector<nlohmann::ordered_json> rows;
  std::vector<std::string> violations;
  long long blocks = 0;
  long long families = 0;
  long long alt_views = 0;
  long long members = 0;
  double elapsed_seconds = 0.0;

  int violation_count() const { return static_cast<int>(violations.size()); }
  std::string render(const std::string& format) const;  // "table" | "json" | "csv"
};

// Checks every block of every symmetric group up to max_n for each prime:
// dl <= #heights <= #degrees, the height ladder (weight >= 1), the member
// count identity against the partition count, optional index-2 views (n >= 5),
// and optional height cross-checks.
SweepReport run_sweep(const SweepConfig& config);

}  // namespace blockledger
