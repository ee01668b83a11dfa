#pragma once

#include <optional>

#include <json.hpp>

#include "blocks.hpp"

namespace blockledger {

using Json = nlohmann::ordered_json;

// One block row from an external export:
//   {"label": str, "defect": int, "degrees": [int...],
//    "defect_group_cd": [int...]?, "defect_group_dl": int?}
// Unknown fields are kept in `extra` and echoed back on output.
struct ExternalBlock {
  std::string label;
  int defect = 0;
  std::vector<BigInt> degrees;  // with multiplicity, as given
  std::optional<std::vector<BigInt>> defect_group_cd;
  std::optional<int> defect_group_dl;
  Json extra = Json::object();
};

// {"group": str, "order": "int-as-string", "prime": int, "blocks": [...]}
struct ExternalBlockData {
  std::string group;
  BigInt order;
  int prime = 2;
  std::vector<ExternalBlock> blocks;
  Json extra = Json::object();
};

// Both throw schema_error with a field path like "blocks[0].degrees[2]".
ExternalBlockData parse_external(const std::string& json_text);
ExternalBlockData load_external_file(const std::string& path);

struct BlockVerdicts {
  std::string label;
  std::vector<int> heights;        // aligned with the degree list
  std::set<int> height_set;
  std::set<BigInt> cd;             // distinct degrees
  // "pass" | "fail" when dl is present; otherwise the elementary bound
  // dl <= (defect+1)/2 gives "bound-passed" | "needs exact dl".
  std::string question_a;
  // "pass" | "counterexample" | "skipped"; a = v_p(max cd(D)), b = max height.
  std::string height_conjecture;
  int hc_a = -1;
  int hc_b = -1;
  std::string dl_ht;   // "pass" | "fail" | "skipped"
  std::string taketa;  // |cd(D)| >= dl: "pass" | "fail" | "skipped"
};

struct ExternalReport {
  ExternalBlockData data;
  std::vector<BlockVerdicts> verdicts;
  int violations = 0;  // count of "fail"/"counterexample" verdicts
};

ExternalReport check_external(const ExternalBlockData& data);

// format: "json" | "table" | "csv"
std::string render_external(const ExternalReport& report, const std::string& format);

// Export symmetric-group block reports in the external schema (degrees carry
// multiplicity; the defect-group derived length is the digit count k).
std::string export_reports(int n, int p, const std::vector<BlockReport>& reports);

}  // namespace blockledger
