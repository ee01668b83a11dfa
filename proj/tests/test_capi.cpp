#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>
#include <vector>

#include <json.hpp>

#include "blockledger.h"

using Json = nlohmann::ordered_json;

namespace {

// Owns a string returned through a char** out-parameter.
struct CStr {
  char* p = nullptr;
  ~CStr() { blc_free(p); }
  CStr() = default;
  CStr(const CStr&) = delete;
  CStr& operator=(const CStr&) = delete;
  std::string str() const { return p ? std::string(p) : std::string(); }
  Json json() const { return Json::parse(str()); }
};

}  // namespace

TEST_CASE("partition operations") {
  CStr out;
  REQUIRE(blc_conjugate("3,1", &out.p) == BLC_OK);
  CHECK(out.str() == "2,1,1");
  CHECK(std::string(blc_last_error()).empty());

  CStr deg;
  REQUIRE(blc_degree("4,2,1", &deg.p) == BLC_OK);
  CHECK(deg.str() == "35");

  int val = -1;
  REQUIRE(blc_degree_valuation("3,1,1", 2, &val) == BLC_OK);
  CHECK(val == 1);

  CStr core;
  REQUIRE(blc_core("4,2,1", 3, &core.p) == BLC_OK);
  CHECK(core.str() == "1");

  CStr quot;
  REQUIRE(blc_quotient("2,2", 2, &quot.p) == BLC_OK);
  CHECK(quot.str() == R"(["1","1"])");

  CStr tower;
  REQUIRE(blc_tower("2,2", 2, &tower.p) == BLC_OK);
  CHECK(tower.str() == R"([["0"],["1","1"]])");

  int w = -1;
  REQUIRE(blc_weight("3,1", 2, &w) == BLC_OK);
  CHECK(w == 2);
}

TEST_CASE("partition errors set the thread-local message") {
  CStr out;
  CHECK(blc_conjugate("bogus", &out.p) == BLC_EINVAL);
  CHECK_FALSE(std::string(blc_last_error()).empty());
  CHECK(out.p == nullptr);

  CHECK(blc_conjugate(nullptr, &out.p) == BLC_EINVAL);
  CHECK(blc_conjugate("3,1", nullptr) == BLC_EINVAL);
  CHECK(blc_core("3,1", 4, &out.p) == BLC_EINVAL);
  CHECK(out.p == nullptr);

  // A success clears the message again.
  REQUIRE(blc_conjugate("2", &out.p) == BLC_OK);
  CHECK(std::string(blc_last_error()).empty());
}

TEST_CASE("block report JSON shape") {
  CStr out;
  REQUIRE(blc_block_report(2, "1", 2, 1, &out.p) == BLC_OK);
  const std::string text = out.str();
  // The leading keys come in a fixed order.
  CHECK(text.rfind("{\n  \"p\": 2,\n  \"core\": \"1\",\n  \"weight\": 2,\n  \"n\": 5", 0) == 0);

  const Json j = out.json();
  CHECK(j["p"] == 2);
  CHECK(j["core"] == "1");
  CHECK(j["weight"] == 2);
  CHECK(j["n"] == 5);
  CHECK(j["degrees"] == std::vector<std::string>{"1", "5", "6", "5", "1"});
  CHECK(j["heights"] == std::vector<int>{0, 1});
  CHECK(j["defect"] == 3);
  CHECK(j["dl"] == 2);
  CHECK(j["thmC"] == true);
  CHECK(j["questionA"] == true);
  REQUIRE(j["members"].size() == 5);
  CHECK(j["members"][0] == "5");
  CHECK(j["members"][4] == "1,1,1,1,1");

  // The same report without the height cross-check.
  CStr plain;
  REQUIRE(blc_block_report(2, "1", 2, 0, &plain.p) == BLC_OK);
  CHECK(plain.str() == text);

  // (2) is not a 2-core, and weights cannot be negative.
  CStr bad;
  CHECK(blc_block_report(2, "2", 1, 1, &bad.p) == BLC_EINVAL);
  CHECK(blc_block_report(2, "1", -1, 1, &bad.p) == BLC_EINVAL);
}

TEST_CASE("block list") {
  CStr out;
  REQUIRE(blc_block_list(4, 2, &out.p) == BLC_OK);
  const Json rows = out.json();
  REQUIRE(rows.size() == 1);
  CHECK(rows[0]["core"] == "0");
  CHECK(rows[0]["weight"] == 2);
  CHECK(rows[0]["defect"] == 3);
  CHECK(rows[0]["members"] == 5);
}

TEST_CASE("height ladder") {
  CStr out;
  REQUIRE(blc_height_ladder(2, "1", 2, &out.p) == BLC_OK);
  const Json rows = out.json();
  REQUIRE(rows.size() == 2);
  CHECK(rows[0]["height"] == 0);
  CHECK(rows[1]["height"] == 1);
  CHECK(rows[1]["partition"] == "3,1,1");
  CHECK(rows[1]["degree"] == "6");
  CHECK(rows[1]["self_conjugate"] == true);

  CStr bad;
  CHECK(blc_height_ladder(2, "1", 0, &bad.p) == BLC_EINVAL);
}

TEST_CASE("index-2 view") {
  CStr out;
  REQUIRE(blc_alt_view(2, "1", 2, &out.p) == BLC_OK);
  const Json j = out.json();
  CHECK(j["p"] == 2);
  CHECK(j["core"] == "1");
  CHECK(j["paired_core"] == "1");
  CHECK(j["degrees"] == std::vector<std::string>{"1", "3", "3", "5"});
  CHECK(j["heights"] == std::vector<int>{0});
  CHECK(j["q_valuation"] == 2);
  CHECK(j["dl_q"] == 1);
  CHECK(j["dlq_mode"] == "exact");
  CHECK(j["k"] == 2);
  CHECK(j["ok"] == true);
  CHECK(j["paper_gap"] == true);

  // n = 4 has no index-2 view here.
  CStr bad;
  CHECK(blc_alt_view(2, "0", 2, &bad.p) == BLC_EINVAL);
}

TEST_CASE("exports feed straight back into the external checker") {
  CStr text;
  REQUIRE(blc_export_blocks(4, 2, &text.p) == BLC_OK);
  const Json doc = text.json();
  CHECK(doc["group"] == "S4");
  CHECK(doc["order"] == "24");
  CHECK(doc["prime"] == 2);
  REQUIRE(doc["blocks"].size() == 1);

  blc_external* handle = nullptr;
  REQUIRE(blc_external_parse(text.p, &handle) == BLC_OK);
  CHECK(blc_external_violations(handle) == 0);
  CStr rendered;
  REQUIRE(blc_external_render(handle, "json", &rendered.p) == BLC_OK);
  CHECK(rendered.json()["group"] == "S4");
  blc_external_free(handle);
}

TEST_CASE("group calculations") {
  CStr syl;
  REQUIRE(blc_sylow_symmetric(4, 2, &syl.p) == BLC_OK);
  const Json d8 = syl.json();
  CHECK(d8["order"] == 8);
  CHECK(d8["derived_series"] == std::vector<int>{8, 2, 1});
  CHECK(d8["dl"] == 2);
  CHECK(d8["lower_central_series"] == std::vector<int>{8, 2, 1});
  CHECK(d8["class"] == 2);

  CStr uni;
  REQUIRE(blc_unitriangular(3, 2, &uni.p) == BLC_OK);
  CHECK(uni.json()["order"] == 8);
  CHECK(uni.json()["class"] == 2);

  CStr big;
  CHECK(blc_unitriangular(6, 3, &big.p) == BLC_EBUDGET);
  CHECK_FALSE(std::string(blc_last_error()).empty());
  CHECK(blc_sylow_symmetric(17, 2, &big.p) == BLC_EINVAL);
}

TEST_CASE("sweep handles") {
  const int primes[] = {2, 3};
  blc_sweep* s = nullptr;
  REQUIRE(blc_sweep_run(6, primes, 2, 1, "auto", 2, &s) == BLC_OK);
  REQUIRE(s != nullptr);
  CHECK(blc_sweep_violations(s) == 0);

  CStr js;
  REQUIRE(blc_sweep_render(s, "json", &js.p) == BLC_OK);
  const Json doc = js.json();
  CHECK(doc["sweep"]["max_n"] == 6);
  CHECK(doc["totals"]["violations"] == 0);
  CHECK(doc["rows"].size() > 0);

  CStr bad;
  CHECK(blc_sweep_render(s, "bogus", &bad.p) == BLC_EINVAL);
  blc_sweep_free(s);

  CHECK(blc_sweep_violations(nullptr) == -1);
  blc_sweep* unused = nullptr;
  CHECK(blc_sweep_run(6, nullptr, 0, 0, nullptr, 1, &unused) == BLC_EINVAL);
  CHECK(blc_sweep_run(6, primes, 2, 0, "sideways", 1, &unused) == BLC_EINVAL);
  CHECK(unused == nullptr);
}

TEST_CASE("external data handles") {
  const char* fixture = R"({
    "group": "H", "order": "28431", "prime": 3,
    "blocks": [{"label": "B0", "defect": 7, "degrees": [1, 3, 13, 39],
                "defect_group_cd": [1, 3, 9], "defect_group_dl": 3}]
  })";
  blc_external* e = nullptr;
  REQUIRE(blc_external_parse(fixture, &e) == BLC_OK);
  CHECK(blc_external_violations(e) == 2);
  CStr table;
  REQUIRE(blc_external_render(e, "table", &table.p) == BLC_OK);
  CHECK(table.str().find("violations: 2") != std::string::npos);
  blc_external_free(e);

  blc_external* bad = nullptr;
  CHECK(blc_external_open("/no/such/file.json", &bad) == BLC_EIO);
  CHECK(bad == nullptr);
  CHECK(blc_external_parse("{bad", &bad) == BLC_ESCHEMA);
  CHECK_FALSE(std::string(blc_last_error()).empty());
  CHECK(blc_external_violations(nullptr) == -1);
}
