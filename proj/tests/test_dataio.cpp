#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <string>
#include <vector>

#include "dataio.hpp"
#include "errors.hpp"
#include "groupcalc.hpp"
#include "oracles.hpp"

using namespace blockledger;

namespace {

// A solvable group of order 3^7 * 13 whose unique 3-block separates the
// degree-count bound from the height-count bound.
const char* kFixture = R"({
  "group": "H",
  "order": "28431",
  "prime": 3,
  "comment": "hand-checked fixture",
  "blocks": [
    {
      "label": "B0",
      "defect": 7,
      "degrees": [1, 3, 13, 39],
      "defect_group_cd": [1, 3, 9],
      "defect_group_dl": 3
    }
  ]
})";

void expect_schema(const std::string& text, const std::string& path_fragment) {
  try {
    parse_external(text);
    FAIL_CHECK("no schema_error for path ", path_fragment, " in: ", text);
  } catch (const schema_error& e) {
    CHECK(std::string(e.what()).find(path_fragment) != std::string::npos);
  }
}

}  // namespace

TEST_CASE("fixture parses with unknown fields preserved") {
  const ExternalBlockData data = parse_external(kFixture);
  CHECK(data.group == "H");
  CHECK(data.order == BigInt(28431));
  CHECK(data.prime == 3);
  REQUIRE(data.blocks.size() == 1);
  const ExternalBlock& b = data.blocks[0];
  CHECK(b.label == "B0");
  CHECK(b.defect == 7);
  CHECK(b.degrees == std::vector<BigInt>{1, 3, 13, 39});
  REQUIRE(b.defect_group_cd.has_value());
  CHECK(*b.defect_group_cd == std::vector<BigInt>{1, 3, 9});
  REQUIRE(b.defect_group_dl.has_value());
  CHECK(*b.defect_group_dl == 3);
  CHECK(b.extra.empty());
  REQUIRE(data.extra.contains("comment"));
  CHECK(data.extra["comment"] == "hand-checked fixture");
}

TEST_CASE("fixture verdicts: degree count passes, heights and max degree fail") {
  const ExternalReport report = check_external(parse_external(kFixture));
  REQUIRE(report.verdicts.size() == 1);
  const BlockVerdicts& v = report.verdicts[0];
  CHECK(v.label == "B0");
  CHECK(v.heights == std::vector<int>{0, 1, 0, 1});
  CHECK(v.height_set == std::set<int>{0, 1});
  CHECK(v.cd == std::set<BigInt>{1, 3, 13, 39});
  CHECK(v.question_a == "pass");  // dl 3 <= |cd| 4
  CHECK(v.height_conjecture == "counterexample");
  CHECK(v.hc_a == 2);  // v_3(9)
  CHECK(v.hc_b == 1);  // max height
  CHECK(v.dl_ht == "fail");  // dl 3 > 2 distinct heights
  CHECK(v.taketa == "pass");  // |cd(D)| 3 >= dl 3
  CHECK(report.violations == 2);
}

TEST_CASE("fixture renders in all three formats") {
  const ExternalReport report = check_external(parse_external(kFixture));

  const std::string js = render_external(report, "json");
  const Json round = Json::parse(js);
  CHECK(round["group"] == "H");
  CHECK(round["order"] == "28431");
  CHECK(round["violations"] == 2);
  REQUIRE(round["blocks"].size() == 1);
  CHECK(round["blocks"][0]["question_a"] == "pass");
  CHECK(round["blocks"][0]["height_conjecture"]["verdict"] == "counterexample");
  CHECK(round["blocks"][0]["height_conjecture"]["a"] == 2);
  CHECK(round["blocks"][0]["height_conjecture"]["b"] == 1);
  CHECK(round["blocks"][0]["dl_ht"] == "fail");
  // Unknown input fields ride along unchanged.
  CHECK(round["extra"]["comment"] == "hand-checked fixture");

  const std::string csv = render_external(report, "csv");
  CHECK(csv.substr(0, csv.find('\n')) ==
        "label,defect,heights,question_a,height_conjecture,a,b,dl_ht,taketa");
  CHECK(csv.find("counterexample") != std::string::npos);

  const std::string table = render_external(report, "table");
  CHECK(table.find("group H") != std::string::npos);
  CHECK(table.find("violations: 2") != std::string::npos);

  CHECK_THROWS_AS(render_external(report, "bogus"), std::invalid_argument);
}

TEST_CASE("file loading") {
  namespace fs = std::filesystem;
  const fs::path path = fs::temp_directory_path() / "blockledger_dataio_test.json";
  {
    std::ofstream out(path);
    out << kFixture;
  }
  const ExternalBlockData data = load_external_file(path.string());
  CHECK(data.group == "H");
  CHECK(check_external(data).violations == 2);
  std::remove(path.string().c_str());

  CHECK_THROWS_AS(load_external_file((fs::temp_directory_path() / "no_such_file.json").string()),
                  io_error);
}

TEST_CASE("schema errors name the offending field") {
  expect_schema("{bad", "(document)");
  expect_schema("[]", "(document)");
  expect_schema(R"({"order":"6","prime":3,"blocks":[]})", "group");
  expect_schema(R"({"group":7,"order":"6","prime":3,"blocks":[]})", "group");
  expect_schema(R"({"group":"G","prime":3,"blocks":[]})", "order");
  expect_schema(R"({"group":"G","order":"12x","prime":3,"blocks":[]})", "order");
  expect_schema(R"({"group":"G","order":-5,"prime":3,"blocks":[]})", "order");
  expect_schema(R"({"group":"G","order":"0","prime":3,"blocks":[]})", "order");
  expect_schema(R"({"group":"G","order":"6","blocks":[]})", "prime");
  expect_schema(R"({"group":"G","order":"6","prime":6,"blocks":[]})", "prime");
  expect_schema(R"({"group":"G","order":"6","prime":"3","blocks":[]})", "prime");
  expect_schema(R"({"group":"G","order":"6","prime":3})", "blocks");
  expect_schema(R"({"group":"G","order":"6","prime":3,"blocks":{}})", "blocks");
  expect_schema(R"({"group":"G","order":"6","prime":3,"blocks":[5]})", "blocks[0]");

  const std::string head = R"({"group":"G","order":"24","prime":2,"blocks":[)";
  expect_schema(head + R"({"defect":0,"degrees":[8]}]})", "blocks[0].label");
  expect_schema(head + R"({"label":"B","degrees":[8]}]})", "blocks[0].defect");
  // v_2(24) = 3, so defect 4 cannot occur.
  expect_schema(head + R"({"label":"B","defect":4,"degrees":[1]}]})", "blocks[0].defect");
  expect_schema(head + R"({"label":"B","defect":3}]})", "blocks[0].degrees");
  expect_schema(head + R"({"label":"B","defect":3,"degrees":[]}]})", "blocks[0].degrees");
  expect_schema(head + R"({"label":"B","defect":3,"degrees":[1,2,0]}]})",
                "blocks[0].degrees[2]");
  // Defect 0 forces v_2(degree) = 3; degree 2 would mean a negative height.
  expect_schema(head + R"({"label":"B","defect":0,"degrees":[2]}]})", "blocks[0].degrees[0]");
  expect_schema(head + R"({"label":"B","defect":3,"degrees":[1],"defect_group_cd":[]}]})",
                "blocks[0].defect_group_cd");
  expect_schema(head + R"({"label":"B","defect":3,"degrees":[1],"defect_group_cd":[1,6]}]})",
                "blocks[0].defect_group_cd[1]");
  expect_schema(
      head + R"({"label":"B","defect":3,"degrees":[1],"defect_group_dl":-1}]})",
      "blocks[0].defect_group_dl");
}

TEST_CASE("order may be a plain integer and blocks may be empty") {
  const ExternalBlockData data =
      parse_external(R"({"group":"G","order":24,"prime":2,"blocks":[]})");
  CHECK(data.order == BigInt(24));
  const ExternalReport report = check_external(data);
  CHECK(report.verdicts.empty());
  CHECK(report.violations == 0);
  CHECK(render_external(report, "table").find("no violations") != std::string::npos);
}

TEST_CASE("degree-count check falls back to the defect bound without dl") {
  // Small defect: (2+1)/2 = 1 <= |cd| holds with a single degree.
  const ExternalReport small = check_external(parse_external(
      R"({"group":"G","order":"8","prime":2,"blocks":[
           {"label":"B","defect":2,"degrees":[2]}]})"));
  REQUIRE(small.verdicts.size() == 1);
  CHECK(small.verdicts[0].question_a == "bound-passed");
  CHECK(small.verdicts[0].dl_ht == "skipped");
  CHECK(small.verdicts[0].taketa == "skipped");
  CHECK(small.verdicts[0].height_conjecture == "skipped");
  CHECK(small.violations == 0);

  // Large defect: (9+1)/2 = 5 > |cd| = 1, so the bound is inconclusive.
  const ExternalReport large = check_external(parse_external(
      R"({"group":"G","order":"512","prime":2,"blocks":[
           {"label":"B","defect":9,"degrees":[1]}]})"));
  REQUIRE(large.verdicts.size() == 1);
  CHECK(large.verdicts[0].question_a == "needs exact dl");
  CHECK(large.verdicts[0].dl_ht == "skipped");
  CHECK(large.violations == 0);
}

TEST_CASE("symmetric-group exports round-trip through the checker") {
  for (const auto& [n, p] : std::vector<std::pair<int, int>>{{5, 2}, {6, 3}, {7, 2}}) {
    CAPTURE(n);
    CAPTURE(p);
    std::vector<BlockReport> reports;
    for (const BlockLabel& label : blocks_of(n, p)) reports.push_back(block_report(label));

    const std::string text = export_reports(n, p, reports);
    const ExternalBlockData data = parse_external(text);
    CHECK(data.group == "S" + std::to_string(n));
    CHECK(data.order == factorial(n));
    CHECK(data.prime == p);
    REQUIRE(data.blocks.size() == reports.size());

    const ExternalReport checked = check_external(data);
    CHECK(checked.violations == 0);
    for (size_t i = 0; i < reports.size(); ++i) {
      CAPTURE(i);
      CHECK(data.blocks[i].label == reports[i].label.str());
      CHECK(data.blocks[i].defect == reports[i].defect);
      CHECK(data.blocks[i].defect_group_dl == reports[i].dl);
      CHECK_FALSE(data.blocks[i].defect_group_cd.has_value());
      const BlockVerdicts& v = checked.verdicts[i];
      CHECK(v.height_set == reports[i].heights);
      CHECK(v.cd == reports[i].cd);
      CHECK(v.question_a == "pass");
      CHECK(v.dl_ht == "pass");
      CHECK(v.taketa == "skipped");  // no defect_group_cd in the export
    }

    // Ingesting the same export twice is deterministic.
    const std::string again =
        render_external(check_external(parse_external(text)), "json");
    CHECK(again == render_external(checked, "json"));
  }
}

TEST_CASE("wreath-product character degrees complete the S4 verdicts") {
  // cd of the order-8 Sylow subgroup of S4, from first principles: the
  // number of linear characters is the index of the derived subgroup, and
  // the remaining characters (one per leftover conjugacy class) square-sum
  // to the rest of the order.
  const FiniteGroup<Perm> d8 = sylow_symmetric(4, 2);
  REQUIRE(d8.order() == 8);
  const std::size_t classes = oracles::conjugacy_class_count(d8);
  REQUIRE(classes == 5);
  const std::size_t linear = d8.order() / d8.derived_subgroup().order();
  REQUIRE(linear == 4);
  REQUIRE(classes - linear == 1);  // one nonlinear character
  REQUIRE(d8.order() - linear == 4);  // so its degree is 2
  const std::vector<int> cd_d8 = {1, 2};

  std::vector<BlockReport> reports;
  for (const BlockLabel& label : blocks_of(4, 2)) reports.push_back(block_report(label));
  REQUIRE(reports.size() == 1);

  Json doc = Json::parse(export_reports(4, 2, reports));
  doc["blocks"][0]["defect_group_cd"] = cd_d8;
  const ExternalReport report = check_external(parse_external(doc.dump()));
  REQUIRE(report.verdicts.size() == 1);
  const BlockVerdicts& v = report.verdicts[0];
  CHECK(v.question_a == "pass");
  CHECK(v.height_conjecture == "pass");
  CHECK(v.hc_a == 1);  // v_2(2)
  CHECK(v.hc_b == 1);  // the degree-2 character of S4 sits at height 1
  CHECK(v.taketa == "pass");  // |cd| 2 >= dl 2
  CHECK(report.violations == 0);
}
