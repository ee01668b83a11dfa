// Command-line front end. Links only the public C interface; json.hpp and
// CLI11 are used for presentation.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "blockledger.h"

namespace {

using Json = nlohmann::ordered_json;

// Owns a string allocated by the library.
struct CStr {
  char* s = nullptr;
  ~CStr() { blc_free(s); }
  std::string str() const { return s ? s : ""; }
};

struct Global {
  std::string format = "table";
  std::string out_path;
  int jobs = 1;
};

// 0 on success, 1 when the library call failed (message to stderr).
int check(blc_status st) {
  if (st == BLC_OK) return 0;
  std::cerr << "error: " << blc_last_error() << "\n";
  return 1;
}

int emit(const Global& g, const std::string& text) {
  if (g.out_path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream f(g.out_path, std::ios::binary);
  if (!f) {
    std::cerr << "error: cannot write " << g.out_path << "\n";
    return 1;
  }
  f << text;
  return f.good() ? 0 : 1;
}

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

std::string join(const Json& arr, const char* sep) {
  std::string s;
  for (const auto& v : arr) {
    if (!s.empty()) s += sep;
    s += v.is_string() ? v.get<std::string>() : v.dump();
  }
  return s;
}

// Distinct degrees of a decimal-string list, numerically sorted.
std::vector<std::string> degree_set(const Json& degrees) {
  std::vector<std::string> cd;
  for (const auto& d : degrees) cd.push_back(d.get<std::string>());
  std::sort(cd.begin(), cd.end(), [](const std::string& a, const std::string& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  cd.erase(std::unique(cd.begin(), cd.end()), cd.end());
  return cd;
}

int partition_op(const Global& g, const std::string& op, const std::string& lambda, int p) {
  CStr s;
  blc_status st = BLC_OK;
  if (op == "core")
    st = blc_core(lambda.c_str(), p, &s.s);
  else if (op == "quotient")
    st = blc_quotient(lambda.c_str(), p, &s.s);
  else if (op == "tower")
    st = blc_tower(lambda.c_str(), p, &s.s);
  else
    st = blc_degree(lambda.c_str(), &s.s);
  if (int rc = check(st)) return rc;

  if (g.format == "table") return emit(g, s.str() + "\n");
  if (g.format == "json") {
    Json j;
    if (op != "degree") j["p"] = p;
    j["lambda"] = lambda;
    if (op == "core")
      j["core"] = s.str();
    else if (op == "degree")
      j["degree"] = s.str();
    else
      j[op] = Json::parse(s.str());
    return emit(g, j.dump(2) + "\n");
  }
  // csv
  std::string head = "lambda", row = csv_cell(lambda);
  if (op != "degree") {
    head = "p," + head;
    row = std::to_string(p) + "," + row;
  }
  std::string value = s.str();
  if (op == "quotient") value = join(Json::parse(value), "|");
  return emit(g, head + "," + op + "\n" + row + "," + csv_cell(value) + "\n");
}

int block_list(const Global& g, int n, int p) {
  CStr s;
  if (int rc = check(blc_block_list(n, p, &s.s))) return rc;
  if (g.format == "json") return emit(g, s.str());
  const Json rows = Json::parse(s.str());
  std::string out;
  if (g.format == "csv") {
    out = "core,weight,defect,members\n";
    for (const Json& r : rows)
      out += csv_cell(r["core"].get<std::string>()) + "," + r["weight"].dump() + "," +
             r["defect"].dump() + "," + r["members"].dump() + "\n";
  } else {
    out = "core            w   defect  members\n";
    for (const Json& r : rows) {
      std::string core = r["core"].get<std::string>();
      core.resize(std::max<size_t>(core.size(), 16), ' ');
      std::string w = r["weight"].dump();
      w.resize(std::max<size_t>(w.size(), 4), ' ');
      std::string d = r["defect"].dump();
      d.resize(std::max<size_t>(d.size(), 8), ' ');
      out += core + w + d + r["members"].dump() + "\n";
    }
  }
  return emit(g, out);
}

int block_report(const Global& g, int p, const std::string& core, int w,
                 const std::string& cross) {
  CStr s;
  if (int rc = check(blc_block_report(p, core.c_str(), w, cross != "off" ? 1 : 0, &s.s)))
    return rc;
  if (g.format == "json") return emit(g, s.str());
  const Json r = Json::parse(s.str());
  if (g.format == "csv") {
    std::string out = "member,degree\n";
    for (size_t i = 0; i < r["members"].size(); ++i)
      out += csv_cell(r["members"][i].get<std::string>()) + "," +
             r["degrees"][i].get<std::string>() + "\n";
    return emit(g, out);
  }
  std::string out = "block p=" + r["p"].dump() + " core=" + r["core"].get<std::string>() +
                    " w=" + r["weight"].dump() + " (n=" + r["n"].dump() + ")\n";
  out += "  defect " + r["defect"].dump() + "  dl " + r["dl"].dump() + "  thmC " +
         (r["thmC"].get<bool>() ? "ok" : "FAIL") + "  questionA " +
         (r["questionA"].get<bool>() ? "ok" : "FAIL") + "\n";
  out += "  heights {" + join(r["heights"], ",") + "}\n";
  std::string cd;
  for (const std::string& d : degree_set(r["degrees"])) {
    if (!cd.empty()) cd += ",";
    cd += d;
  }
  out += "  cd {" + cd + "}\n  members:\n";
  for (size_t i = 0; i < r["members"].size(); ++i) {
    std::string m = r["members"][i].get<std::string>();
    m.resize(std::max<size_t>(m.size(), 20), ' ');
    out += "    " + m + " deg " + r["degrees"][i].get<std::string>() + "\n";
  }
  return emit(g, out);
}

int construct(const Global& g, int p, const std::string& core, int w) {
  CStr s;
  if (int rc = check(blc_height_ladder(p, core.c_str(), w, &s.s))) return rc;
  if (g.format == "json") return emit(g, s.str());
  const Json rows = Json::parse(s.str());
  std::string out;
  if (g.format == "csv") {
    out = "partition,degree,height,self_conjugate\n";
    for (const Json& r : rows)
      out += csv_cell(r["partition"].get<std::string>()) + "," +
             r["degree"].get<std::string>() + "," + r["height"].dump() + "," +
             (r["self_conjugate"].get<bool>() ? "true" : "false") + "\n";
  } else {
    out = "partition            height  self-conj  degree\n";
    for (const Json& r : rows) {
      std::string m = r["partition"].get<std::string>();
      m.resize(std::max<size_t>(m.size(), 21), ' ');
      std::string h = r["height"].dump();
      h.resize(std::max<size_t>(h.size(), 8), ' ');
      out += m + h + (r["self_conjugate"].get<bool>() ? "yes      " : "no       ") + " " +
             r["degree"].get<std::string>() + "\n";
    }
  }
  return emit(g, out);
}

int group_op(const Global& g, const std::string& op, int size, int p) {
  CStr s;
  const blc_status st = op == "sylow" ? blc_sylow_symmetric(size, p, &s.s)
                                      : blc_unitriangular(size, p, &s.s);
  if (int rc = check(st)) return rc;
  if (g.format == "json") return emit(g, s.str());
  const Json r = Json::parse(s.str());
  if (g.format == "csv")
    return emit(g, "order,derived_series,dl,lower_central_series,class\n" + r["order"].dump() +
                       "," + join(r["derived_series"], "|") + "," + r["dl"].dump() + "," +
                       join(r["lower_central_series"], "|") + "," + r["class"].dump() + "\n");
  return emit(g, "order " + r["order"].dump() + "\nderived series " +
                     join(r["derived_series"], ",") + "\ndl " + r["dl"].dump() +
                     "\nlower central series " + join(r["lower_central_series"], ",") +
                     "\nclass " + r["class"].dump() + "\n");
}

int verify_sym(const Global& g, int max_n, const std::vector<int>& primes, bool alt,
               const std::string& cross) {
  blc_sweep* sweep = nullptr;
  if (int rc = check(blc_sweep_run(max_n, primes.data(), static_cast<int>(primes.size()),
                                   alt ? 1 : 0, cross.c_str(), g.jobs, &sweep)))
    return rc;
  CStr s;
  const blc_status st = blc_sweep_render(sweep, g.format.c_str(), &s.s);
  const int violations = blc_sweep_violations(sweep);
  blc_sweep_free(sweep);
  if (int rc = check(st)) return rc;
  if (int rc = emit(g, s.str())) return rc;
  return violations > 0 ? 1 : 0;
}

int verify_external(const Global& g, const std::string& file) {
  blc_external* ext = nullptr;
  if (int rc = check(blc_external_open(file.c_str(), &ext))) return rc;
  CStr s;
  const blc_status st = blc_external_render(ext, g.format.c_str(), &s.s);
  const int violations = blc_external_violations(ext);
  blc_external_free(ext);
  if (int rc = check(st)) return rc;
  if (int rc = emit(g, s.str())) return rc;
  return violations > 0 ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Partition, block, and finite-group calculator with verification sweeps"};
  app.require_subcommand(1);
  app.fallthrough();

  Global g;
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"table", "json", "csv"}))
      ->capture_default_str();
  app.add_option("--out", g.out_path, "Write output to a file instead of stdout");
  app.add_option("--jobs", g.jobs, "Worker count for sweeps")
      ->envname("BLOCKLEDGER_JOBS")
      ->check(CLI::PositiveNumber);

  int rc = 0;

  // partition core|quotient|tower|degree
  auto* part = app.add_subcommand("partition", "Partition arithmetic");
  part->require_subcommand(1);
  part->fallthrough();
  struct {
    std::string lambda;
    int p = 2;
  } part_args;
  for (const std::string op : {"core", "quotient", "tower", "degree"}) {
    auto* sub = part->add_subcommand(op, op == "degree" ? "Character degree of a label"
                                                        : "Per-prime " + op + " of a partition");
    sub->fallthrough();
    sub->add_option("--lambda", part_args.lambda, "Partition, e.g. \"3,1,1\"")->required();
    if (op != "degree") sub->add_option("--p", part_args.p, "Prime")->required();
    sub->callback([&g, &part_args, op, &rc] {
      rc = partition_op(g, op, part_args.lambda, part_args.p);
    });
  }

  // block list|report
  auto* block = app.add_subcommand("block", "Block enumeration and reports");
  block->require_subcommand(1);
  block->fallthrough();
  struct {
    int n = 1, p = 2, w = 0;
    std::string core;
    std::string cross = "on";
  } block_args;
  auto* blist = block->add_subcommand("list", "All blocks of the symmetric group on n letters");
  blist->fallthrough();
  blist->add_option("--n", block_args.n, "Number of letters")->required();
  blist->add_option("--p", block_args.p, "Prime")->required();
  blist->callback([&g, &block_args, &rc] { rc = block_list(g, block_args.n, block_args.p); });
  auto* brep = block->add_subcommand("report", "Degrees, heights, defect, and checks for one block");
  brep->fallthrough();
  brep->add_option("--p", block_args.p, "Prime")->required();
  brep->add_option("--core", block_args.core, "p-core partition")->required();
  brep->add_option("--w", block_args.w, "Weight")->required();
  brep->add_option("--cross-check", block_args.cross, "Recompute heights a second way")
      ->check(CLI::IsMember({"on", "off"}))
      ->capture_default_str();
  brep->callback([&g, &block_args, &rc] {
    rc = block_report(g, block_args.p, block_args.core, block_args.w, block_args.cross);
  });

  // construct
  auto* cons = app.add_subcommand("construct", "Ladder of block members with heights 0..k-1");
  cons->fallthrough();
  cons->add_option("--p", block_args.p, "Prime")->required();
  cons->add_option("--core", block_args.core, "p-core partition")->required();
  cons->add_option("--w", block_args.w, "Weight (>= 1)")->required();
  cons->callback([&g, &block_args, &rc] {
    rc = construct(g, block_args.p, block_args.core, block_args.w);
  });

  // verify sym|external
  auto* verify = app.add_subcommand("verify", "Run checks and report violations");
  verify->require_subcommand(1);
  verify->fallthrough();
  struct {
    int max_n = 10;
    std::vector<int> primes{2, 3};
    bool alt = false;
    std::string cross = "auto";
    std::string file;
  } verify_args;
  auto* vsym = verify->add_subcommand("sym", "Sweep all symmetric-group blocks");
  vsym->fallthrough();
  vsym->add_option("--max-n", verify_args.max_n, "Largest n to sweep")->capture_default_str();
  vsym->add_option("--primes", verify_args.primes, "Primes, e.g. 2,3,5")
      ->delimiter(',')
      ->capture_default_str();
  vsym->add_flag("--alt", verify_args.alt, "Also check index-2 subgroup views (n >= 5)");
  vsym->add_option("--cross-check", verify_args.cross, "Height cross-check mode")
      ->check(CLI::IsMember({"auto", "on", "off"}))
      ->capture_default_str();
  vsym->callback([&g, &verify_args, &rc] {
    rc = verify_sym(g, verify_args.max_n, verify_args.primes, verify_args.alt,
                    verify_args.cross);
  });
  auto* vext = verify->add_subcommand("external", "Check a JSON file of block data");
  vext->fallthrough();
  vext->add_option("--file", verify_args.file, "Path to the JSON file")->required();
  vext->callback([&g, &verify_args, &rc] { rc = verify_external(g, verify_args.file); });

  // sylow / unitriangular
  struct {
    int size = 1, p = 2;
  } group_args;
  auto* syl = app.add_subcommand("sylow", "Sylow p-subgroup of the symmetric group on m letters");
  syl->fallthrough();
  syl->add_option("--m", group_args.size, "Number of letters")->required();
  syl->add_option("--p", group_args.p, "Prime")->required();
  syl->callback([&g, &group_args, &rc] { rc = group_op(g, "sylow", group_args.size, group_args.p); });
  auto* uni = app.add_subcommand("unitriangular", "Upper unitriangular n x n matrices over F_p");
  uni->fallthrough();
  uni->add_option("--n", group_args.size, "Matrix dimension")->required();
  uni->add_option("--p", group_args.p, "Prime")->required();
  uni->callback([&g, &group_args, &rc] {
    rc = group_op(g, "unitriangular", group_args.size, group_args.p);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  return rc;
}
