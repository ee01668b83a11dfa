#include "dataio.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "errors.hpp"

namespace blockledger {

namespace {

const char* kRootKeys[] = {"group", "order", "prime", "blocks"};
const char* kBlockKeys[] = {"label", "defect", "degrees", "defect_group_cd", "defect_group_dl"};

bool known_key(const std::string& k, const char* const* keys, size_t n) {
  for (size_t i = 0; i < n; ++i)
    if (k == keys[i]) return true;
  return false;
}

BigInt parse_big(const Json& v, const std::string& path) {
  if (v.is_number_unsigned()) return BigInt(v.get<unsigned long long>());
  if (v.is_number_integer()) {
    const long long x = v.get<long long>();
    if (x < 0) throw schema_error(path, "must be a positive integer");
    return BigInt(x);
  }
  if (v.is_string()) {
    const std::string s = v.get<std::string>();
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
      throw schema_error(path, "must be a decimal integer string");
    return BigInt(s);
  }
  throw schema_error(path, "must be an integer or a decimal string");
}

int parse_int(const Json& v, const std::string& path) {
  if (!v.is_number_integer())
    throw schema_error(path, "must be an integer");
  const long long x = v.get<long long>();
  if (x < 0 || x > 1000000) throw schema_error(path, "out of range");
  return static_cast<int>(x);
}

ExternalBlock parse_block(const Json& j, const std::string& path, int prime,
                          const BigInt& order) {
  if (!j.is_object()) throw schema_error(path, "must be an object");
  ExternalBlock b;
  if (!j.contains("label") || !j["label"].is_string())
    throw schema_error(path + ".label", "required string");
  b.label = j["label"].get<std::string>();
  if (!j.contains("defect")) throw schema_error(path + ".defect", "required integer");
  b.defect = parse_int(j["defect"], path + ".defect");
  const int order_val = valuation(order, prime);
  if (b.defect > order_val)
    throw schema_error(path + ".defect", "exceeds the valuation of the group order");

  if (!j.contains("degrees") || !j["degrees"].is_array() || j["degrees"].empty())
    throw schema_error(path + ".degrees", "required nonempty array");
  int idx = 0;
  for (const Json& d : j["degrees"]) {
    const std::string dpath = path + ".degrees[" + std::to_string(idx++) + "]";
    BigInt deg = parse_big(d, dpath);
    if (deg <= 0) throw schema_error(dpath, "must be a positive integer");
    if (valuation(deg, prime) < order_val - b.defect)
      throw schema_error(dpath, "degree valuation below the block minimum (negative height)");
    b.degrees.push_back(std::move(deg));
  }

  if (j.contains("defect_group_cd")) {
    if (!j["defect_group_cd"].is_array() || j["defect_group_cd"].empty())
      throw schema_error(path + ".defect_group_cd", "must be a nonempty array");
    std::vector<BigInt> cd;
    idx = 0;
    for (const Json& d : j["defect_group_cd"]) {
      const std::string dpath = path + ".defect_group_cd[" + std::to_string(idx++) + "]";
      BigInt deg = parse_big(d, dpath);
      if (deg <= 0) throw schema_error(dpath, "must be a positive integer");
      // Degrees of a p-group are powers of p.
      BigInt rest = deg;
      while (rest % prime == 0) rest /= prime;
      if (rest != 1) throw schema_error(dpath, "must be a power of the prime");
      cd.push_back(std::move(deg));
    }
    b.defect_group_cd = std::move(cd);
  }
  if (j.contains("defect_group_dl"))
    b.defect_group_dl = parse_int(j["defect_group_dl"], path + ".defect_group_dl");

  for (const auto& [key, value] : j.items())
    if (!known_key(key, kBlockKeys, std::size(kBlockKeys))) b.extra[key] = value;
  return b;
}

}  // namespace

ExternalBlockData parse_external(const std::string& json_text) {
  Json j = Json::parse(json_text, nullptr, false);
  if (j.is_discarded()) throw schema_error("(document)", "not valid JSON");
  if (!j.is_object()) throw schema_error("(document)", "must be an object");

  ExternalBlockData data;
  if (!j.contains("group") || !j["group"].is_string())
    throw schema_error("group", "required string");
  data.group = j["group"].get<std::string>();
  if (!j.contains("order")) throw schema_error("order", "required integer string");
  data.order = parse_big(j["order"], "order");
  if (data.order <= 0) throw schema_error("order", "must be positive");
  if (!j.contains("prime")) throw schema_error("prime", "required integer");
  data.prime = parse_int(j["prime"], "prime");
  if (!is_prime(data.prime)) throw schema_error("prime", "must be prime");
  if (!j.contains("blocks") || !j["blocks"].is_array())
    throw schema_error("blocks", "required array");
  int idx = 0;
  for (const Json& jb : j["blocks"])
    data.blocks.push_back(
        parse_block(jb, "blocks[" + std::to_string(idx++) + "]", data.prime, data.order));
  for (const auto& [key, value] : j.items())
    if (!known_key(key, kRootKeys, std::size(kRootKeys))) data.extra[key] = value;
  return data;
}

ExternalBlockData load_external_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw io_error("cannot read file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_external(buf.str());
}

ExternalReport check_external(const ExternalBlockData& data) {
  ExternalReport report;
  report.data = data;
  const int order_val = valuation(data.order, data.prime);
  for (const ExternalBlock& b : data.blocks) {
    BlockVerdicts v;
    v.label = b.label;
    for (const BigInt& d : b.degrees) {
      const int h = valuation(d, data.prime) - (order_val - b.defect);
      v.heights.push_back(h);
      v.height_set.insert(h);
      v.cd.insert(d);
    }

    if (b.defect_group_dl) {
      v.question_a = *b.defect_group_dl <= static_cast<int>(v.cd.size()) ? "pass" : "fail";
      v.dl_ht = *b.defect_group_dl <= static_cast<int>(v.height_set.size()) ? "pass" : "fail";
    } else {
      // No exact derived length: groups of order p^defect satisfy
      // dl <= (defect+1)/2, so the bound may already settle the question.
      v.question_a = (b.defect + 1) / 2 <= static_cast<int>(v.cd.size()) ? "bound-passed"
                                                                         : "needs exact dl";
      v.dl_ht = "skipped";
    }

    if (b.defect_group_cd) {
      BigInt max_cd = 1;
      for (const BigInt& d : *b.defect_group_cd) max_cd = std::max(max_cd, d);
      v.hc_a = valuation(max_cd, data.prime);
      v.hc_b = v.height_set.empty() ? 0 : *v.height_set.rbegin();
      v.height_conjecture = v.hc_a <= v.hc_b ? "pass" : "counterexample";
      if (b.defect_group_dl) {
        std::set<BigInt> cd_set(b.defect_group_cd->begin(), b.defect_group_cd->end());
        v.taketa = static_cast<int>(cd_set.size()) >= *b.defect_group_dl ? "pass" : "fail";
      } else {
        v.taketa = "skipped";
      }
    } else {
      v.height_conjecture = "skipped";
      v.taketa = "skipped";
    }

    if (v.question_a == "fail") ++report.violations;
    if (v.height_conjecture == "counterexample") ++report.violations;
    if (v.dl_ht == "fail") ++report.violations;
    if (v.taketa == "fail") ++report.violations;
    report.verdicts.push_back(std::move(v));
  }
  return report;
}

namespace {

Json degrees_json(const std::vector<BigInt>& degrees) {
  Json arr = Json::array();
  for (const BigInt& d : degrees) {
    if (d <= BigInt((std::uint64_t{1} << 53)))
      arr.push_back(d.convert_to<std::uint64_t>());
    else
      arr.push_back(d.str());
  }
  return arr;
}

Json report_json(const ExternalReport& r) {
  Json out;
  out["group"] = r.data.group;
  out["order"] = r.data.order.str();
  out["prime"] = r.data.prime;
  out["blocks"] = Json::array();
  for (size_t i = 0; i < r.verdicts.size(); ++i) {
    const ExternalBlock& b = r.data.blocks[i];
    const BlockVerdicts& v = r.verdicts[i];
    Json jb;
    jb["label"] = v.label;
    jb["defect"] = b.defect;
    jb["degrees"] = degrees_json(b.degrees);
    jb["heights"] = v.heights;
    jb["question_a"] = v.question_a;
    Json hc;
    hc["verdict"] = v.height_conjecture;
    if (v.height_conjecture != "skipped") {
      hc["a"] = v.hc_a;
      hc["b"] = v.hc_b;
    }
    jb["height_conjecture"] = hc;
    jb["dl_ht"] = v.dl_ht;
    jb["taketa"] = v.taketa;
    if (!b.extra.empty()) jb["extra"] = b.extra;
    out["blocks"].push_back(std::move(jb));
  }
  if (!r.data.extra.empty()) out["extra"] = r.data.extra;
  out["violations"] = r.violations;
  return out;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string render_external(const ExternalReport& r, const std::string& format) {
  if (format == "json") return report_json(r).dump(2) + "\n";
  if (format == "csv") {
    std::string out = "label,defect,heights,question_a,height_conjecture,a,b,dl_ht,taketa\n";
    for (size_t i = 0; i < r.verdicts.size(); ++i) {
      const BlockVerdicts& v = r.verdicts[i];
      std::string hs;
      for (int h : v.height_set) hs += (hs.empty() ? "" : "|") + std::to_string(h);
      out += csv_escape(v.label) + ',' + std::to_string(r.data.blocks[i].defect) + ',' + hs +
             ',' + v.question_a + ',' + v.height_conjecture + ',' +
             (v.hc_a >= 0 ? std::to_string(v.hc_a) : "") + ',' +
             (v.hc_b >= 0 ? std::to_string(v.hc_b) : "") + ',' + v.dl_ht + ',' + v.taketa + '\n';
    }
    return out;
  }
  if (format == "table") {
    std::ostringstream out;
    out << "group " << r.data.group << "  order " << r.data.order.str() << "  p "
        << r.data.prime << "\n";
    for (size_t i = 0; i < r.verdicts.size(); ++i) {
      const BlockVerdicts& v = r.verdicts[i];
      out << "  block " << v.label << " (defect " << r.data.blocks[i].defect << ")\n";
      out << "    heights {";
      bool first = true;
      for (int h : v.height_set) {
        if (!first) out << ", ";
        out << h;
        first = false;
      }
      out << "}\n";
      out << "    question A: " << v.question_a << "\n";
      out << "    height conjecture: " << v.height_conjecture;
      if (v.height_conjecture != "skipped") out << " (a=" << v.hc_a << ", b=" << v.hc_b << ")";
      out << "\n";
      out << "    dl <= #heights: " << v.dl_ht << "\n";
      out << "    Taketa bound: " << v.taketa << "\n";
    }
    out << (r.violations ? "violations: " + std::to_string(r.violations) : "no violations")
        << "\n";
    return out.str();
  }
  throw std::invalid_argument("unknown format: " + format);
}

std::string export_reports(int n, int p, const std::vector<BlockReport>& reports) {
  Json out;
  out["group"] = "S" + std::to_string(n);
  out["order"] = factorial(n).str();
  out["prime"] = p;
  out["blocks"] = Json::array();
  for (const BlockReport& r : reports) {
    Json jb;
    jb["label"] = r.label.str();
    jb["defect"] = r.defect;
    jb["degrees"] = degrees_json(r.degrees);
    jb["defect_group_dl"] = r.dl;
    out["blocks"].push_back(std::move(jb));
  }
  return out.dump(2) + "\n";
}

}  // namespace blockledger
