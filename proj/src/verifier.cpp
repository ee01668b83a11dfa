#include "verifier.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <sstream>
#include <thread>

#include "alternating.hpp"
#include "constructions.hpp"
#include "errors.hpp"

namespace blockledger {

namespace {

using Json = nlohmann::ordered_json;

struct Task {
  BlockLabel label;
};

struct TaskOutcome {
  Json sym_row;
  std::optional<Json> alt_row;
  std::vector<std::string> violations;
  long long members = 0;
  bool family_checked = false;
};

Json degree_strings(const std::set<BigInt>& cd) {
  Json arr = Json::array();
  for (const BigInt& d : cd) arr.push_back(d.str());
  return arr;
}

TaskOutcome run_task(const BlockLabel& label, const SweepConfig& cfg) {
  TaskOutcome out;
  const int n = label.n();
  const bool cross = cfg.cross_check == SweepConfig::CrossCheck::kOn ||
                     (cfg.cross_check == SweepConfig::CrossCheck::kAuto && n <= 25);
  Json& row = out.sym_row;
  row["group"] = "sym";
  row["p"] = label.p;
  row["n"] = n;
  row["core"] = label.core.str();
  row["weight"] = label.weight;
  try {
    const BlockReport report = block_report(label, cross);
    out.members = static_cast<long long>(report.members.size());
    row["members"] = report.members.size();
    row["degrees"] = degree_strings(report.cd);
    row["heights"] = std::vector<int>(report.heights.begin(), report.heights.end());
    row["defect"] = report.defect;
    row["dl"] = report.dl;
    row["thmC"] = report.thm_c;
    row["questionA"] = report.question_a;
    if (!report.thm_c)
      out.violations.push_back("block " + label.str() + ": dl " + std::to_string(report.dl) +
                               " exceeds " + std::to_string(report.heights.size()) +
                               " distinct heights");
    if (!report.question_a)
      out.violations.push_back("block " + label.str() + ": dl " + std::to_string(report.dl) +
                               " exceeds " + std::to_string(report.cd.size()) +
                               " distinct degrees");
    if (report.heights.size() > report.cd.size())
      out.violations.push_back("block " + label.str() + ": more heights than degrees");

    if (label.weight >= 1) {
      const LadderCheck ladder = verify_height_ladder(label);
      out.family_checked = true;
      row["family_k"] = ladder.ladder.k;
      row["family_ok"] = ladder.ok;
      if (!ladder.ok)
        out.violations.push_back("block " + label.str() + ": height ladder failed: " +
                                 ladder.failure);
    } else {
      row["family_k"] = 0;
      row["family_ok"] = nullptr;
    }

    if (cfg.alternating && n >= 5 && !canonical_less(label.core.conjugate(), label.core)) {
      const AltCheck alt = verify_alt(label);
      Json arow;
      arow["group"] = "alt";
      arow["p"] = label.p;
      arow["n"] = n;
      arow["core"] = label.core.str();
      arow["weight"] = label.weight;
      Json degs = Json::array();
      for (const BigInt& d : alt.view.degrees) degs.push_back(d.str());
      arow["degrees"] = std::move(degs);
      arow["heights"] = std::vector<int>(alt.view.heights.begin(), alt.view.heights.end());
      arow["q_valuation"] = alt.view.q_valuation;
      arow["dl_q"] = alt.view.dl_q;
      arow["dlq_mode"] = mode_name(alt.view.dlq_mode);
      arow["k"] = alt.view.k;
      arow["ok"] = alt.ok;
      arow["paper_gap"] = alt.view.paper_gap;
      if (!alt.ok)
        out.violations.push_back("block " + label.str() + ": index-2 view has dl_q " +
                                 std::to_string(alt.view.dl_q) + " exceeding " +
                                 std::to_string(alt.view.heights.size()) +
                                 " constituent heights");
      out.alt_row = std::move(arow);
    }
  } catch (const std::exception& e) {
    row["error"] = e.what();
    out.violations.push_back("block " + label.str() + ": " + e.what());
  }
  return out;
}

}  // namespace

SweepReport run_sweep(const SweepConfig& config) {
  SweepReport report;
  report.config = config;
  auto& cfg = report.config;
  if (cfg.max_n < 1) throw std::invalid_argument("max_n must be at least 1");
  if (cfg.primes.empty()) throw std::invalid_argument("at least one prime required");
  std::sort(cfg.primes.begin(), cfg.primes.end());
  cfg.primes.erase(std::unique(cfg.primes.begin(), cfg.primes.end()), cfg.primes.end());
  for (int p : cfg.primes) require_prime(p);
  if (cfg.jobs < 1) throw std::invalid_argument("jobs must be at least 1");

  const auto start = std::chrono::steady_clock::now();

  std::vector<Task> tasks;
  for (int p : cfg.primes)
    for (int n = 1; n <= cfg.max_n; ++n)
      for (const BlockLabel& label : blocks_of(n, p)) tasks.push_back({label});

  std::vector<TaskOutcome> outcomes(tasks.size());
  const int workers = std::max(1, std::min<int>(cfg.jobs, static_cast<int>(tasks.size())));
  if (workers == 1) {
    for (size_t i = 0; i < tasks.size(); ++i) outcomes[i] = run_task(tasks[i].label, cfg);
  } else {
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int t = 0; t < workers; ++t)
      pool.emplace_back([&] {
        for (size_t i = next.fetch_add(1); i < tasks.size(); i = next.fetch_add(1))
          outcomes[i] = run_task(tasks[i].label, cfg);
      });
    for (std::thread& t : pool) t.join();
  }

  // Merge in task order so output does not depend on scheduling.
  long long n_members = 0;
  for (size_t i = 0; i < tasks.size(); ++i) {
    TaskOutcome& out = outcomes[i];
    ++report.blocks;
    report.members += out.members;
    n_members += out.members;
    if (out.family_checked) ++report.families;
    report.rows.push_back(std::move(out.sym_row));
    if (out.alt_row) {
      ++report.alt_views;
      report.rows.push_back(std::move(*out.alt_row));
    }
    for (std::string& v : out.violations) report.violations.push_back(std::move(v));
    // Member-count identity once the last block of an (p, n) batch is merged.
    const bool batch_end = i + 1 == tasks.size() ||
                           tasks[i + 1].label.p != tasks[i].label.p ||
                           tasks[i + 1].label.n() != tasks[i].label.n();
    if (batch_end) {
      const int n = tasks[i].label.n();
      const auto expected = partition_count(n);
      if (static_cast<unsigned long long>(n_members) != expected)
        report.violations.push_back(
            "p=" + std::to_string(tasks[i].label.p) + " n=" + std::to_string(n) + ": blocks hold " +
            std::to_string(n_members) + " members, expected " + std::to_string(expected));
      n_members = 0;
    }
  }

  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

namespace {

std::string join_ints(const Json& arr, const char* sep) {
  std::string s;
  for (const auto& v : arr) {
    if (!s.empty()) s += sep;
    s += v.is_string() ? v.get<std::string>() : v.dump();
  }
  return s;
}

std::string cell(const Json& row, const char* key) {
  if (!row.contains(key) || row[key].is_null()) return "";
  const Json& v = row[key];
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_array()) return join_ints(v, "|");
  return v.dump();
}

const char* kCsvColumns[] = {"group", "p",  "n",           "core",      "weight",
                             "members", "degrees", "heights", "defect", "dl",
                             "thmC", "questionA", "family_k", "family_ok", "q_valuation",
                             "dl_q", "dlq_mode", "k", "ok", "paper_gap", "error"};

std::string pad(std::string s, size_t width) {
  if (s.size() < width) s.resize(width, ' ');
  return s;
}

}  // namespace

std::string SweepReport::render(const std::string& format) const {
  if (format == "json") {
    Json doc;
    doc["sweep"]["max_n"] = config.max_n;
    doc["sweep"]["primes"] = config.primes;
    doc["sweep"]["alternating"] = config.alternating;
    doc["sweep"]["cross_check"] = config.cross_check == SweepConfig::CrossCheck::kAuto ? "auto"
                                  : config.cross_check == SweepConfig::CrossCheck::kOn ? "on"
                                                                                       : "off";
    doc["rows"] = rows;
    doc["totals"]["blocks"] = blocks;
    doc["totals"]["families"] = families;
    doc["totals"]["alt_views"] = alt_views;
    doc["totals"]["members"] = members;
    doc["totals"]["violations"] = violations.size();
    doc["violations"] = violations;
    return doc.dump(2) + "\n";
  }
  if (format == "csv") {
    std::string out;
    for (size_t i = 0; i < std::size(kCsvColumns); ++i) {
      if (i) out += ',';
      out += kCsvColumns[i];
    }
    out += '\n';
    for (const Json& row : rows) {
      for (size_t i = 0; i < std::size(kCsvColumns); ++i) {
        if (i) out += ',';
        std::string c = cell(row, kCsvColumns[i]);
        if (c.find_first_of(",\"\n") != std::string::npos) {
          std::string q = "\"";
          for (char ch : c) {
            if (ch == '"') q += '"';
            q += ch;
          }
          c = q + '"';
        }
        out += c;
      }
      out += '\n';
    }
    return out;
  }
  if (format == "table") {
    std::ostringstream out;
    out << "blocks\n";
    out << "  " << pad("p", 3) << pad("n", 4) << pad("core", 16) << pad("w", 4) << pad("|B|", 6)
        << pad("defect", 8) << pad("dl", 4) << pad("heights", 12) << pad("thmC", 6)
        << pad("QA", 6) << pad("family", 8) << "cd\n";
    for (const Json& row : rows) {
      if (row["group"] != "sym") continue;
      const std::string fam = !row.contains("family_ok") || row["family_ok"].is_null()
                                  ? "-"
                                  : (row["family_ok"].get<bool>() ? "ok" : "FAIL");
      out << "  " << pad(cell(row, "p"), 3) << pad(cell(row, "n"), 4)
          << pad(cell(row, "core"), 16) << pad(cell(row, "weight"), 4)
          << pad(cell(row, "members"), 6) << pad(cell(row, "defect"), 8)
          << pad(cell(row, "dl"), 4) << pad("{" + cell(row, "heights") + "}", 12)
          << pad(row.contains("thmC") ? (row["thmC"].get<bool>() ? "ok" : "FAIL") : "?", 6)
          << pad(row.contains("questionA") ? (row["questionA"].get<bool>() ? "ok" : "FAIL") : "?",
                 6)
          << pad(fam, 8) << "{" << cell(row, "degrees") << "}\n";
    }
    if (alt_views > 0) {
      out << "index-2 views\n";
      out << "  " << pad("p", 3) << pad("n", 4) << pad("core", 16) << pad("w", 4)
          << pad("heights", 12) << pad("vQ", 4) << pad("dlQ", 5) << pad("mode", 9) << pad("k", 3)
          << pad("ok", 4) << "paper-gap\n";
      for (const Json& row : rows) {
        if (row["group"] != "alt") continue;
        out << "  " << pad(cell(row, "p"), 3) << pad(cell(row, "n"), 4)
            << pad(cell(row, "core"), 16) << pad(cell(row, "weight"), 4)
            << pad("{" + cell(row, "heights") + "}", 12) << pad(cell(row, "q_valuation"), 4)
            << pad(cell(row, "dl_q"), 5) << pad(cell(row, "dlq_mode"), 9) << pad(cell(row, "k"), 3)
            << pad(row["ok"].get<bool>() ? "ok" : "FAIL", 4)
            << (row["paper_gap"].get<bool>() ? "yes" : "-") << "\n";
      }
    }
    if (violations.empty()) {
      out << "no violations\n";
    } else {
      out << "violations:\n";
      for (const std::string& v : violations) out << "  " << v << "\n";
    }
    out << "blocks " << blocks << ", families " << families << ", alt views " << alt_views
        << ", members " << members << "\n";
    std::ostringstream secs;
    secs.precision(2);
    secs << std::fixed << elapsed_seconds;
    out << "elapsed " << secs.str() << "s\n";
    return out.str();
  }
  throw std::invalid_argument("unknown format: " + format);
}

}  // namespace blockledger
