#include "blockledger.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include <json.hpp>

#include "abacus.hpp"
#include "alternating.hpp"
#include "blocks.hpp"
#include "constructions.hpp"
#include "dataio.hpp"
#include "errors.hpp"
#include "groupcalc.hpp"
#include "partition.hpp"
#include "verifier.hpp"

using Json = nlohmann::ordered_json;
using namespace blockledger;

namespace {

thread_local std::string g_last_error;

// Runs fn, translating exceptions to statuses and recording the message.
template <class Fn>
blc_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return BLC_OK;
  } catch (const budget_error& e) {
    g_last_error = e.what();
    return BLC_EBUDGET;
  } catch (const schema_error& e) {
    g_last_error = e.what();
    return BLC_ESCHEMA;
  } catch (const io_error& e) {
    g_last_error = e.what();
    return BLC_EIO;
  } catch (const internal_error& e) {
    g_last_error = e.what();
    return BLC_EINTERNAL;
  } catch (const std::invalid_argument& e) {
    g_last_error = e.what();
    return BLC_EINVAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return BLC_EINTERNAL;
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void set_out(char** out, const std::string& s) {
  if (!out) throw std::invalid_argument("out pointer is null");
  *out = dup_string(s);
}

Partition parse_partition(const char* text) {
  if (!text) throw std::invalid_argument("partition text is null");
  return Partition::parse(text);
}

BlockLabel parse_label(int prime, const char* core, int weight) {
  return make_block_label(prime, parse_partition(core), weight);
}

Json report_json(const BlockReport& r) {
  Json j;
  j["p"] = r.label.p;
  j["core"] = r.label.core.str();
  j["weight"] = r.label.weight;
  j["n"] = r.label.n();
  Json degs = Json::array();
  for (const BigInt& d : r.degrees) degs.push_back(d.str());
  j["degrees"] = std::move(degs);
  j["heights"] = std::vector<int>(r.heights.begin(), r.heights.end());
  j["defect"] = r.defect;
  j["dl"] = r.dl;
  j["thmC"] = r.thm_c;
  j["questionA"] = r.question_a;
  Json mem = Json::array();
  for (const Partition& la : r.members) mem.push_back(la.str());
  j["members"] = std::move(mem);
  return j;
}

template <class E>
Json group_json(const FiniteGroup<E>& g) {
  Json j;
  j["order"] = g.order();
  j["derived_series"] = g.derived_series();
  j["dl"] = g.derived_length();
  j["lower_central_series"] = g.lower_central_series();
  j["class"] = g.nilpotency_class();
  return j;
}

}  // namespace

struct blc_sweep {
  SweepReport report;
};

struct blc_external {
  ExternalReport report;
};

extern "C" {

const char* blc_last_error(void) { return g_last_error.c_str(); }

void blc_free(char* s) { std::free(s); }

blc_status blc_conjugate(const char* partition, char** out) {
  return guarded([&] { set_out(out, parse_partition(partition).conjugate().str()); });
}

blc_status blc_degree(const char* partition, char** out) {
  return guarded([&] { set_out(out, degree(parse_partition(partition)).str()); });
}

blc_status blc_degree_valuation(const char* partition, int prime, int* out) {
  return guarded([&] {
    if (!out) throw std::invalid_argument("out pointer is null");
    *out = degree_valuation(parse_partition(partition), prime);
  });
}

blc_status blc_core(const char* partition, int prime, char** out) {
  return guarded([&] { set_out(out, p_core(parse_partition(partition), prime).str()); });
}

blc_status blc_quotient(const char* partition, int prime, char** out) {
  return guarded([&] {
    Json arr = Json::array();
    for (const Partition& q : p_quotient(parse_partition(partition), prime))
      arr.push_back(q.str());
    set_out(out, arr.dump());
  });
}

blc_status blc_tower(const char* partition, int prime, char** out) {
  return guarded([&] {
    set_out(out, core_tower(parse_partition(partition), prime).str());
  });
}

blc_status blc_weight(const char* partition, int prime, int* out) {
  return guarded([&] {
    if (!out) throw std::invalid_argument("out pointer is null");
    *out = weight(parse_partition(partition), prime);
  });
}

blc_status blc_block_report(int prime, const char* core, int weight, int cross_check,
                            char** out_json) {
  return guarded([&] {
    const BlockReport r = block_report(parse_label(prime, core, weight), cross_check != 0);
    set_out(out_json, report_json(r).dump(2) + "\n");
  });
}

blc_status blc_block_list(int n, int prime, char** out_json) {
  return guarded([&] {
    Json arr = Json::array();
    for (const BlockLabel& b : blocks_of(n, prime)) {
      Json row;
      row["core"] = b.core.str();
      row["weight"] = b.weight;
      row["defect"] = defect(b);
      row["members"] = enumerate_block(b).size();
      arr.push_back(std::move(row));
    }
    set_out(out_json, arr.dump(2) + "\n");
  });
}

blc_status blc_height_ladder(int prime, const char* core, int weight, char** out_json) {
  return guarded([&] {
    const HeightLadder ladder = build_height_ladder(parse_label(prime, core, weight));
    Json arr = Json::array();
    for (size_t j = 0; j < ladder.members.size(); ++j) {
      Json row;
      row["partition"] = ladder.members[j].str();
      row["degree"] = degree(ladder.members[j]).str();
      row["height"] = ladder.heights[j];
      row["self_conjugate"] = static_cast<bool>(ladder.self_conjugate[j]);
      arr.push_back(std::move(row));
    }
    set_out(out_json, arr.dump(2) + "\n");
  });
}

blc_status blc_alt_view(int prime, const char* core, int weight, char** out_json) {
  return guarded([&] {
    const AltCheck check = verify_alt(parse_label(prime, core, weight));
    const AltBlockView& v = check.view;
    Json j;
    j["p"] = v.source.p;
    j["core"] = v.source.core.str();
    j["weight"] = v.source.weight;
    j["paired_core"] = v.paired_core.str();
    Json degs = Json::array();
    for (const BigInt& d : v.degrees) degs.push_back(d.str());
    j["degrees"] = std::move(degs);
    j["heights"] = std::vector<int>(v.heights.begin(), v.heights.end());
    j["q_valuation"] = v.q_valuation;
    j["dl_q"] = v.dl_q;
    j["dlq_mode"] = mode_name(v.dlq_mode);
    j["k"] = v.k;
    j["ok"] = check.ok;
    j["paper_gap"] = v.paper_gap;
    set_out(out_json, j.dump(2) + "\n");
  });
}

blc_status blc_export_blocks(int n, int prime, char** out_json) {
  return guarded([&] {
    std::vector<BlockReport> reports;
    for (const BlockLabel& b : blocks_of(n, prime)) reports.push_back(block_report(b));
    set_out(out_json, export_reports(n, prime, reports));
  });
}

blc_status blc_sylow_symmetric(int m, int prime, char** out_json) {
  return guarded([&] {
    set_out(out_json, group_json(sylow_symmetric(m, prime)).dump(2) + "\n");
  });
}

blc_status blc_unitriangular(int n, int prime, char** out_json) {
  return guarded([&] {
    set_out(out_json, group_json(unitriangular(n, prime)).dump(2) + "\n");
  });
}

blc_status blc_sweep_run(int max_n, const int* primes, int n_primes,
                         int include_alternating, const char* cross_check, int jobs,
                         blc_sweep** out) {
  return guarded([&] {
    if (!out) throw std::invalid_argument("out pointer is null");
    if (n_primes < 1 || !primes) throw std::invalid_argument("at least one prime required");
    SweepConfig cfg;
    cfg.max_n = max_n;
    cfg.primes.assign(primes, primes + n_primes);
    cfg.alternating = include_alternating != 0;
    const std::string mode = cross_check ? cross_check : "auto";
    if (mode == "auto")
      cfg.cross_check = SweepConfig::CrossCheck::kAuto;
    else if (mode == "on")
      cfg.cross_check = SweepConfig::CrossCheck::kOn;
    else if (mode == "off")
      cfg.cross_check = SweepConfig::CrossCheck::kOff;
    else
      throw std::invalid_argument("cross_check must be auto, on, or off");
    cfg.jobs = jobs;
    *out = new blc_sweep{run_sweep(cfg)};
  });
}

int blc_sweep_violations(const blc_sweep* s) {
  return s ? s->report.violation_count() : -1;
}

blc_status blc_sweep_render(const blc_sweep* s, const char* format, char** out) {
  return guarded([&] {
    if (!s) throw std::invalid_argument("sweep handle is null");
    set_out(out, s->report.render(format ? format : "table"));
  });
}

void blc_sweep_free(blc_sweep* s) { delete s; }

blc_status blc_external_open(const char* path, blc_external** out) {
  return guarded([&] {
    if (!out) throw std::invalid_argument("out pointer is null");
    if (!path) throw std::invalid_argument("path is null");
    *out = new blc_external{check_external(load_external_file(path))};
  });
}

blc_status blc_external_parse(const char* json_text, blc_external** out) {
  return guarded([&] {
    if (!out) throw std::invalid_argument("out pointer is null");
    if (!json_text) throw std::invalid_argument("json text is null");
    *out = new blc_external{check_external(parse_external(json_text))};
  });
}

int blc_external_violations(const blc_external* e) {
  return e ? e->report.violations : -1;
}

blc_status blc_external_render(const blc_external* e, const char* format, char** out) {
  return guarded([&] {
    if (!e) throw std::invalid_argument("external handle is null");
    set_out(out, render_external(e->report, format ? format : "table"));
  });
}

void blc_external_free(blc_external* e) { delete e; }

}  // extern "C"
