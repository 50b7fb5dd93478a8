#pragma once

// JSON report assembly.  The report is deterministic byte-for-byte for a
// fixed configuration and tool version: keys are emitted in a fixed order,
// witnesses are canonical, and the only timing field (elapsed_ms) is the last
// top-level key so that report_body() can exclude it from comparisons.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "strongreal/checks.hpp"
#include "strongreal/classifier.hpp"
#include "strongreal/reality.hpp"
#include "strongreal/version.hpp"

namespace strongreal {

using ordered_json = nlohmann::ordered_json;

struct ReportConfig {
  std::uint64_t cap = kDefaultClosureCap;
  bool extended = false;
};

inline std::string outcome_text(Outcome o) {
  switch (o) {
    case Outcome::StronglyReal: return "StronglyReal";
    case Outcome::NotStronglyReal: return "NotStronglyReal";
    case Outcome::NotSimple: return "NotSimple";
    case Outcome::UnknownName: return "UnknownName";
  }
  return "?";
}

inline ordered_json check_to_json(const CheckReport& c) {
  ordered_json j;
  j["name"] = c.name;
  j["q"] = c.q;
  j["group"] = c.group;
  j["cases"] = c.cases;
  j["skipped"] = c.skipped;
  ordered_json failures = ordered_json::array();
  for (const CheckFailure& f : c.failures) {
    ordered_json jf;
    jf["input"] = f.input;
    jf["expected"] = f.expected;
    jf["got"] = f.got;
    failures.push_back(std::move(jf));
  }
  j["failures"] = std::move(failures);
  j["passed"] = c.passed;
  return j;
}

inline ordered_json report_to_json(const RealityReport& rr, const ReportConfig& cfg,
                                   const std::string& name, const std::string& spec,
                                   const std::optional<Verdict>& verdict, bool consistent,
                                   const std::vector<CheckReport>& checks) {
  ordered_json j;
  j["tool_version"] = kToolVersion;
  {
    ordered_json c;
    c["cap"] = cfg.cap;
    c["extended"] = cfg.extended;
    j["config"] = std::move(c);
  }
  {
    ordered_json g;
    g["name"] = name;
    g["spec"] = spec;
    g["order"] = rr.group_order;
    g["num_classes"] = rr.classes.size();
    j["group"] = std::move(g);
  }
  ordered_json classes = ordered_json::array();
  for (const ClassRecord& r : rr.classes) {
    ordered_json c;
    c["rep_order"] = r.rep_order;
    c["class_size"] = r.class_size;
    c["real"] = r.real;
    c["strongly_real"] = r.strongly_real;
    if (r.witness) {
      c["witness_order"] = r.witness->t.order();
      c["witness"] = r.witness->t.to_text();
    } else {
      c["witness_order"] = nullptr;
      c["witness"] = nullptr;
    }
    classes.push_back(std::move(c));
  }
  j["classes"] = std::move(classes);
  j["strongly_real"] = rr.strongly_real;
  if (verdict) {
    ordered_json v;
    v["verdict"] = outcome_text(verdict->outcome);
    if (verdict->item)
      v["item"] = verdict->item;
    else
      v["item"] = nullptr;
    v["justification"] = verdict->justification;
    j["classifier"] = std::move(v);
  } else {
    j["classifier"] = nullptr;
  }
  j["consistent"] = consistent;
  ordered_json pc = ordered_json::array();
  for (const CheckReport& c : checks) pc.push_back(check_to_json(c));
  j["paper_checks"] = std::move(pc);
  j["elapsed_ms"] = rr.elapsed_ms;  // last key; excluded from the body
  return j;
}

// The determinism-checked portion: everything except elapsed_ms.
inline std::string report_body(ordered_json j) {
  j.erase("elapsed_ms");
  return j.dump(2);
}

}  // namespace strongreal
