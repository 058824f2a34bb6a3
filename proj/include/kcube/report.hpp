#pragma once

#include <cstdio>
#include <string>
#include <vector>

#include "json.hpp"
#include "kcube/verify.hpp"

// Serialization of verification reports. The JSON layout is described by
// docs/report.schema.json; one object per report, one report per line.
namespace kcube::verify {

inline nlohmann::ordered_json to_json(const VerifyReport& r, bool with_timing = false) {
  nlohmann::ordered_json j;
  j["lemma"] = r.lemma;
  j["k"] = r.k;
  j["n"] = r.n;
  j["variant"] = r.variant;
  j["status"] = std::string(to_string(r.status()));
  j["checked"] = r.checked;
  j["failures"] = r.failures;
  j["witnesses"] = r.witnesses;
  auto details = nlohmann::ordered_json::object();
  for (const auto& [key, value] : r.details) details[key] = value;
  j["details"] = std::move(details);
  if (!r.note.empty()) j["note"] = r.note;
  if (with_timing) j["wall_ms"] = r.wall_ms;
  return j;
}

inline std::string to_json_line(const VerifyReport& r, bool with_timing = false) {
  return to_json(r, with_timing).dump();
}

inline std::string table_header() {
  char buf[128];
  std::snprintf(buf, sizeof buf, "%-12s %3s %3s %-9s %-8s %10s %8s", "lemma", "k", "n", "variant", "status", "checked",
                "failures");
  return buf;
}

inline std::string to_table_row(const VerifyReport& r, bool with_timing = false) {
  char buf[160];
  std::snprintf(buf, sizeof buf, "%-12s %3d %3d %-9s %-8s %10llu %8llu", r.lemma.c_str(), r.k, r.n, r.variant.c_str(),
                std::string(to_string(r.status())).c_str(), static_cast<unsigned long long>(r.checked),
                static_cast<unsigned long long>(r.failures));
  std::string row = buf;
  if (with_timing) {
    std::snprintf(buf, sizeof buf, " %9.2fms", r.wall_ms);
    row += buf;
  }
  for (const auto& [key, value] : r.details) row += "  " + key + "=" + value;
  if (!r.note.empty()) row += "  (" + r.note + ")";
  for (const auto& w : r.witnesses) {
    row += "\n    witness:";
    for (const auto& part : w) row += " " + part;
  }
  return row;
}

}  // namespace kcube::verify
