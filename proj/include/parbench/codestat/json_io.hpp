#pragma once

#include <string>

#include <json.hpp>

#include "parbench/codestat/effort.hpp"
#include "parbench/codestat/scan.hpp"
#include "parbench/util/strings.hpp"
#include "parbench/util/table.hpp"

namespace parbench::codestat {

/// Machine output:
/// { "loc_total": int, "files_scanned": int, "loc_par": {name:int},
///   "effort_percent": {name:float}, "per_file": [...] }
inline nlohmann::json stats_to_json(const code_stats& stats, const effort_report& effort) {
  nlohmann::json doc;
  doc["loc_total"] = stats.loc_total;
  doc["files_scanned"] = stats.files_scanned;
  doc["loc_par"] = nlohmann::json::object();
  for (const auto& [fw, count] : stats.loc_par) doc["loc_par"][fw] = count;
  doc["effort_percent"] = nlohmann::json::object();
  for (const auto& [fw, pct] : effort.effort) doc["effort_percent"][fw] = pct;
  doc["per_file"] = nlohmann::json::array();
  for (const auto& f : stats.per_file) {
    nlohmann::json entry;
    entry["path"] = f.path;
    entry["loc_total"] = f.loc_total;
    entry["loc_par"] = nlohmann::json::object();
    for (const auto& [fw, count] : f.loc_par) entry["loc_par"][fw] = count;
    doc["per_file"].push_back(std::move(entry));
  }
  return doc;
}

/// Human output: aggregate counts plus one row per framework.
inline std::string render_stats_table(const code_stats& stats, const effort_report& effort) {
  std::string out;
  out += "loc_total:     " + std::to_string(stats.loc_total) + "\n";
  out += "files_scanned: " + std::to_string(stats.files_scanned) + "\n";
  if (effort.degenerate) {
    out += "note: no code lines found; effort is degenerate (reported as 0)\n";
  }
  out += "\n";

  util::text_table table;
  table.set_header({"framework", "loc_par", "effort%"});
  table.set_alignments(
      {util::text_table::align::left, util::text_table::align::right, util::text_table::align::right});
  for (const auto& [fw, count] : stats.loc_par) {
    table.add_row({fw, std::to_string(count), util::fmt_fixed(effort.effort.at(fw), 2)});
  }
  out += table.render();
  return out;
}

}  // namespace parbench::codestat
