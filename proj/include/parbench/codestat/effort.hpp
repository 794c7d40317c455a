#pragma once

#include <map>
#include <string>

#include "parbench/codestat/scan.hpp"

namespace parbench::codestat {

/// Per-framework parallelization effort: 100 * LOC_par / LOC_total.
struct effort_report {
  std::map<std::string, double> effort;  // framework -> percentage in [0, 100]
  bool degenerate = false;               // loc_total was zero
};

inline effort_report compute_effort(const code_stats& stats) {
  effort_report report;
  report.degenerate = stats.loc_total == 0;
  for (const auto& [fw, count] : stats.loc_par) {
    report.effort[fw] =
        report.degenerate ? 0.0 : 100.0 * static_cast<double>(count) / static_cast<double>(stats.loc_total);
  }
  return report;
}

}  // namespace parbench::codestat
