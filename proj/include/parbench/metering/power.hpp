#pragma once

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "parbench/errors.hpp"
#include "parbench/util/strings.hpp"

namespace parbench::metering {

/// One instantaneous power reading on the shared monotonic timebase.
struct power_sample {
  double t = 0.0;      // monotonic seconds
  double watts = 0.0;  // nonnegative
};

/// Time-ordered power trace of one component ("host", "device", ...).
struct power_log {
  std::string component;
  std::vector<power_sample> samples;

  /// Enforces the log invariants: finite strictly-increasing timestamps,
  /// nonnegative power.
  void append(double t, double watts) {
    if (!std::isfinite(t)) throw std::invalid_argument("power sample timestamp must be finite");
    if (!(watts >= 0.0)) throw std::invalid_argument("power sample watts must be >= 0");
    if (!samples.empty() && !(t > samples.back().t)) {
      throw std::invalid_argument("power sample timestamps must be strictly increasing");
    }
    samples.push_back({t, watts});
  }

  bool operator==(const power_log& other) const {
    if (component != other.component || samples.size() != other.samples.size()) return false;
    for (std::size_t i = 0; i < samples.size(); ++i) {
      if (samples[i].t != other.samples[i].t || samples[i].watts != other.samples[i].watts) {
        return false;
      }
    }
    return true;
  }
};

namespace detail {

/// Linear interpolation at time t, which must lie within the sample span.
inline double value_at(const std::vector<power_sample>& s, double t) {
  if (t <= s.front().t) return s.front().watts;
  if (t >= s.back().t) return s.back().watts;
  std::size_t hi = 1;
  while (s[hi].t < t) ++hi;
  const auto& a = s[hi - 1];
  const auto& b = s[hi];
  const double f = (t - a.t) / (b.t - a.t);
  return a.watts + f * (b.watts - a.watts);
}

}  // namespace detail

struct integration_result {
  double joules = 0.0;
  bool degenerate = false;  // fewer than two usable points in the window
};

/// Trapezoidal integral of the log over [t0, t1]. The piecewise-linear
/// power function is clipped to the window; boundary values are linearly
/// interpolated. Windows covering fewer than two points give 0 joules
/// with the degenerate flag set.
inline integration_result integrate_power(const power_log& log, double t0, double t1) {
  if (t0 > t1) throw std::invalid_argument("integrate_power: t0 > t1");
  const auto& s = log.samples;
  if (s.size() < 2) return {0.0, true};

  const double a = std::max(t0, s.front().t);
  const double b = std::min(t1, s.back().t);
  if (!(a < b)) return {0.0, true};

  double sum = 0.0;
  for (std::size_t i = 0; i + 1 < s.size(); ++i) {
    const double lo = std::max(a, s[i].t);
    const double hi = std::min(b, s[i + 1].t);
    if (hi <= lo) continue;
    const double span = s[i + 1].t - s[i].t;
    const double w_lo = s[i].watts + (lo - s[i].t) / span * (s[i + 1].watts - s[i].watts);
    const double w_hi = s[i].watts + (hi - s[i].t) / span * (s[i + 1].watts - s[i].watts);
    sum += 0.5 * (w_lo + w_hi) * (hi - lo);
  }
  return {sum, false};
}

// --- power log CSV: header `t_s,watts,component`, t_s fixed-point with 6
// --- decimals, rows time-ordered.

namespace detail {

inline constexpr std::string_view k_power_csv_header = "t_s,watts,component";

inline void validate_component_label(const std::string& component) {
  if (component.empty()) throw io_error("power log component label is empty");
  if (component.find(',') != std::string::npos || component.find('\n') != std::string::npos) {
    throw io_error("power log component label '" + component + "' contains ',' or newline");
  }
}

inline void write_rows(std::ostream& out, const power_log& log) {
  validate_component_label(log.component);
  std::string prev_t;
  for (const auto& s : log.samples) {
    std::string t_s = util::fmt_fixed(s.t, 6);
    if (!prev_t.empty() && t_s == prev_t) {
      throw io_error("power log timestamps collide at 6-decimal resolution: " + t_s);
    }
    out << t_s << ',' << util::fmt_shortest(s.watts) << ',' << log.component << '\n';
    prev_t = std::move(t_s);
  }
}

}  // namespace detail

inline void write_power_log(const power_log& log, std::ostream& out) {
  out << detail::k_power_csv_header << '\n';
  detail::write_rows(out, log);
  if (!out) throw io_error("power log write failure");
}

inline void write_power_log(const power_log& log, const std::filesystem::path& dest) {
  std::ofstream out(dest, std::ios::binary);
  if (!out) throw io_error("cannot open '" + dest.string() + "' for writing");
  write_power_log(log, out);
}

/// Several components merged into one file, globally time-ordered.
inline void write_power_logs(const std::map<std::string, power_log>& logs, std::ostream& out) {
  out << detail::k_power_csv_header << '\n';
  std::vector<std::tuple<double, const std::string*, const power_sample*>> rows;
  for (const auto& [component, log] : logs) {
    detail::validate_component_label(log.component);
    for (const auto& s : log.samples) rows.emplace_back(s.t, &log.component, &s);
  }
  std::stable_sort(rows.begin(), rows.end(), [](const auto& x, const auto& y) {
    if (std::get<0>(x) != std::get<0>(y)) return std::get<0>(x) < std::get<0>(y);
    return *std::get<1>(x) < *std::get<1>(y);
  });
  for (const auto& [t, component, s] : rows) {
    out << util::fmt_fixed(t, 6) << ',' << util::fmt_shortest(s->watts) << ',' << *component
        << '\n';
  }
  if (!out) throw io_error("power log write failure");
}

inline void write_power_logs(const std::map<std::string, power_log>& logs,
                             const std::filesystem::path& dest) {
  std::ofstream out(dest, std::ios::binary);
  if (!out) throw io_error("cannot open '" + dest.string() + "' for writing");
  write_power_logs(logs, out);
}

/// Parses a power log CSV with any number of components.
inline std::map<std::string, power_log> read_power_logs(std::istream& in,
                                                        const std::string& origin = "power log") {
  std::map<std::string, power_log> logs;
  std::string line;
  std::size_t line_no = 0;
  bool saw_header = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!saw_header) {
      if (util::trim(line) != detail::k_power_csv_header) {
        throw io_error(origin + ": line 1: expected header '" +
                       std::string(detail::k_power_csv_header) + "'");
      }
      saw_header = true;
      continue;
    }
    if (util::trim(line).empty()) continue;
    const auto fields = util::split(line, ',');
    if (fields.size() != 3) {
      throw io_error(origin + ": line " + std::to_string(line_no) + ": expected 3 fields, got " +
                     std::to_string(fields.size()));
    }
    double t = 0.0, watts = 0.0;
    if (!util::parse_double(fields[0], t) || !std::isfinite(t)) {
      throw io_error(origin + ": line " + std::to_string(line_no) + ": bad timestamp '" +
                     fields[0] + "'");
    }
    if (!util::parse_double(fields[1], watts) || !std::isfinite(watts) || watts < 0.0) {
      throw io_error(origin + ": line " + std::to_string(line_no) + ": bad wattage '" + fields[1] +
                     "'");
    }
    const std::string component = std::string(util::trim(fields[2]));
    if (component.empty()) {
      throw io_error(origin + ": line " + std::to_string(line_no) + ": empty component");
    }
    auto& log = logs[component];
    log.component = component;
    if (!log.samples.empty() && !(t > log.samples.back().t)) {
      throw io_error(origin + ": line " + std::to_string(line_no) +
                     ": non-monotonic timestamp for component '" + component + "'");
    }
    log.samples.push_back({t, watts});
  }
  if (!saw_header) throw io_error(origin + ": empty input, expected CSV header");
  return logs;
}

inline std::map<std::string, power_log> read_power_logs(const std::filesystem::path& source) {
  std::ifstream in(source, std::ios::binary);
  if (!in) throw io_error("cannot open '" + source.string() + "' for reading");
  return read_power_logs(in, source.string());
}

/// Single-component variant; errors if the file holds several components.
inline power_log read_power_log(std::istream& in, const std::string& origin = "power log") {
  auto logs = read_power_logs(in, origin);
  if (logs.empty()) return power_log{};
  if (logs.size() > 1) {
    throw io_error(origin + ": holds " + std::to_string(logs.size()) +
                   " components; use read_power_logs");
  }
  return std::move(logs.begin()->second);
}

inline power_log read_power_log(const std::filesystem::path& source) {
  std::ifstream in(source, std::ios::binary);
  if (!in) throw io_error("cannot open '" + source.string() + "' for reading");
  return read_power_log(in, source.string());
}

}  // namespace parbench::metering
