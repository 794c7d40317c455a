#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "parbench/util/strings.hpp"

namespace parbench::util {

namespace detail {

/// `*` and `?` within one path component; neither crosses a separator.
inline bool match_component(std::string_view pat, std::string_view comp) {
  std::size_t p = 0, c = 0;
  std::size_t star = std::string_view::npos, star_c = 0;
  while (c < comp.size()) {
    if (p < pat.size() && (pat[p] == comp[c] || pat[p] == '?')) {
      ++p;
      ++c;
    } else if (p < pat.size() && pat[p] == '*') {
      star = p++;
      star_c = c;
    } else if (star != std::string_view::npos) {
      p = star + 1;
      c = ++star_c;
    } else {
      return false;
    }
  }
  while (p < pat.size() && pat[p] == '*') ++p;
  return p == pat.size();
}

inline bool match_segments(const std::vector<std::string>& pat, std::size_t pi,
                           const std::vector<std::string>& comps, std::size_t ci) {
  if (pi == pat.size()) return ci == comps.size();
  if (pat[pi] == "**") {
    // Zero or more whole components.
    if (match_segments(pat, pi + 1, comps, ci)) return true;
    return ci < comps.size() && match_segments(pat, pi, comps, ci + 1);
  }
  if (ci == comps.size()) return false;
  return match_component(pat[pi], comps[ci]) && match_segments(pat, pi + 1, comps, ci + 1);
}

}  // namespace detail

/// Matches a '/'-separated relative path against a glob pattern.
/// `*` and `?` stay within one component; `**` spans zero or more components.
inline bool glob_match(std::string_view pattern, std::string_view path) {
  const auto pat = split(pattern, '/');
  const auto comps = split(path, '/');
  return detail::match_segments(pat, 0, comps, 0);
}

/// include empty => everything included; exclude wins over include.
inline bool globs_admit(const std::vector<std::string>& include,
                        const std::vector<std::string>& exclude, std::string_view path) {
  if (!include.empty()) {
    bool hit = false;
    for (const auto& g : include) {
      if (glob_match(g, path)) {
        hit = true;
        break;
      }
    }
    if (!hit) return false;
  }
  for (const auto& g : exclude) {
    if (glob_match(g, path)) return false;
  }
  return true;
}

}  // namespace parbench::util
