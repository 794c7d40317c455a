#pragma once

#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "parbench/codestat/lexer.hpp"
#include "parbench/codestat/profile.hpp"
#include "parbench/util/strings.hpp"

namespace parbench::codestat {

/// One classified physical line: its kind plus the frameworks attributed
/// to it. Blank and comment lines never carry attributions.
struct line_class {
  int line_no = 0;
  line_kind kind = line_kind::blank;
  std::set<std::string> frameworks;
};

namespace detail {

/// Maximal [A-Za-z0-9_] runs of a masked code line.
inline std::vector<std::string_view> identifier_tokens(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && !util::is_ident_char(line[i])) ++i;
    std::size_t start = i;
    while (i < line.size() && util::is_ident_char(line[i])) ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

/// Statement-prefix match after leading whitespace. When the marker ends
/// in an identifier character the next character must not extend the
/// identifier, so "#pragma omp" does not match "#pragma ompx".
inline bool directive_matches(std::string_view line, std::string_view marker) {
  const std::string_view body = util::ltrim(line);
  if (!util::starts_with(body, marker)) return false;
  if (marker.empty()) return false;
  if (util::is_ident_char(marker.back()) && body.size() > marker.size() &&
      util::is_ident_char(body[marker.size()])) {
    return false;
  }
  return true;
}

inline bool profile_matches(const framework_profile& p, std::string_view masked,
                            const std::vector<std::string_view>& tokens) {
  for (const auto& d : p.directive_markers) {
    if (directive_matches(masked, d)) return true;
  }
  for (const auto& m : p.call_markers) {
    for (const auto& tok : tokens) {
      if (m.matches(tok)) return true;
    }
  }
  for (const auto& s : p.syntax_markers) {
    if (masked.find(s) != std::string_view::npos) return true;
  }
  return false;
}

inline bool any_directive_matches(const framework_profile& p, std::string_view masked) {
  for (const auto& d : p.directive_markers) {
    if (directive_matches(masked, d)) return true;
  }
  return false;
}

}  // namespace detail

/// Frameworks attributed to one masked code line. A framework matches if
/// the line starts with one of its directive markers, contains one of its
/// call markers at identifier boundaries, or contains one of its syntax
/// markers anywhere. Several frameworks may match the same line.
inline std::set<std::string> classify_line(std::string_view masked_code,
                                           const std::vector<framework_profile>& profiles) {
  std::set<std::string> out;
  const auto tokens = detail::identifier_tokens(masked_code);
  for (const auto& p : profiles) {
    if (detail::profile_matches(p, masked_code, tokens)) out.insert(p.name);
  }
  return out;
}

/// Partitions and classifies a whole source text. A directive line ending
/// in a backslash extends its attribution to the continuation lines of
/// the same logical statement; the chain stops at the first line that is
/// not code or does not splice onward.
inline std::vector<line_class> classify_source(std::string_view text,
                                               const std::vector<framework_profile>& profiles,
                                               comment_style style = comment_style::c_family) {
  const auto lines = partition_lines(text, style);
  std::vector<line_class> out;
  out.reserve(lines.size());

  std::set<std::string> chain;  // directive continuations carried to the next line
  for (const auto& line : lines) {
    line_class lc;
    lc.line_no = line.line_no;
    lc.kind = line.kind;
    if (line.kind != line_kind::code) {
      chain.clear();
      out.push_back(std::move(lc));
      continue;
    }

    lc.frameworks = classify_line(line.masked, profiles);
    lc.frameworks.insert(chain.begin(), chain.end());

    if (line.spliced_to_next) {
      std::set<std::string> next = std::move(chain);
      for (const auto& p : profiles) {
        if (detail::any_directive_matches(p, line.masked)) next.insert(p.name);
      }
      chain = std::move(next);
    } else {
      chain.clear();
    }
    out.push_back(std::move(lc));
  }
  return out;
}

}  // namespace parbench::codestat
