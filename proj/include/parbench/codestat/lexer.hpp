#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "parbench/util/strings.hpp"

namespace parbench::codestat {

enum class line_kind { blank, comment, code };

enum class comment_style {
  c_family,  // //, /* */, "...", '...'
  plain      // no lexical structure; every nonblank line is code
};

/// One physical line after lexical partitioning.
///
/// `masked` has the same length as the raw line: comment bytes and
/// string/char-literal interiors are replaced with spaces, so marker
/// matching can never hit quoted or commented text. Delimiters (quotes,
/// code punctuation) are kept.
struct partitioned_line {
  int line_no = 0;  // 1-based
  line_kind kind = line_kind::blank;
  std::string masked;
  bool spliced_to_next = false;  // ends with backslash-newline
};

/// Labels every physical line of `text` as blank, comment, or code and
/// produces the masked text used for marker matching.
///
/// The C-family machine tracks //-comments, /* */ blocks (every spanned
/// line is a comment line), double- and single-quoted literals with
/// escapes, and backslash-newline splices. A string hitting a bare
/// newline is treated as unterminated: masked to end of line, state
/// reset. An unterminated block comment runs to end of input.
inline std::vector<partitioned_line> partition_lines(std::string_view text,
                                                     comment_style style = comment_style::c_family) {
  std::vector<partitioned_line> lines;
  if (text.empty()) return lines;

  enum class st { code, string_lit, char_lit, line_comment, block_comment };
  st state = st::code;

  std::string masked;
  bool has_code = false;
  bool has_comment = false;
  bool spliced = false;
  int line_no = 1;

  auto finalize = [&](bool line_present) {
    if (!line_present) return;
    partitioned_line out;
    out.line_no = line_no++;
    out.kind = has_code ? line_kind::code : (has_comment ? line_kind::comment : line_kind::blank);
    out.masked = std::move(masked);
    out.spliced_to_next = spliced;
    lines.push_back(std::move(out));
    masked.clear();
    has_code = false;
    has_comment = false;
    spliced = false;
  };

  // True when buffer[i] starts a backslash-newline splice ("\\\n" or "\\\r\n").
  auto splice_at = [&](std::size_t i) {
    if (text[i] != '\\') return false;
    if (i + 1 < text.size() && text[i + 1] == '\n') return true;
    return i + 2 < text.size() && text[i + 1] == '\r' && text[i + 2] == '\n';
  };

  std::size_t i = 0;
  const std::size_t n = text.size();
  bool line_open = false;  // at least one byte seen since last newline

  while (i < n) {
    const char c = text[i];
    line_open = true;

    if (c == '\n') {
      const bool spliced_newline = spliced;
      if (state == st::line_comment) {
        has_comment = true;
        if (!spliced_newline) state = st::code;  // comment continues across a splice
      } else if (state == st::block_comment) {
        has_comment = true;
      } else if (state == st::string_lit || state == st::char_lit) {
        if (!spliced_newline) state = st::code;  // unterminated: masked to end of line
      }
      finalize(true);
      line_open = false;
      ++i;
      continue;
    }

    if (style == comment_style::plain) {
      masked += c;
      if (!util::is_space(c)) has_code = true;
      ++i;
      continue;
    }

    switch (state) {
      case st::code:
        if (c == '/' && i + 1 < n && text[i + 1] == '/') {
          state = st::line_comment;
          has_comment = true;
          masked += "  ";
          i += 2;
        } else if (c == '/' && i + 1 < n && text[i + 1] == '*') {
          state = st::block_comment;
          has_comment = true;
          masked += "  ";
          i += 2;
        } else if (c == '"') {
          state = st::string_lit;
          has_code = true;
          masked += c;
          ++i;
        } else if (c == '\'') {
          state = st::char_lit;
          has_code = true;
          masked += c;
          ++i;
        } else if (splice_at(i)) {
          spliced = true;
          masked += c;
          ++i;  // the newline itself is handled on the next iteration
        } else {
          masked += c;
          if (!util::is_space(c)) has_code = true;
          ++i;
        }
        break;

      case st::string_lit:
      case st::char_lit: {
        const char quote = state == st::string_lit ? '"' : '\'';
        if (splice_at(i)) {
          spliced = true;
          masked += ' ';
          ++i;
        } else if (c == '\\' && i + 1 < n) {
          masked += "  ";
          i += 2;
          if (!util::is_space(text[i - 1])) has_code = true;
        } else if (c == quote) {
          state = st::code;
          masked += c;
          has_code = true;
          ++i;
        } else {
          masked += ' ';
          if (!util::is_space(c)) has_code = true;
          ++i;
        }
        break;
      }

      case st::line_comment:
        has_comment = true;
        if (splice_at(i)) {
          spliced = true;
        }
        masked += ' ';
        ++i;
        break;

      case st::block_comment:
        has_comment = true;
        if (c == '*' && i + 1 < n && text[i + 1] == '/') {
          state = st::code;
          masked += "  ";
          i += 2;
        } else {
          masked += ' ';
          ++i;
        }
        break;
    }
  }

  // Final line without trailing newline.
  if (line_open) {
    if (state == st::block_comment || state == st::line_comment) has_comment = true;
    finalize(true);
  }
  return lines;
}

}  // namespace parbench::codestat
