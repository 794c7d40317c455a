#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace parbench::util {

/// Plain-text table with aligned columns. Numeric columns are usually
/// right-aligned; alignment is chosen per column.
class text_table {
public:
  enum class align { left, right };

  void set_header(std::vector<std::string> cells) { header_ = std::move(cells); }

  void set_alignments(std::vector<align> aligns) { aligns_ = std::move(aligns); }

  void add_row(std::vector<std::string> cells) { rows_.push_back(std::move(cells)); }

  std::size_t row_count() const { return rows_.size(); }

  std::string render() const {
    std::vector<std::size_t> widths;
    measure(header_, widths);
    for (const auto& row : rows_) measure(row, widths);

    std::string out;
    if (!header_.empty()) {
      append_row(out, header_, widths);
      std::string rule;
      for (std::size_t i = 0; i < widths.size(); ++i) {
        if (i > 0) rule += "  ";
        rule.append(widths[i], '-');
      }
      out += rule;
      out += '\n';
    }
    for (const auto& row : rows_) append_row(out, row, widths);
    return out;
  }

private:
  static void measure(const std::vector<std::string>& row, std::vector<std::size_t>& widths) {
    if (row.size() > widths.size()) widths.resize(row.size(), 0);
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (row[i].size() > widths[i]) widths[i] = row[i].size();
    }
  }

  void append_row(std::string& out, const std::vector<std::string>& row,
                  const std::vector<std::size_t>& widths) const {
    for (std::size_t i = 0; i < widths.size(); ++i) {
      if (i > 0) out += "  ";
      const std::string& cell = i < row.size() ? row[i] : empty_;
      const bool right = i < aligns_.size() && aligns_[i] == align::right;
      const std::size_t pad = widths[i] - cell.size();
      if (right) out.append(pad, ' ');
      out += cell;
      // No trailing spaces on the last column: keeps output byte-stable
      // under diff tools that strip them.
      if (!right && i + 1 < widths.size()) out.append(pad, ' ');
    }
    out += '\n';
  }

  std::vector<std::string> header_;
  std::vector<align> aligns_;
  std::vector<std::vector<std::string>> rows_;
  std::string empty_;
};

}  // namespace parbench::util
