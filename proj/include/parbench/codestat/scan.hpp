#pragma once

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "parbench/codestat/classify.hpp"
#include "parbench/codestat/profile.hpp"
#include "parbench/errors.hpp"
#include "parbench/util/glob.hpp"

namespace parbench::codestat {

/// LOC counts for one file. loc_par holds one entry per loaded profile.
struct file_stats {
  std::string path;  // relative to the scan root (or as given to classify_file)
  std::int64_t loc_total = 0;
  std::map<std::string, std::int64_t> loc_par;
};

/// Aggregate LOC counts over a scanned tree.
struct code_stats {
  std::int64_t loc_total = 0;
  std::map<std::string, std::int64_t> loc_par;
  std::int64_t files_scanned = 0;
  std::vector<file_stats> per_file;
};

namespace detail {

inline std::string lower_extension(const std::filesystem::path& p) {
  return util::to_lower(p.extension().string());
}

inline std::string read_file_bytes(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw scan_error(path.string(), "cannot open for reading");
  std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) throw scan_error(path.string(), "read failure");
  return content;
}

inline void init_loc_par(std::map<std::string, std::int64_t>& m,
                         const std::vector<framework_profile>& profiles) {
  for (const auto& p : profiles) m.emplace(p.name, 0);
}

}  // namespace detail

/// Counts one file. Marker attribution runs for profiles listing the
/// file's extension in `extensions`; profiles listing it under
/// `whole_file_extensions` receive every code line. Returns nullopt for
/// binary content (NUL byte), with a warning; throws scan_error when the
/// file cannot be read.
inline std::optional<file_stats> classify_file(const std::filesystem::path& path,
                                               const std::vector<framework_profile>& profiles,
                                               std::vector<std::string>* warnings = nullptr) {
  const std::string content = detail::read_file_bytes(path);
  if (content.find('\0') != std::string::npos) {
    if (warnings) warnings->push_back(path.string() + ": binary content, skipped");
    return std::nullopt;
  }

  const std::string ext = detail::lower_extension(path);
  std::vector<framework_profile> marker_profiles;
  std::vector<const framework_profile*> whole_profiles;
  for (const auto& p : profiles) {
    if (p.extensions.count(ext) > 0) marker_profiles.push_back(p);
    if (p.whole_file_extensions.count(ext) > 0) whole_profiles.push_back(&p);
  }

  file_stats stats;
  stats.path = path.generic_string();
  detail::init_loc_par(stats.loc_par, profiles);

  for (const auto& lc : classify_source(content, marker_profiles)) {
    if (lc.kind != line_kind::code) continue;
    ++stats.loc_total;
    for (const auto& fw : lc.frameworks) ++stats.loc_par[fw];
  }
  for (const auto* p : whole_profiles) stats.loc_par[p->name] = stats.loc_total;
  return stats;
}

/// Recursive scan of `root`. Files are selected by the profiles'
/// extension sets, then filtered by include/exclude globs applied to the
/// root-relative path. Files are counted independently (in parallel) and
/// merged in lexicographic path order, so output is deterministic.
inline code_stats scan_tree(const std::filesystem::path& root,
                            const std::vector<framework_profile>& profiles,
                            const std::vector<std::string>& include_globs = {},
                            const std::vector<std::string>& exclude_globs = {},
                            std::vector<std::string>* warnings = nullptr) {
  namespace fs = std::filesystem;
  std::error_code ec;
  if (!fs::exists(root, ec) || !fs::is_directory(root, ec)) {
    throw scan_error(root.string(), "not a directory");
  }

  std::vector<std::pair<std::string, fs::path>> candidates;  // (relative, absolute)
  fs::recursive_directory_iterator it(root, fs::directory_options::skip_permission_denied, ec);
  if (ec) throw scan_error(root.string(), ec.message());
  for (const fs::directory_entry& entry : it) {
    if (!entry.is_regular_file(ec)) continue;
    const std::string ext = detail::lower_extension(entry.path());
    bool scanned = false;
    for (const auto& p : profiles) {
      if (p.scans_extension(ext)) {
        scanned = true;
        break;
      }
    }
    if (!scanned) continue;
    const std::string rel = fs::relative(entry.path(), root, ec).generic_string();
    if (ec) continue;
    if (!util::globs_admit(include_globs, exclude_globs, rel)) continue;
    candidates.emplace_back(rel, entry.path());
  }
  std::sort(candidates.begin(), candidates.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });

  // Classification is pure and independent per file; merge order is fixed
  // by the sort above.
  std::vector<std::optional<file_stats>> results(candidates.size());
  std::vector<std::vector<std::string>> file_warnings(candidates.size());
  const std::size_t worker_count =
      std::max<std::size_t>(1, std::min<std::size_t>(std::thread::hardware_concurrency(),
                                                     candidates.size()));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next.fetch_add(1); i < candidates.size(); i = next.fetch_add(1)) {
      try {
        results[i] = classify_file(candidates[i].second, profiles, &file_warnings[i]);
        if (results[i]) results[i]->path = candidates[i].first;
      } catch (const scan_error& e) {
        file_warnings[i].push_back(std::string(e.what()) + " (skipped)");
      }
    }
  };
  if (worker_count <= 1) {
    work();
  } else {
    std::vector<std::thread> workers;
    for (std::size_t t = 0; t < worker_count; ++t) workers.emplace_back(work);
    for (auto& w : workers) w.join();
  }

  code_stats total;
  detail::init_loc_par(total.loc_par, profiles);
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (warnings) {
      warnings->insert(warnings->end(), file_warnings[i].begin(), file_warnings[i].end());
    }
    if (!results[i]) continue;
    file_stats& fstats = *results[i];
    total.loc_total += fstats.loc_total;
    for (const auto& [fw, count] : fstats.loc_par) total.loc_par[fw] += count;
    ++total.files_scanned;
    total.per_file.push_back(std::move(fstats));
  }
  return total;
}

}  // namespace parbench::codestat
