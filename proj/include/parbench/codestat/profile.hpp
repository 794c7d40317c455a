#pragma once

#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "parbench/errors.hpp"
#include "parbench/util/strings.hpp"

namespace parbench::codestat {

/// One identifier marker from a profile's call_markers list.
///
/// Accepted spellings:
///   "omp_set_lock"   exact identifier
///   "omp_*"          prefix; the rest of the identifier is unconstrained
///   "cl[A-Z]*"       prefix; the next character must be an uppercase letter
///                    (distinguishes clEnqueue... from class/clamp/...)
struct call_marker {
  std::string text;    // as written in the config
  std::string prefix;  // literal identifier head
  enum class match_mode { exact, prefix_any, prefix_upper } mode = match_mode::exact;

  static call_marker parse(std::string_view spec) {
    call_marker m;
    m.text = std::string(spec);
    std::string_view body = spec;
    if (body.size() >= 6 && body.substr(body.size() - 6) == "[A-Z]*") {
      m.mode = match_mode::prefix_upper;
      body.remove_suffix(6);
    } else if (!body.empty() && body.back() == '*') {
      m.mode = match_mode::prefix_any;
      body.remove_suffix(1);
    }
    if (body.empty()) throw config_error("call marker '" + m.text + "' has an empty identifier");
    for (char c : body) {
      if (!util::is_ident_char(c)) {
        throw config_error("call marker '" + m.text + "' contains non-identifier character '" +
                           std::string(1, c) + "'");
      }
    }
    m.prefix = std::string(body);
    return m;
  }

  /// token is a maximal run of identifier characters from a masked code line.
  bool matches(std::string_view token) const {
    if (!util::starts_with(token, prefix)) return false;
    switch (mode) {
      case match_mode::exact:
        return token.size() == prefix.size();
      case match_mode::prefix_any:
        return true;
      case match_mode::prefix_upper:
        return token.size() > prefix.size() && token[prefix.size()] >= 'A' &&
               token[prefix.size()] <= 'Z';
    }
    return false;
  }
};

/// The configurable marker set that defines one parallel framework.
struct framework_profile {
  std::string name;
  std::set<std::string> extensions;
  std::set<std::string> whole_file_extensions;
  std::vector<std::string> directive_markers;
  std::vector<call_marker> call_markers;
  std::vector<std::string> syntax_markers;

  bool scans_extension(const std::string& ext) const {
    return extensions.count(ext) > 0 || whole_file_extensions.count(ext) > 0;
  }

  bool is_whole_file_extension(const std::string& ext) const {
    return whole_file_extensions.count(ext) > 0;
  }
};

namespace detail {

inline std::string normalize_extension(std::string_view raw, const std::string& profile) {
  std::string ext = util::to_lower(util::trim(raw));
  if (ext.empty()) throw config_error("profile '" + profile + "': empty file extension");
  if (ext.front() != '.') ext.insert(ext.begin(), '.');
  return ext;
}

inline void validate(const framework_profile& p) {
  if (p.name.empty()) throw config_error("profile with empty name");
  for (char c : p.name) {
    if (!util::is_ident_char(c) && c != '-') {
      throw config_error("profile name '" + p.name + "' is not a lowercase token");
    }
  }
  if (p.name != util::to_lower(p.name)) {
    throw config_error("profile name '" + p.name + "' must be lowercase");
  }
  for (const auto& d : p.directive_markers) {
    if (util::trim(d).empty()) throw config_error("profile '" + p.name + "': empty directive marker");
  }
  for (const auto& s : p.syntax_markers) {
    if (s.empty()) throw config_error("profile '" + p.name + "': empty syntax marker");
  }
  for (const auto& ext : p.whole_file_extensions) {
    if (p.extensions.count(ext) > 0) {
      throw config_error("profile '" + p.name + "': extension '" + ext +
                         "' listed both as ordinary and whole-file");
    }
  }
}

inline framework_profile profile_from_json(const nlohmann::json& obj, std::size_t index) {
  if (!obj.is_object()) {
    throw config_error("profile #" + std::to_string(index + 1) + ": expected an object");
  }
  static const std::set<std::string> known_keys = {
      "name",           "extensions",   "whole_file_extensions",
      "directive_markers", "call_markers", "syntax_markers"};
  for (const auto& item : obj.items()) {
    if (known_keys.count(item.key()) == 0) {
      throw config_error("profile #" + std::to_string(index + 1) + ": unknown key '" +
                         item.key() + "'");
    }
  }

  framework_profile p;
  p.name = obj.value("name", std::string{});
  auto str_list = [&](const char* key) {
    std::vector<std::string> out;
    if (!obj.contains(key)) return out;
    const auto& arr = obj.at(key);
    if (!arr.is_array()) {
      throw config_error("profile '" + p.name + "': '" + key + "' must be an array of strings");
    }
    for (const auto& v : arr) {
      if (!v.is_string()) {
        throw config_error("profile '" + p.name + "': '" + key + "' must be an array of strings");
      }
      out.push_back(v.get<std::string>());
    }
    return out;
  };

  for (const auto& e : str_list("extensions")) p.extensions.insert(normalize_extension(e, p.name));
  for (const auto& e : str_list("whole_file_extensions")) {
    p.whole_file_extensions.insert(normalize_extension(e, p.name));
  }
  p.directive_markers = str_list("directive_markers");
  for (const auto& m : str_list("call_markers")) {
    if (m.empty()) throw config_error("profile '" + p.name + "': empty call marker");
    p.call_markers.push_back(call_marker::parse(m));
  }
  p.syntax_markers = str_list("syntax_markers");
  validate(p);
  return p;
}

}  // namespace detail

/// The C-family host-code extensions scanned by every default profile.
inline const std::vector<std::string>& default_host_extensions() {
  static const std::vector<std::string> exts = {".c",  ".h",  ".cpp", ".hpp",
                                                ".cc", ".hh", ".cxx", ".hxx"};
  return exts;
}

/// Built-in profiles for OpenMP, OpenACC, OpenCL, and CUDA. The same sets
/// ship as an editable config at data/default_profiles.json.
inline std::vector<framework_profile> default_profiles() {
  auto host = [] {
    std::set<std::string> s;
    for (const auto& e : default_host_extensions()) s.insert(e);
    return s;
  };

  framework_profile openmp;
  openmp.name = "openmp";
  openmp.extensions = host();
  openmp.directive_markers = {"#pragma omp"};
  openmp.call_markers = {call_marker::parse("omp_*")};

  framework_profile openacc;
  openacc.name = "openacc";
  openacc.extensions = host();
  openacc.directive_markers = {"#pragma acc"};
  openacc.call_markers = {call_marker::parse("acc_*")};

  framework_profile opencl;
  opencl.name = "opencl";
  opencl.extensions = host();
  opencl.whole_file_extensions = {".cl"};
  opencl.call_markers = {call_marker::parse("cl[A-Z]*"), call_marker::parse("CL_*"),
                         call_marker::parse("__kernel"), call_marker::parse("__global"),
                         call_marker::parse("__local")};

  framework_profile cuda;
  cuda.name = "cuda";
  cuda.extensions = host();
  cuda.extensions.insert(".cu");
  cuda.extensions.insert(".cuh");
  cuda.call_markers = {call_marker::parse("cuda*"), call_marker::parse("__global__"),
                       call_marker::parse("__device__"), call_marker::parse("__shared__"),
                       call_marker::parse("__syncthreads")};
  cuda.syntax_markers = {"<<<"};

  return {openmp, openacc, opencl, cuda};
}

/// Parses a profile-set config. The format is a JSON array of profile
/// objects; unknown keys are rejected. Empty input yields the built-in
/// default profiles.
inline std::vector<framework_profile> load_profiles(std::string_view config_text) {
  if (util::trim(config_text).empty()) return default_profiles();

  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(config_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw config_error(std::string("profile config: ") + e.what());
  }
  if (!doc.is_array()) throw config_error("profile config: top level must be an array");
  if (doc.empty()) throw config_error("profile config: no profiles defined");

  std::vector<framework_profile> profiles;
  std::set<std::string> seen;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    framework_profile p = detail::profile_from_json(doc[i], i);
    if (!seen.insert(p.name).second) {
      throw config_error("duplicate framework name '" + p.name + "'");
    }
    profiles.push_back(std::move(p));
  }
  return profiles;
}

}  // namespace parbench::codestat
