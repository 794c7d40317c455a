#pragma once

#include <stdexcept>
#include <string>

namespace parbench {

/// Malformed configuration input (profile sets, suite files, CLI config).
class config_error : public std::runtime_error {
public:
  explicit config_error(const std::string& what) : std::runtime_error(what) {}
};

/// Source-tree scanning failure (unreadable file, missing root).
class scan_error : public std::runtime_error {
public:
  scan_error(const std::string& path, const std::string& what)
      : std::runtime_error(path + ": " + what), path_(path) {}

  const std::string& path() const noexcept { return path_; }

private:
  std::string path_;
};

/// Measurement session used outside its idle -> running -> stopped lifecycle.
class state_error : public std::logic_error {
public:
  explicit state_error(const std::string& what) : std::logic_error(what) {}
};

/// File or stream read/write failure, including format violations.
class io_error : public std::runtime_error {
public:
  explicit io_error(const std::string& what) : std::runtime_error(what) {}
};

/// Benchmark orchestration failure (build error, unspawnable command).
class harness_error : public std::runtime_error {
public:
  explicit harness_error(const std::string& what) : std::runtime_error(what) {}
};

/// Report assembly failure (unknown column, empty ratio overlap).
class report_error : public std::runtime_error {
public:
  explicit report_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace parbench
