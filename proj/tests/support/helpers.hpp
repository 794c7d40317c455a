#pragma once

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <string>

namespace testutil {

inline std::filesystem::path source_dir() { return std::filesystem::path(PARBENCH_SOURCE_DIR); }

inline std::filesystem::path fixture(const std::string& rel) {
  return source_dir() / "tests" / "fixtures" / rel;
}

inline std::filesystem::path data_file(const std::string& rel) {
  return source_dir() / "data" / rel;
}

inline std::string read_text(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return std::string((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
}

inline void write_text(const std::filesystem::path& p, const std::string& content) {
  std::filesystem::create_directories(p.parent_path());
  std::ofstream out(p, std::ios::binary);
  out << content;
}

/// Self-deleting scratch directory under the system temp dir.
class temp_dir {
public:
  explicit temp_dir(const std::string& tag) {
    static std::mt19937_64 rng{std::random_device{}()};
    path_ = std::filesystem::temp_directory_path() /
            (tag + "-" + std::to_string(rng()) + "-" + std::to_string(::getpid()));
    std::filesystem::create_directories(path_);
  }
  ~temp_dir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  temp_dir(const temp_dir&) = delete;
  temp_dir& operator=(const temp_dir&) = delete;

  const std::filesystem::path& path() const { return path_; }

private:
  std::filesystem::path path_;
};

}  // namespace testutil
