#pragma once

#include <sys/wait.h>
#include <unistd.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <string>

namespace lrc::testing {

struct ProcessResult {
  int exit_code = -1;
  std::string out;  // stdout and stderr, interleaved
};

inline ProcessResult run_process(const std::string& command) {
  ProcessResult r;
  FILE* pipe = popen((command + " 2>&1").c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed: " + command);
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

inline std::string env_or(const char* name, const std::string& fallback) {
  const char* v = std::getenv(name);
  return v ? std::string(v) : fallback;
}

#ifndef LRCHECK_DEFAULT_BIN
#define LRCHECK_DEFAULT_BIN "lrcheck"
#endif
#ifndef LRCHECK_DEFAULT_FIXTURES
#define LRCHECK_DEFAULT_FIXTURES "scenarios"
#endif

inline std::string lrcheck_bin() { return env_or("LRCHECK_BIN", LRCHECK_DEFAULT_BIN); }
inline std::string fixture(const std::string& file) {
  return env_or("LRCHECK_FIXTURES", LRCHECK_DEFAULT_FIXTURES) + "/" + file;
}

inline std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

/// Writes `text` to a fresh file in the temp directory and returns its path.
inline std::filesystem::path write_temp(const std::string& stem, const std::string& text) {
  const auto p = std::filesystem::temp_directory_path() /
                 (stem + "-" + std::to_string(static_cast<long long>(::getpid())) + ".ini");
  std::ofstream(p) << text;
  return p;
}

}  // namespace lrc::testing
