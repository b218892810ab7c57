#pragma once

// Helpers for driving the command-line binary from tests.

#include <sys/wait.h>
#include <unistd.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

namespace clirunner {

struct CommandResult {
  int exit_code = -1;
  std::string output;  // captured stdout
};

inline CommandResult run_command(const std::string& command) {
  CommandResult result;
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) throw std::runtime_error("popen failed for: " + command);
  std::array<char, 4096> buffer{};
  std::size_t n = 0;
  while ((n = std::fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
    result.output.append(buffer.data(), n);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

inline std::string quote(const std::string& arg) { return "'" + arg + "'"; }

/// Fresh path under the system temp directory, removed on destruction.
class TempFile {
 public:
  explicit TempFile(const std::string& suffix) {
    static int counter = 0;
    path_ = (std::filesystem::temp_directory_path() /
             ("spinstat_test_" + std::to_string(::getpid()) + "_" +
              std::to_string(counter++) + suffix))
                .string();
  }
  ~TempFile() {
    std::error_code ec;
    std::filesystem::remove(path_, ec);
  }
  TempFile(const TempFile&) = delete;
  TempFile& operator=(const TempFile&) = delete;

  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

/// The "value=..." tail of every table row in verify's stdout, in order.
inline std::vector<std::string> table_values(const std::string& output) {
  std::vector<std::string> values;
  std::size_t pos = 0;
  while (pos < output.size()) {
    std::size_t eol = output.find('\n', pos);
    if (eol == std::string::npos) eol = output.size();
    const std::string line = output.substr(pos, eol - pos);
    if (line.rfind("[PASS] ", 0) == 0 || line.rfind("[FAIL] ", 0) == 0) {
      const std::size_t v = line.rfind("value=");
      if (v != std::string::npos) values.push_back(line.substr(v + 6));
    }
    pos = eol + 1;
  }
  return values;
}

}  // namespace clirunner
