/* SPDX-License-Identifier: Apache-2.0 */
#pragma once

#include <array>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <sys/wait.h>

namespace orsched::testing {

struct CommandResult {
  int exit_code = -1;
  std::string output;  // stdout only unless the command redirects
};

// Runs a shell command and captures stdout. Tests build command lines from
// compile-time paths (ORSCHED_CLI, ORSCHED_DATA_DIR), not user input.
inline CommandResult run_command(const std::string& command) {
  CommandResult result;
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) throw std::runtime_error("popen failed for: " + command);
  std::array<char, 4096> buffer;
  size_t got = 0;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
    result.output.append(buffer.data(), got);
  }
  const int status = pclose(pipe);
  if (WIFEXITED(status)) {
    result.exit_code = WEXITSTATUS(status);
  }
  return result;
}

}  // namespace orsched::testing
