#pragma once

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

namespace testutil {

struct RunResult {
  int exit_code;
  std::string out;
};

/// Runs a shell command, capturing stdout. stderr flows to the test log.
inline RunResult run(const std::string& cmd) {
  std::string captured;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, {}};
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) {
    captured.append(buf.data(), got);
  }
  int status = pclose(pipe);
  int code = -1;
  if (WIFEXITED(status)) code = WEXITSTATUS(status);
  return {code, std::move(captured)};
}

}  // namespace testutil
