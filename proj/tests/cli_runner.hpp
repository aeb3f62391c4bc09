#ifndef TWISTK_TESTS_CLI_RUNNER_HPP
#define TWISTK_TESTS_CLI_RUNNER_HPP

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

namespace cli {

struct Result {
  int exit_code = -1;
  std::string output;
};

// Runs the installed CLI with the given arguments, capturing stdout.
inline Result run(const std::string& args) {
  Result r;
  std::string cmd = std::string(TWISTK_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0)
    r.output.append(buf.data(), n);
  int status = ::pclose(pipe);
  r.exit_code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
  return r;
}

inline std::string temp_dir() {
  char tmpl[] = "/tmp/twistk-test-XXXXXX";
  const char* p = ::mkdtemp(tmpl);
  return p ? p : "/tmp";
}

}  // namespace cli

#endif
