#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace phit {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown when --help is requested; carries the help text.
struct HelpRequested {
  std::string text;
};

struct RunConfig {
  enum class Cmd { compute, verify, identity, export_cmd };
  Cmd cmd = Cmd::compute;
  uint64_t q = 0;
  std::string format = "text";
  uint64_t seed = 0;
  unsigned trials = 10;
  std::vector<std::string> checks;  // resolved subset in canonical order
  std::string out;                  // empty = stdout
  std::string in;                   // input path for the export subcommand
  std::string report_json;          // optional machine report path
  unsigned q_max = 64;
  unsigned e_max = 64;
  bool timings = false;  // off by default so reports are byte-reproducible
};

// Canonical check names, in report order.
const std::vector<std::string>& all_check_names();

// Parse argv (without the program name).  Throws UsageError on bad usage
// (including non-prime-power q) and HelpRequested for --help.
RunConfig parse_args(const std::vector<std::string>& args);

// Execute; returns the process exit code (0 ok, 1 check failure, 3 I/O).
int run_cli(const RunConfig& cfg);

}  // namespace phit
