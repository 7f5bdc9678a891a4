#pragma once

// Command implementations behind the `tropsched` executable. Each returns the
// process exit status and writes only to the given streams, so tests can
// drive them in-process.

#include <ostream>
#include <string>

namespace tropsched::cli {

enum ExitCode : int {
  success = 0,
  parse_error = 2,  // unreadable input, invalid instance, bad usage
  infeasible = 3,   // no feasible schedule, or `verify` found violations
  internal = 4,
};

enum class Mode { exact, floating };

/// "exact" or "float"; throws ParseError otherwise.
Mode mode_from_string(const std::string& name);

/// Absolute slack used by the verifier in float mode.
inline constexpr double float_tolerance = 1e-9;

struct SolveOptions {
  std::string instance;
  std::string objective = "makespan";
  std::string format = "text";  // text | json
  Mode mode = Mode::exact;
};

struct ChartOptions {
  std::string result;
  std::string member = "low";    // low | high
  std::string format = "ascii";  // ascii | svg
  std::string out;               // empty: write to `out`
};

struct VerifyOptions {
  std::string instance;
  std::string schedule;
  Mode mode = Mode::exact;
};

int run_solve(const SolveOptions& opt, std::ostream& out, std::ostream& err);

/// Arithmetic follows the "mode" recorded in the result document.
int run_chart(const ChartOptions& opt, std::ostream& out, std::ostream& err);

int run_verify(const VerifyOptions& opt, std::ostream& out, std::ostream& err);

}  // namespace tropsched::cli
