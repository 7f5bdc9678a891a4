#include <iostream>

#include <CLI11.hpp>

#include "tropsched/cli.hpp"

int main(int argc, char** argv) {
  using namespace tropsched::cli;

  CLI::App app{"Max-plus project scheduling: optimal start times under temporal constraints"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string mode = "exact";
  app.add_option("--mode", mode, "Arithmetic: exact (rationals) or float")
      ->check(CLI::IsMember({"exact", "float"}));

  SolveOptions solve;
  auto* solve_cmd = app.add_subcommand("solve", "Compute the family of optimal schedules");
  solve_cmd->add_option("file", solve.instance, "Instance document")->required();
  solve_cmd->add_option("--objective", solve.objective, "makespan or deviation")
      ->check(CLI::IsMember({"makespan", "deviation"}));
  solve_cmd->add_option("--format", solve.format, "json or text")->check(CLI::IsMember({"json", "text"}));

  ChartOptions chart;
  auto* chart_cmd = app.add_subcommand("chart", "Draw a Gantt chart of one extreme schedule");
  chart_cmd->add_option("result", chart.result, "Result document written by `solve --format json`")->required();
  chart_cmd->add_option("--member", chart.member, "low or high")->check(CLI::IsMember({"low", "high"}));
  chart_cmd->add_option("--format", chart.format, "ascii or svg")->check(CLI::IsMember({"ascii", "svg"}));
  chart_cmd->add_option("--out", chart.out, "Output file (default: standard output)");

  VerifyOptions verify;
  auto* verify_cmd = app.add_subcommand("verify", "Check a schedule against an instance");
  verify_cmd->add_option("instance", verify.instance, "Instance document")->required();
  verify_cmd->add_option("schedule", verify.schedule, "Schedule document")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? success : parse_error;
  }

  try {
    solve.mode = verify.mode = mode_from_string(mode);
    if (*solve_cmd) return run_solve(solve, std::cout, std::cerr);
    if (*chart_cmd) return run_chart(chart, std::cout, std::cerr);
    return run_verify(verify, std::cout, std::cerr);
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return internal;
  }
}
