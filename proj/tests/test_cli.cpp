#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "support/fixtures.hpp"
#include "tropsched/cli.hpp"
#include "tropsched/result_io.hpp"

using namespace tropsched;
using namespace tropsched::cli;
using fixtures::data_path;

namespace {

struct Run {
  int status;
  std::string out;
  std::string err;
};

Run solve_cmd(const std::string& file, const std::string& objective, const std::string& format,
              Mode mode = Mode::exact) {
  std::ostringstream out, err;
  const int status = run_solve({data_path(file), objective, format, mode}, out, err);
  return {status, out.str(), err.str()};
}

Run verify_cmd(const std::string& schedule, Mode mode = Mode::exact) {
  std::ostringstream out, err;
  const int status = run_verify({data_path("example1.txt"), data_path(schedule), mode}, out, err);
  return {status, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("tropsched_test_" + name);
  std::ofstream(path) << content;
  return path.string();
}

Run chart_cmd(const std::string& result_path, const std::string& member, const std::string& format,
              const std::string& out_path = {}) {
  std::ostringstream out, err;
  const int status = run_chart({result_path, member, format, out_path}, out, err);
  return {status, out.str(), err.str()};
}

}  // namespace

TEST_CASE("solve reports the minimum makespan") {
  const auto r = solve_cmd("example1.txt", "makespan", "json");
  REQUIRE(r.status == success);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["theta"] == 9);
  CHECK(j["unique"] == true);
  CHECK(j["schedules"]["low"]["x"] == nlohmann::json({0, 1, 4, 0, 5}));
  CHECK(j["schedules"]["low"]["y"] == nlohmann::json({4, 5, 9, 5, 8}));
  CHECK(j["schedules"]["low"]["feasible"] == true);
  CHECK(j["u_high"] == nlohmann::json({0, 1, 4, 0, 5}));
  CHECK(j["mode"] == "exact");
  CHECK(j["activities"] == nlohmann::json({"S1", "S2", "S3", "S4", "S5"}));
}

TEST_CASE("solve reports the minimum deviation") {
  const auto r = solve_cmd("example1.txt", "deviation", "json");
  REQUIRE(r.status == success);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["theta"] == 5);
  CHECK(j["unique"] == false);
  CHECK(j["schedules"]["low"]["x"][2] == 4);
  CHECK(j["schedules"]["high"]["x"][2] == 5);
  CHECK(j["G"][4] == nlohmann::json({5, 4, 0, 5, 0}));

  const auto text = solve_cmd("example1.txt", "deviation", "text");
  CHECK(text.out.find("theta: 5 units") != std::string::npos);
  CHECK(text.out.find("S3: [4, 5]") != std::string::npos);
}

TEST_CASE("output is deterministic") {
  CHECK(solve_cmd("example1.txt", "deviation", "json").out == solve_cmd("example1.txt", "deviation", "json").out);
  CHECK(solve_cmd("example1.txt", "makespan", "text").out == solve_cmd("example1.txt", "makespan", "text").out);
}

TEST_CASE("float mode") {
  const auto r = solve_cmd("example1.txt", "makespan", "json", Mode::floating);
  REQUIRE(r.status == success);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["mode"] == "float");
  CHECK(j["theta"] == 9.0);
}

TEST_CASE("exit statuses") {
  const auto conflict = solve_cmd("deadline_conflict.txt", "makespan", "text");
  CHECK(conflict.status == infeasible);
  CHECK(conflict.err.find("deadlines incompatible") != std::string::npos);

  const auto cycle = solve_cmd("positive_cycle.txt", "deviation", "text");
  CHECK(cycle.status == infeasible);
  CHECK(cycle.err.find("A -> B -> C -> A") != std::string::npos);

  const auto bad = solve_cmd("undeclared.txt", "makespan", "text");
  CHECK(bad.status == parse_error);
  CHECK(bad.err.find("unknown activity 'S9'") != std::string::npos);

  CHECK(solve_cmd("absent.txt", "makespan", "text").status == parse_error);
  CHECK(solve_cmd("example1.txt", "cost", "text").status == parse_error);
  CHECK(solve_cmd("example1.txt", "makespan", "yaml").status == parse_error);
  CHECK_THROWS_AS(mode_from_string("fuzzy"), ParseError);
}

TEST_CASE("verify") {
  const auto ok = verify_cmd("example1_makespan.sched");
  CHECK(ok.status == success);
  CHECK(ok.out == "feasible\nmakespan: 9\ndeviation: 5\n");

  const auto zero = verify_cmd("zero_starts.sched");
  CHECK(zero.status == infeasible);
  CHECK(zero.out.find("start-start S1 -> S2: 1 > 0") != std::string::npos);

  const auto stretched = verify_cmd("bad_finish.sched", Mode::floating);
  CHECK(stretched.status == infeasible);
  CHECK(stretched.out.find("start-finish S2: 5 != 6") != std::string::npos);
}

TEST_CASE("chart from a solve result") {
  const auto makespan = temp_file("makespan.json", solve_cmd("example1.txt", "makespan", "json").out);
  const auto low = chart_cmd(makespan, "low", "ascii");
  REQUIRE(low.status == success);
  CHECK(low.out.find("S1 ============ .  .  .  .  .   [0, 4]") != std::string::npos);
  CHECK(low.out.find("S3  .  .  .  . ===============  [4, 9]") != std::string::npos);

  const auto deviation = temp_file("deviation.json", solve_cmd("example1.txt", "deviation", "json").out);
  const auto high = chart_cmd(deviation, "high", "ascii");
  CHECK(high.out.find("S3  .  .  .  .  . ===============  [5, 10]") != std::string::npos);

  const auto svg_path = (std::filesystem::temp_directory_path() / "tropsched_test_chart.svg").string();
  CHECK(chart_cmd(deviation, "high", "svg", svg_path).status == success);
  std::ifstream in(svg_path);
  const std::string svg((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(svg == chart_cmd(deviation, "high", "svg").out);
  CHECK(svg.find("<svg") == 0);

  const auto floating = temp_file("float.json", solve_cmd("example1.txt", "makespan", "json", Mode::floating).out);
  CHECK(chart_cmd(floating, "low", "ascii").out == low.out);
}

TEST_CASE("chart input errors") {
  CHECK(chart_cmd(temp_file("broken.json", "{ not json"), "low", "ascii").status == parse_error);
  CHECK(chart_cmd(temp_file("empty.json", "{}"), "low", "ascii").status == parse_error);
  CHECK(chart_cmd(data_path("nothing.json"), "low", "ascii").status == parse_error);
  const auto deviation = temp_file("deviation2.json", solve_cmd("example1.txt", "deviation", "json").out);
  CHECK(chart_cmd(deviation, "middle", "ascii").status == parse_error);
}
