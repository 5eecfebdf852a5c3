// Acceptance suite runner: one pass/fail line per criterion, exit status 0
// only when every criterion holds. Criterion 8 is additionally checked at
// the command-line level: two selftest invocations must produce identical
// reports modulo the timing field.

#include <chrono>
#include <iostream>
#include <sstream>
#include <string>

#include "pcgroup/cli.hpp"
#include "pcgroup/selftest.hpp"

using namespace pcgroup;

namespace {

double seconds_since(const std::chrono::steady_clock::time_point& t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

std::string selftest_report_without_timing() {
  std::ostringstream out, err;
  const int code =
      cli::run({"selftest", "--seed", "1", "--json"}, out, err);
  if (code != 0) return "exit=" + std::to_string(code) + " " + err.str();
  Json j = Json::parse(out.str());
  j.erase("timing_ms");
  return j.dump(2);
}

}  // namespace

int main() {
  const auto t0 = std::chrono::steady_clock::now();
  selftest::Options opts;
  opts.seed = 1;

  auto suite_start = std::chrono::steady_clock::now();
  auto result = selftest::run_suite(opts);
  const double suite_elapsed = seconds_since(suite_start);

  // Spec-literal reading of criterion 8: byte-compare two full selftest
  // command runs.
  const auto cli_start = std::chrono::steady_clock::now();
  const std::string first = selftest_report_without_timing();
  const std::string second = selftest_report_without_timing();
  const bool cli_reports_identical = !first.empty() && first == second;
  const double cli_elapsed = seconds_since(cli_start);
  for (auto& c : result.criteria) {
    if (c.id == 8) {
      c.details["cli_reports_identical"] = cli_reports_identical;
      c.pass = c.pass && cli_reports_identical;
    }
  }

  bool all_pass = true;
  for (const auto& c : result.criteria) {
    all_pass = all_pass && c.pass;
    std::cout << "[" << c.id << "/" << result.criteria.size() << "] "
              << (c.pass ? "PASS" : "FAIL") << " " << c.name << "  "
              << c.details.dump() << "\n";
  }
  std::cout << "suite: " << suite_elapsed << " s, cli determinism check: "
            << cli_elapsed << " s, total: " << seconds_since(t0) << " s\n";
  std::cout << "RESULT: " << (all_pass ? "PASS" : "FAIL") << "\n";
  return all_pass ? 0 : 1;
}
