#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "bub/cli.hpp"
#include "support/families.hpp"

namespace {

int run_file(const std::string& path, const std::string& format, bool trace) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "bu-bounds: cannot read '" << path << "'\n";
    return bub::cli::kExitInput;
  }
  std::stringstream buf;
  buf << in.rdbuf();
  bub::BoundReport report;
  try {
    report = bub::cli::run(bub::cli::parse_problem(buf.str()));
  } catch (const bub::Error& e) {
    std::cerr << path << ": " << e.what() << "\n";
    return bub::cli::kExitInput;
  }
  if (!trace) report.trace.clear();
  std::cout << (format == "structured" ? bub::cli::render_structured(report) : bub::cli::render_text(report));
  return bub::cli::exit_code(report);
}

int selftest(bool full) {
  int failed = 0;
  for (const auto& c : bub::testing::acceptance_criteria(full ? 1.0 : 0.05)) {
    const auto start = std::chrono::steady_clock::now();
    const bub::Tally t = c.run(bub::Runner::Parallel);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%-4s %s  %zu trials, %zu failures, %.2fs  %s\n", c.id.c_str(), t.ok() ? "ok  " : "FAIL", t.trials,
                t.failures, secs, c.title.c_str());
    if (!t.ok()) {
      ++failed;
      std::printf("     %s\n", t.first_failure.c_str());
    }
  }
  return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cohomological lower bounds for parametrized Borsuk-Ulam coincidence sets"};
  app.require_subcommand(1);

  auto* run = app.add_subcommand("run", "evaluate a problem file");
  std::string file, format = "text";
  bool trace = false;
  run->add_option("file", file, "problem file")->required();
  run->add_option("--format", format, "output format")->check(CLI::IsMember({"text", "structured"}));
  run->add_flag("--trace", trace, "print intermediate ring elements");

  auto* self = app.add_subcommand("selftest", "run the oracle suites");
  bool full = false;
  self->add_flag("--full", full, "use the full acceptance trial counts");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : bub::cli::kExitInput;
  }
  if (*run) return run_file(file, format, trace);
  return selftest(full);
}
