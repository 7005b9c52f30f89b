// Command-line front end over the C interface.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cremona/cremona.h"

namespace {

constexpr int kExitFail = 1;
constexpr int kExitError = 2;

struct ReportHandle {
  cremona_report* report = nullptr;
  ~ReportHandle() { cremona_report_free(report); }
};

struct ScenarioHandle {
  cremona_scenario* scenario = nullptr;
  ~ScenarioHandle() { cremona_scenario_free(scenario); }
};

bool is_builtin(const std::string& name) {
  for (size_t i = 0; i < cremona_builtin_scenario_count(); ++i)
    if (name == cremona_builtin_scenario_name(i)) return true;
  return false;
}

int report_error(const std::string& what, cremona_status status) {
  std::cerr << "cremona: " << what << ": " << cremona_status_name(status) << ": " << cremona_last_error() << "\n";
  return kExitError;
}

bool write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  out << content;
  return static_cast<bool>(out);
}

int run_one(const std::string& target, int64_t bound, const std::string& json_out, const std::string& md_out,
            bool quiet) {
  ScenarioHandle s;
  cremona_status st = is_builtin(target) ? cremona_scenario_load_builtin(target.c_str(), &s.scenario)
                                         : cremona_scenario_load_file(target.c_str(), &s.scenario);
  if (st != CREMONA_OK) return report_error("loading " + target, st);
  ReportHandle r;
  st = cremona_scenario_run(s.scenario, bound, &r.report);
  if (st != CREMONA_OK) return report_error("running " + target, st);
  if (!json_out.empty() && !write_file(json_out, cremona_report_json(r.report))) {
    std::cerr << "cremona: cannot write " << json_out << "\n";
    return kExitError;
  }
  if (!md_out.empty() && !write_file(md_out, cremona_report_markdown(r.report))) {
    std::cerr << "cremona: cannot write " << md_out << "\n";
    return kExitError;
  }
  const bool pass = cremona_report_passed(r.report) != 0;
  if (quiet) {
    std::cout << (pass ? "PASS " : "FAIL ") << cremona_scenario_name(s.scenario) << "\n";
  } else if (md_out.empty()) {
    std::cout << cremona_report_markdown(r.report);
  }
  return pass ? 0 : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cremona equivalence checks for projected surfaces"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(cremona_version()));

  int64_t bound = 50;
  std::string target, json_out, md_out, system_path;

  auto* list = app.add_subcommand("list", "List built-in scenarios");

  auto* run = app.add_subcommand("run", "Run a built-in scenario or a scenario file");
  run->add_option("scenario", target, "Built-in name or path to a JSON config")->required();
  run->add_option("--json", json_out, "Write the JSON report here");
  run->add_option("--md", md_out, "Write the markdown report here instead of stdout");
  run->add_option("--bound", bound, "Search bound for the feasibility solver")->check(CLI::NonNegativeNumber);

  auto* check_all = app.add_subcommand("check-all", "Run every built-in scenario");
  check_all->add_option("--bound", bound, "Search bound for the feasibility solver")->check(CLI::NonNegativeNumber);

  auto* solve = app.add_subcommand("solve", "Decide nonnegative integer feasibility of a JSON system");
  solve->add_option("system", system_path, "Path to {unknowns, equations}")->required();
  solve->add_option("--bound", bound, "Search bound")->check(CLI::NonNegativeNumber);

  CLI11_PARSE(app, argc, argv);

  if (*list) {
    for (size_t i = 0; i < cremona_builtin_scenario_count(); ++i) std::cout << cremona_builtin_scenario_name(i) << "\n";
    return 0;
  }
  if (*run) return run_one(target, bound, json_out, md_out, false);
  if (*check_all) {
    int worst = 0;
    for (size_t i = 0; i < cremona_builtin_scenario_count(); ++i)
      worst = std::max(worst, run_one(cremona_builtin_scenario_name(i), bound, "", "", true));
    return worst;
  }
  if (*solve) {
    std::ifstream in(system_path);
    if (!in) {
      std::cerr << "cremona: cannot read " << system_path << "\n";
      return kExitError;
    }
    std::stringstream buf;
    buf << in.rdbuf();
    char* out = nullptr;
    const cremona_status st = cremona_solve_nonneg_json(buf.str().c_str(), bound, &out);
    if (st != CREMONA_OK) return report_error("solving " + system_path, st);
    std::cout << out << "\n";
    cremona_string_free(out);
    return 0;
  }
  return 0;
}
