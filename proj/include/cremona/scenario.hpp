#pragma once

#include <map>
#include <string>
#include <vector>

#include "cremona/serialize.hpp"

namespace cremona {

/// A scenario config: a surface (or a family of them) plus the curves,
/// declared data and expected values needed to run the pipeline.
struct Scenario {
  std::string name;
  std::string kind;  // "projection" or "family"
  std::string origin;
  Json config;
};

struct ExpectedValue {
  Json value;
  std::string source;
};

struct KeyVerdict {
  bool pass = false;
  std::string message;
};

struct ScenarioReport {
  std::string name;
  std::string kind;
  std::map<std::string, Json> computed;
  std::map<std::string, ExpectedValue> expected;
  std::map<std::string, KeyVerdict> verdicts;
  std::vector<std::string> assumptions;
  std::vector<std::string> narrative;
  bool overall = false;
};

inline constexpr long long kDefaultBound = 50;

std::vector<std::string> list_scenarios();
Scenario builtin_scenario(const std::string& name);
/// Validates the top-level shape; parse errors name the offending field.
Scenario scenario_from_json(const Json& config, const std::string& origin);
Scenario scenario_from_text(const std::string& text, const std::string& origin);
/// kIo when the file cannot be read.
Scenario load_scenario(const std::string& path);

/// Never throws on module errors: each failing stage records its keys as
/// FAIL with the message and the run continues.
ScenarioReport run_scenario(const Scenario& scenario, long long bound = kDefaultBound);

Json report_to_json(const ScenarioReport& report);
std::string report_to_markdown(const ScenarioReport& report);

}  // namespace cremona
