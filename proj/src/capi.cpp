#include "cremona/cremona.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <string>

#include "cremona/error.hpp"
#include "cremona/scenario.hpp"

struct cremona_lattice {
  cremona::IntersectionLattice lattice;
};

struct cremona_scenario {
  cremona::Scenario scenario;
};

struct cremona_report {
  cremona::ScenarioReport report;
  std::string json;
  std::string markdown;
};

namespace {

thread_local std::string last_error;

cremona_status fail(cremona_status status, const std::string& message) {
  last_error = message;
  return status;
}

template <class F>
cremona_status guarded(F&& body) {
  try {
    last_error.clear();
    return body();
  } catch (const cremona::Error& e) {
    return fail(static_cast<cremona_status>(static_cast<int>(e.code())), e.what());
  } catch (const std::bad_alloc&) {
    return fail(CREMONA_E_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(CREMONA_E_INTERNAL, e.what());
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

cremona::DivisorClass read_class(const cremona_lattice* l, const int64_t* v, size_t n) {
  if (n != l->lattice.rank()) {
    throw cremona::Error(cremona::ErrorCode::kDimension, "class has " + std::to_string(n) +
                                                             " coefficients, lattice has rank " +
                                                             std::to_string(l->lattice.rank()));
  }
  cremona::IntVector coeffs;
  for (size_t i = 0; i < n; ++i) coeffs.emplace_back(v[i]);
  return l->lattice.make_class(std::move(coeffs));
}

int64_t narrow(const cremona::Integer& v) {
  auto small = cremona::to_int64(v);
  if (!small) throw cremona::Error(cremona::ErrorCode::kOverflow, cremona::to_string(v) + " does not fit in int64");
  return *small;
}

#define CREMONA_REQUIRE(cond) \
  if (!(cond)) return fail(CREMONA_E_INVALID_ARGUMENT, "invalid argument: " #cond)

cremona_status load(cremona::Scenario s, cremona_scenario** out) {
  *out = new cremona_scenario{std::move(s)};
  return CREMONA_OK;
}

}  // namespace

extern "C" {

const char* cremona_version(void) { return "1.0.0"; }

const char* cremona_status_name(cremona_status status) {
  switch (status) {
    case CREMONA_OK: return "OK";
    case CREMONA_E_INVALID_ARGUMENT: return "INVALID_ARGUMENT";
    case CREMONA_E_INTERNAL: return "INTERNAL";
    default:
      if (status >= CREMONA_E_LATTICE_MISMATCH && status <= CREMONA_E_IO)
        return cremona::error_code_name(static_cast<cremona::ErrorCode>(static_cast<int>(status)));
      return "UNKNOWN";
  }
}

const char* cremona_last_error(void) { return last_error.c_str(); }

void cremona_string_free(char* s) { std::free(s); }

size_t cremona_builtin_scenario_count(void) { return cremona::list_scenarios().size(); }

const char* cremona_builtin_scenario_name(size_t index) {
  static const std::vector<std::string> names = cremona::list_scenarios();
  return index < names.size() ? names[index].c_str() : nullptr;
}

cremona_status cremona_scenario_load_builtin(const char* name, cremona_scenario** out) {
  CREMONA_REQUIRE(name && out);
  return guarded([&] { return load(cremona::builtin_scenario(name), out); });
}

cremona_status cremona_scenario_load_file(const char* path, cremona_scenario** out) {
  CREMONA_REQUIRE(path && out);
  return guarded([&] { return load(cremona::load_scenario(path), out); });
}

cremona_status cremona_scenario_load_json(const char* json, cremona_scenario** out) {
  CREMONA_REQUIRE(json && out);
  return guarded([&] { return load(cremona::scenario_from_text(json, "<string>"), out); });
}

const char* cremona_scenario_name(const cremona_scenario* scenario) {
  return scenario ? scenario->scenario.name.c_str() : nullptr;
}

void cremona_scenario_free(cremona_scenario* scenario) { delete scenario; }

cremona_status cremona_scenario_run(const cremona_scenario* scenario, int64_t bound, cremona_report** out) {
  CREMONA_REQUIRE(scenario && out);
  CREMONA_REQUIRE(bound >= 0);
  return guarded([&] {
    auto r = std::make_unique<cremona_report>();
    r->report = cremona::run_scenario(scenario->scenario, bound);
    r->json = cremona::report_to_json(r->report).dump(2);
    r->markdown = cremona::report_to_markdown(r->report);
    *out = r.release();
    return CREMONA_OK;
  });
}

int cremona_report_passed(const cremona_report* report) { return report && report->report.overall ? 1 : 0; }

const char* cremona_report_json(const cremona_report* report) { return report ? report->json.c_str() : nullptr; }

const char* cremona_report_markdown(const cremona_report* report) {
  return report ? report->markdown.c_str() : nullptr;
}

void cremona_report_free(cremona_report* report) { delete report; }

cremona_status cremona_lattice_from_json(const char* json, cremona_lattice** out) {
  CREMONA_REQUIRE(json && out);
  return guarded([&] {
    cremona::Json j;
    try {
      j = cremona::Json::parse(json);
    } catch (const cremona::Json::parse_error& e) {
      throw cremona::Error(cremona::ErrorCode::kParse, e.what());
    }
    *out = new cremona_lattice{cremona::lattice_from_json(j)};
    return CREMONA_OK;
  });
}

cremona_status cremona_lattice_to_json(const cremona_lattice* lattice, char** out) {
  CREMONA_REQUIRE(lattice && out);
  return guarded([&] {
    *out = copy_string(cremona::to_json(lattice->lattice).dump());
    return CREMONA_OK;
  });
}

size_t cremona_lattice_rank(const cremona_lattice* lattice) { return lattice ? lattice->lattice.rank() : 0; }

cremona_status cremona_lattice_pair(const cremona_lattice* lattice, const int64_t* a, const int64_t* b, size_t n,
                                    int64_t* out) {
  CREMONA_REQUIRE(lattice && a && b && out);
  return guarded([&] {
    *out = narrow(cremona::pair(lattice->lattice, read_class(lattice, a, n), read_class(lattice, b, n)));
    return CREMONA_OK;
  });
}

cremona_status cremona_lattice_genus(const cremona_lattice* lattice, const int64_t* curve, size_t n, int64_t* out) {
  CREMONA_REQUIRE(lattice && curve && out);
  return guarded([&] {
    *out = narrow(cremona::genus(lattice->lattice, read_class(lattice, curve, n)));
    return CREMONA_OK;
  });
}

cremona_status cremona_lattice_is_effective(const cremona_lattice* lattice, const int64_t* d, size_t n, int* out) {
  CREMONA_REQUIRE(lattice && d && out);
  return guarded([&] {
    *out = cremona::is_effective(lattice->lattice, read_class(lattice, d, n)) ? 1 : 0;
    return CREMONA_OK;
  });
}

cremona_status cremona_lattice_blow_up_point(const cremona_lattice* lattice, cremona_lattice** out) {
  CREMONA_REQUIRE(lattice && out);
  return guarded([&] {
    *out = new cremona_lattice{cremona::blow_up_point(lattice->lattice).lattice};
    return CREMONA_OK;
  });
}

void cremona_lattice_free(cremona_lattice* lattice) { delete lattice; }

cremona_status cremona_solve_nonneg_json(const char* system_json, int64_t bound, char** out) {
  CREMONA_REQUIRE(system_json && out);
  return guarded([&] {
    cremona::Json j;
    try {
      j = cremona::Json::parse(system_json);
    } catch (const cremona::Json::parse_error& e) {
      throw cremona::Error(cremona::ErrorCode::kParse, e.what());
    }
    const cremona::FeasibilitySystem system = cremona::system_from_json(j);
    const cremona::FeasibilityCertificate cert = cremona::solve_nonneg(system, bound);
    *out = copy_string(cremona::to_json(system, cert).dump(2));
    return CREMONA_OK;
  });
}

}  // extern "C"
