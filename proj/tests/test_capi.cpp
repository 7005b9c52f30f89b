#include "doctest.h"

#include <cstdlib>
#include <string>

#include "cremona/cremona.h"

TEST_CASE("version and status names") {
  CHECK(std::string(cremona_version()).size() > 0);
  CHECK(std::string(cremona_status_name(CREMONA_OK)) == "OK");
  CHECK(std::string(cremona_status_name(CREMONA_E_PARSE)) == "PARSE");
  CHECK(std::string(cremona_status_name(CREMONA_E_INVALID_ARGUMENT)) == "INVALID_ARGUMENT");
}

TEST_CASE("scenario lifecycle") {
  REQUIRE(cremona_builtin_scenario_count() == 5);
  CHECK(std::string(cremona_builtin_scenario_name(0)) == "sextic-ruled");
  CHECK(cremona_builtin_scenario_name(5) == nullptr);
  cremona_scenario* s = nullptr;
  REQUIRE(cremona_scenario_load_builtin("sextic-ruled", &s) == CREMONA_OK);
  CHECK(std::string(cremona_scenario_name(s)) == "sextic-ruled");
  cremona_report* r = nullptr;
  REQUIRE(cremona_scenario_run(s, 50, &r) == CREMONA_OK);
  CHECK(cremona_report_passed(r) == 1);
  CHECK(std::string(cremona_report_json(r)).find("\"overall\": \"PASS\"") != std::string::npos);
  CHECK(std::string(cremona_report_markdown(r)).find("# Scenario sextic-ruled") == 0);
  cremona_report_free(r);
  CHECK(cremona_scenario_run(s, -1, &r) == CREMONA_E_INVALID_ARGUMENT);
  cremona_scenario_free(s);
}

TEST_CASE("load errors") {
  cremona_scenario* s = nullptr;
  CHECK(cremona_scenario_load_builtin("nope", &s) == CREMONA_E_CONFIGURATION);
  CHECK(std::string(cremona_last_error()).find("nope") != std::string::npos);
  CHECK(cremona_scenario_load_file("/nonexistent.json", &s) == CREMONA_E_IO);
  CHECK(cremona_scenario_load_json("{\"name\": 3}", &s) == CREMONA_E_PARSE);
  CHECK(std::string(cremona_last_error()).find("scenario.name") != std::string::npos);
  CHECK(cremona_scenario_load_builtin(nullptr, &s) == CREMONA_E_INVALID_ARGUMENT);
  const char* dir = std::getenv("CREMONA_TEST_DATA");
  REQUIRE(dir);
  REQUIRE(cremona_scenario_load_file((std::string(dir) + "/sextic-deg-gamma-11.json").c_str(), &s) == CREMONA_OK);
  cremona_report* r = nullptr;
  REQUIRE(cremona_scenario_run(s, 50, &r) == CREMONA_OK);
  CHECK(cremona_report_passed(r) == 0);
  cremona_report_free(r);
  cremona_scenario_free(s);
}

TEST_CASE("lattice functions") {
  const char* f0 = R"({"id": "F0", "basis": ["a", "b"], "gram": [[0, 1], [1, 0]],
                       "canonical": [-2, -2], "effectivity": "ALL_COORDS_NONNEG"})";
  cremona_lattice* l = nullptr;
  REQUIRE(cremona_lattice_from_json(f0, &l) == CREMONA_OK);
  CHECK(cremona_lattice_rank(l) == 2);
  const int64_t h[] = {1, 3};
  const int64_t f2[] = {0, 1};
  int64_t out = 0;
  REQUIRE(cremona_lattice_pair(l, h, h, 2, &out) == CREMONA_OK);
  CHECK(out == 6);
  REQUIRE(cremona_lattice_pair(l, h, f2, 2, &out) == CREMONA_OK);
  CHECK(out == 1);
  REQUIRE(cremona_lattice_genus(l, h, 2, &out) == CREMONA_OK);
  CHECK(out == 0);
  CHECK(cremona_lattice_pair(l, h, h, 3, &out) == CREMONA_E_DIMENSION);
  int eff = -1;
  REQUIRE(cremona_lattice_is_effective(l, h, 2, &eff) == CREMONA_OK);
  CHECK(eff == 1);
  const int64_t big[] = {INT64_MAX, INT64_MAX};
  CHECK(cremona_lattice_pair(l, big, big, 2, &out) == CREMONA_E_OVERFLOW);

  cremona_lattice* up = nullptr;
  REQUIRE(cremona_lattice_blow_up_point(l, &up) == CREMONA_OK);
  CHECK(cremona_lattice_rank(up) == 3);
  char* json = nullptr;
  REQUIRE(cremona_lattice_to_json(up, &json) == CREMONA_OK);
  CHECK(std::string(json).find("\"canonical\":[-2,-2,1]") != std::string::npos);
  cremona_string_free(json);
  cremona_lattice_free(up);
  cremona_lattice_free(l);

  CHECK(cremona_lattice_from_json("{\"id\": \"x\"}", &l) == CREMONA_E_PARSE);
}

TEST_CASE("feasibility through JSON") {
  const char* sys = R"({"unknowns": ["e", "s1", "s2", "a", "b1", "b2"], "equations": [
      {"coeffs": [1, -1, 0, 0, 1, 0], "constant": 2},
      {"coeffs": [1, 0, -1, 0, 0, 1], "constant": -2},
      {"coeffs": [1, -1, -1, -1, 0, 0], "constant": 2}]})";
  char* out = nullptr;
  REQUIRE(cremona_solve_nonneg_json(sys, 50, &out) == CREMONA_OK);
  const std::string s(out);
  cremona_string_free(out);
  CHECK(s.find("\"status\": \"INFEASIBLE\"") != std::string::npos);
  CHECK(s.find("\"final\": \"e = -2 - b2\"") != std::string::npos);
  CHECK(cremona_solve_nonneg_json("[]", 5, &out) == CREMONA_E_PARSE);
}
