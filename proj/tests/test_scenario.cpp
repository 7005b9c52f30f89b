#include "doctest.h"

#include <cstdio>
#include <fstream>

#include "cremona/error.hpp"
#include "cremona/scenario.hpp"

using namespace cremona;

namespace {

std::string write_temp(const std::string& name, const std::string& content) {
  const std::string path = std::string(P_tmpdir) + "/cremona_test_" + name;
  std::ofstream(path) << content;
  return path;
}

Json builtin_config(const std::string& name) { return builtin_scenario(name).config; }

}  // namespace

TEST_CASE("registry") {
  CHECK(list_scenarios() == std::vector<std::string>{"sextic-ruled", "bordiga", "dp6", "family-open", "family-closed"});
  CHECK_THROWS_AS(builtin_scenario("nope"), Error);
}

TEST_CASE("built-in scenarios pass") {
  for (const auto& name : list_scenarios()) {
    const auto r = run_scenario(builtin_scenario(name));
    INFO(name << "\n" << report_to_markdown(r));
    CHECK(r.overall);
  }
}

TEST_CASE("data files agree with the library constructors") {
  CHECK(to_json(make_f0_sextic()) == builtin_config("sextic-ruled")["surface"]);
  CHECK(to_json(make_bordiga()) == builtin_config("bordiga")["surface"]);
  CHECK(to_json(make_dp6()) == builtin_config("dp6")["surface"]);
}

TEST_CASE("reports are deterministic and file loads match built-ins") {
  const auto a = report_to_json(run_scenario(builtin_scenario("sextic-ruled"))).dump(2);
  const auto b = report_to_json(run_scenario(builtin_scenario("sextic-ruled"))).dump(2);
  CHECK(a == b);
  const auto path = write_temp("sextic.json", builtin_config("sextic-ruled").dump(2));
  const auto c = report_to_json(run_scenario(load_scenario(path))).dump(2);
  CHECK(a == c);
  std::remove(path.c_str());
}

TEST_CASE("sextic report contents") {
  const auto r = run_scenario(builtin_scenario("sextic-ruled"));
  CHECK(r.computed.at("verdict") == "NOT_CREMONA_EQUIVALENT_TO_PLANE");
  CHECK(r.computed.at("obstruction.final_line") == "e = -2 - b2");
  const auto md = report_to_markdown(r);
  CHECK(md.find("main theorem is reproduced as an infeasibility certificate") != std::string::npos);
  CHECK(md.find("Conclusion: INFEASIBLE") != std::string::npos);
  // Narrative order: genus, double curve, Gamma_W, ray numbers, log Kodaira, certificate, verdict.
  std::vector<std::size_t> at;
  for (const char* needle : {"sectional genus", "double along a curve", "Gamma_W =", "ray numbers",
                             "Log Kodaira", "infeasibility certificate", "Verdict:"})
    at.push_back(md.find(needle));
  for (std::size_t i = 0; i < at.size(); ++i) CHECK(at[i] != std::string::npos);
  CHECK(std::is_sorted(at.begin(), at.end()));
  const Json j = report_to_json(r);
  CHECK(j["overall"] == "PASS");
  CHECK(j["expected"]["deg_gamma"]["source"].get<std::string>().size() > 0);
}

TEST_CASE("perturbed double-curve degree propagates and fails") {
  Json c = builtin_config("sextic-ruled");
  c["deg_gamma_override"] = 11;
  const auto r = run_scenario(scenario_from_json(c, "perturbed"));
  CHECK_FALSE(r.overall);
  CHECK(r.computed.at("deg_gamma") == 11);
  CHECK(r.computed.at("gamma_w") == Json({4, 10}));
  CHECK(r.computed.at("st_dot.f1") == Json(-2));
  CHECK(r.computed.at("kbar.inequality") == "6 < 11");
  CHECK_FALSE(r.verdicts.at("deg_gamma").pass);
  CHECK_FALSE(r.verdicts.at("gamma_w").pass);
  CHECK(r.verdicts.at("degree").pass);
  CHECK_FALSE(r.assumptions.empty());
}

TEST_CASE("module errors become failed keys") {
  Json c = builtin_config("sextic-ruled");
  c["incidence_curves"] = Json::array({"f1"});  // twisted cubic images are not planar
  const auto r = run_scenario(scenario_from_json(c, "broken"));
  CHECK_FALSE(r.overall);
  REQUIRE(r.computed.count("error.incidence"));
  CHECK(r.computed.at("error.incidence")["code"] == "NOT_PLANAR");
  CHECK(r.verdicts.at("degree").pass);
  CHECK_FALSE(r.verdicts.at("gamma_w").pass);
  CHECK(r.verdicts.at("gamma_w").message.find("projection") != std::string::npos);
  CHECK(r.computed.count("verdict"));
}

TEST_CASE("config validation names fields") {
  auto message = [](const Json& c) {
    try {
      scenario_from_json(c, "t");
    } catch (const Error& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  Json c = builtin_config("dp6");
  c.erase("name");
  CHECK(message(c).find("scenario.name") != std::string::npos);
  c = builtin_config("dp6");
  c["expected"]["degree"].erase("source");
  CHECK(message(c).find("expected.degree.source") != std::string::npos);
  c = builtin_config("dp6");
  c["kind"] = "other";
  CHECK(message(c).find("kind") != std::string::npos);
  CHECK_THROWS_AS(scenario_from_text("{not json", "t"), Error);
  try {
    load_scenario("/nonexistent/file.json");
    FAIL("missing file");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kIo);
  }
  // Surface errors surface as a failed stage naming the field.
  c = builtin_config("dp6");
  c["surface"].erase("canonical");
  const auto r = run_scenario(scenario_from_json(c, "t"));
  CHECK_FALSE(r.overall);
  CHECK(r.computed.at("error.surface")["message"].get<std::string>().find("surface.canonical") != std::string::npos);
}

TEST_CASE("family scenarios") {
  const auto open = run_scenario(builtin_scenario("family-open"));
  CHECK(open.computed.at("special_fiber.monoid") == true);
  CHECK(open.computed.at("verdict") == "CE_NOT_OPEN");
  const auto closed = run_scenario(builtin_scenario("family-closed"));
  CHECK(closed.computed.at("dimension_count.lhs") == 16);
  CHECK(closed.computed.at("grassmannian_dim") == 16);
  CHECK(closed.computed.at("verdict") == "CE_NOT_CLOSED");
  CHECK_FALSE(closed.assumptions.empty());
}
