#include "cremona/scenario.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <optional>
#include <set>
#include <sstream>
#include <string_view>

#include "cremona/error.hpp"

namespace cremona {

namespace detail {
const std::vector<std::pair<std::string_view, std::string_view>>& builtin_scenario_sources();
}

namespace {

constexpr const char* kNotCE = "NOT_CREMONA_EQUIVALENT_TO_PLANE";
constexpr const char* kUndetermined = "UNDETERMINED";

Error config_error(const std::string& field, const std::string& what) {
  return Error(ErrorCode::kParse, "field '" + field + "': " + what);
}

std::string get_string(const Json& j, const std::string& key, const std::string& field) {
  const Json& v = require(j, key, field);
  if (!v.is_string()) throw config_error(field + "." + key, "expected a string");
  return v.get<std::string>();
}

std::vector<std::string> string_list(const Json& j, const std::string& key, const std::string& field) {
  std::vector<std::string> out;
  auto it = j.find(key);
  if (it == j.end()) return out;
  if (!it->is_array()) throw config_error(field + "." + key, "expected an array of names");
  for (std::size_t i = 0; i < it->size(); ++i) {
    if (!(*it)[i].is_string()) throw config_error(field + "." + key + "[" + std::to_string(i) + "]", "expected a string");
    out.push_back((*it)[i].get<std::string>());
  }
  return out;
}

bool is_ce_verdict(const Json& v) {
  return v.is_string() && v.get<std::string>().rfind("CE_TO_PLANE", 0) == 0;
}

Json uniform_or_list(const std::vector<Integer>& values) {
  if (!values.empty() && std::all_of(values.begin(), values.end(), [&](const Integer& v) { return v == values[0]; })) {
    return to_json(values[0]);
  }
  return to_json(values);
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

std::string json_text(const Json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

/// Runs named stages, turning module errors into per-key failures.
class Run {
 public:
  Run(ScenarioReport& report) : report_(report) {}

  void stage(const std::string& name, std::vector<std::string> keys, const std::function<void()>& body) {
    try {
      body();
    } catch (const Error& e) {
      fail(name, std::move(keys), std::string(error_code_name(e.code())), e.what());
    } catch (const std::exception& e) {
      fail(name, std::move(keys), "INTERNAL", e.what());
    }
  }

  void set(const std::string& key, Json value) { report_.computed[key] = std::move(value); }
  void say(std::string line) { report_.narrative.push_back(std::move(line)); }
  void assume(const std::string& a) {
    if (std::find(report_.assumptions.begin(), report_.assumptions.end(), a) == report_.assumptions.end())
      report_.assumptions.push_back(a);
  }

  template <class T>
  static const T& need(const std::optional<T>& value, const std::string& stage_name) {
    if (!value) throw Error(ErrorCode::kConfiguration, "requires stage '" + stage_name + "', which failed");
    return *value;
  }

  /// Message for an expected key that was never computed.
  std::string missing_reason(const std::string& key) const {
    for (const auto& [prefixes, message] : failures_) {
      for (const auto& p : prefixes) {
        if (key == p || (!p.empty() && p.back() == '.' && key.rfind(p, 0) == 0)) return message;
      }
    }
    return "not computed";
  }

 private:
  void fail(const std::string& name, std::vector<std::string> keys, const std::string& code, const std::string& what) {
    const std::string message = "stage '" + name + "' failed (" + code + "): " + what;
    report_.computed["error." + name] = Json{{"code", code}, {"message", what}};
    failures_.emplace_back(std::move(keys), message);
  }

  ScenarioReport& report_;
  std::vector<std::pair<std::vector<std::string>, std::string>> failures_;
};

using CurveGroups = std::map<std::string, std::vector<DivisorClass>>;

const std::vector<DivisorClass>& group(const CurveGroups& curves, const std::string& name) {
  auto it = curves.find(name);
  if (it == curves.end()) throw Error(ErrorCode::kConfiguration, "unknown curve group '" + name + "'");
  return it->second;
}

std::vector<DivisorClass> union_of(const CurveGroups& curves, const std::vector<std::string>& names) {
  std::vector<DivisorClass> out;
  for (const auto& n : names) {
    const auto& g = group(curves, n);
    out.insert(out.end(), g.begin(), g.end());
  }
  return out;
}

DeclaredDivisor declared_from_json(const Json& j, const std::string& field) {
  DeclaredDivisor d;
  d.label = get_string(j, "label", field);
  d.divisor.h = integer_from_json(require(j, "h", field), field + ".h");
  d.divisor.e = integer_from_json(require(j, "e", field), field + ".e");
  d.assumption = get_string(j, "assumption", field);
  return d;
}

bool is_blown_up_plane(const IntersectionLattice& l) {
  if (l.rank() == 0 || l.labels()[0] != "L") return false;
  for (std::size_t i = 0; i < l.rank(); ++i)
    for (std::size_t j = 0; j < l.rank(); ++j)
      if (l.gram()(i, j) != (i != j ? 0 : (i == 0 ? 1 : -1))) return false;
  return true;
}

void run_projection(const Scenario& s, long long bound, Run& run) {
  const Json& c = s.config;
  std::optional<PolarizedSurface> surface;
  std::optional<CurveGroups> curves;
  std::optional<ProjectionModel> model;
  std::optional<BlowupThreefold> threefold;
  std::optional<NegativityCertificate> kbar;
  std::optional<RayVerdict> second;
  std::optional<bool> nef, fano;
  std::optional<Rational> threshold;
  std::optional<FeasibilityStatus> obstruction_status;
  bool obstruction_replays = false;
  std::vector<DeclaredDivisor> declared;

  run.stage("surface", {"degree", "sectional_genus", "canonical_squared", "minus_one_classes"}, [&] {
    surface = surface_from_json(require(c, "surface", "scenario"), "surface");
    const auto& l = surface->lattice;
    run.set("degree", to_json(surface->degree()));
    run.set("sectional_genus", to_json(surface->sectional_genus()));
    run.set("canonical_squared", to_json(self_intersection(l, l.canonical())));
    if (is_blown_up_plane(l)) run.set("minus_one_classes", standard_minus_one_classes(l).size());
    run.say(surface->name + " has degree " + to_string(surface->degree()) + " and sectional genus " +
            to_string(surface->sectional_genus()) + ".");
  });

  run.stage("curves", {"curves."}, [&] {
    const auto& l = Run::need(surface, "surface").lattice;
    CurveGroups groups;
    const Json& j = require(c, "curves", "scenario");
    if (!j.is_object()) throw config_error("curves", "expected an object of curve groups");
    for (auto it = j.begin(); it != j.end(); ++it) {
      const std::string field = "curves." + it.key();
      if (!it->is_array() || it->empty()) throw config_error(field, "expected a non-empty array of classes");
      auto& g = groups[it.key()];
      for (std::size_t i = 0; i < it->size(); ++i)
        g.push_back(class_from_json((*it)[i], l, field + "[" + std::to_string(i) + "]"));
      run.set("curves." + it.key() + ".count", g.size());
    }
    curves = std::move(groups);
  });

  std::vector<Incidence> incidences;
  run.stage("incidence", {"incidence."}, [&] {
    const auto& src = Run::need(surface, "surface");
    const auto& groups = Run::need(curves, "curves");
    std::vector<std::string> parts;
    for (const auto& name : string_list(c, "incidence_curves", "scenario")) {
      std::vector<Integer> values;
      for (const auto& curve : group(groups, name)) {
        values.push_back(plane_image_incidence(src, curve));
        incidences.push_back({curve, values.back(), name});
      }
      run.set("incidence." + name, uniform_or_list(values));
      parts.push_back(name + ": " + json_text(uniform_or_list(values)));
    }
    if (!parts.empty()) run.say("Double-curve points on plane images of curves: " + join(parts, ", ") + ".");
  });

  run.stage("projection", {"deg_gamma", "gamma_w", "gamma_w_degree", "triple_points", "cusps"}, [&] {
    const auto& src = Run::need(surface, "surface");
    ProjectionMetadata meta;
    std::optional<Integer> override_deg;
    if (auto it = c.find("metadata"); it != c.end()) {
      if (auto t = it->find("triple_points"); t != it->end()) meta.triple_points = integer_from_json(*t, "metadata.triple_points");
      if (auto k = it->find("cusps"); k != it->end()) meta.cusps = integer_from_json(*k, "metadata.cusps");
    }
    if (auto it = c.find("deg_gamma_override"); it != c.end()) {
      override_deg = integer_from_json(*it, "deg_gamma_override");
      run.assume("double-curve degree " + to_string(*override_deg) + " supplied by the config, not computed");
    }
    model = make_projection_model(src, incidences, meta, override_deg);
    run.set("deg_gamma", to_json(model->deg_gamma));
    run.set("gamma_w", to_json(model->gamma_w.coeffs()));
    run.set("gamma_w_degree", to_json(pair(src.lattice, model->gamma_w, src.polarization)));
    if (model->triple_points) run.set("triple_points", to_json(*model->triple_points));
    if (model->cusps) run.set("cusps", to_json(*model->cusps));
    if (!model->deg_gamma_overridden) {
      run.say("A general projection to P^3 is double along a curve of degree " + to_string(model->deg_gamma) + " = (" +
              to_string(model->deg_s) + "-1)(" + to_string(model->deg_s) + "-2)/2 - " + to_string(model->sect_genus) +
              ".");
    } else {
      run.say("The double curve has the supplied degree " + to_string(model->deg_gamma) + ".");
    }
    run.say("Its preimage has class Gamma_W = " + to_string(model->gamma_w) + " with Gamma_W.H = " +
            to_string(Integer(2 * model->deg_gamma)) + ".");
  });

  run.stage("threefold", {"strict_transform", "sing_points", "st_dot.", "kt_dot."}, [&] {
    threefold = make_blowup_threefold(Run::need(model, "projection"));
    const auto& groups = Run::need(curves, "curves");
    run.set("strict_transform", to_string(threefold->strict_transform()));
    if (threefold->sing_points) run.set("sing_points", to_json(*threefold->sing_points));
    std::vector<std::string> parts;
    for (const auto& name : string_list(c, "ray_curves", "scenario")) {
      std::vector<Integer> s_vals, k_vals;
      for (const auto& curve : group(groups, name)) {
        s_vals.push_back(st_dot(*threefold, curve));
        k_vals.push_back(kt_dot(*threefold, curve));
      }
      run.set("st_dot." + name, uniform_or_list(s_vals));
      run.set("kt_dot." + name, uniform_or_list(k_vals));
      parts.push_back(name + " (S.C = " + json_text(uniform_or_list(s_vals)) + ", K.C = " +
                      json_text(uniform_or_list(k_vals)) + ")");
    }
    run.say("On the blow-up T along the double curve, S_T = " + to_string(threefold->strict_transform()) +
            " and K_T = " + to_string(threefold->canonical()) +
            (parts.empty() ? std::string(".") : "; ray numbers " + join(parts, ", ") + "."));
  });

  if (auto it = c.find("declared_effective"); it != c.end()) {
    run.stage("declared", {"declared."}, [&] {
      if (!it->is_array()) throw config_error("declared_effective", "expected an array");
      for (std::size_t i = 0; i < it->size(); ++i)
        declared.push_back(declared_from_json((*it)[i], "declared_effective[" + std::to_string(i) + "]"));
      for (const auto& d : declared)
        run.assume("effective divisor " + d.label + " ~ " + to_string(d.divisor) + " declared, not derived: " +
                   d.assumption);
    });
  }

  if (c.contains("nef_generators")) {
    run.stage("nef", {"nef"}, [&] {
      const auto& t = Run::need(threefold, "threefold");
      nef = is_nef_on(t, union_of(Run::need(curves, "curves"), string_list(c, "nef_generators", "scenario")));
      run.set("nef", *nef);
      run.say(std::string("S_T is ") + (*nef ? "" : "not ") + "nef on the supplied curve generators.");
    });
  }

  if (c.contains("second_ray")) {
    run.stage("second_ray", {"second_ray."}, [&] {
      const auto& t = Run::need(threefold, "threefold");
      const auto& groups = Run::need(curves, "curves");
      const auto& ray = group(groups, get_string(c, "second_ray", "scenario")).front();
      std::vector<DivisorClass> gens;
      if (c.contains("nef_generators")) gens = union_of(groups, string_list(c, "nef_generators", "scenario"));
      second = classify_second_ray(t, ray, declared, gens);
      run.set("second_ray.kind", ray_kind_name(second->kind));
      run.set("second_ray.s_dot", to_json(second->s_dot));
      run.set("second_ray.k_dot", to_json(second->k_dot));
      if (second->witness) run.set("second_ray.witness", second->witness->label);
      for (const auto& a : second->assumptions) run.assume(a);
      run.say("The second extremal ray " + c["second_ray"].get<std::string>() + " is " + ray_kind_name(second->kind) +
              (second->witness ? " (witness " + second->witness->label + ")" : std::string()) + ".");
    });
  }

  if (c.contains("fano_rays")) {
    run.stage("fano", {"fano"}, [&] {
      const auto& t = Run::need(threefold, "threefold");
      fano = fano_check(t, union_of(Run::need(curves, "curves"), string_list(c, "fano_rays", "scenario")));
      run.set("fano", *fano);
      run.say(std::string("-K_T is ") + (*fano ? "" : "not ") + "positive on both extremal rays.");
    });
  }

  run.stage("fibration", {"fibration_numerology", "deg_s_squared", "four_deg_gamma"}, [&] {
    const auto& t = Run::need(threefold, "threefold");
    const bool holds = fibration_numerology(t);
    run.set("fibration_numerology", holds);
    run.set("deg_s_squared", to_json(Integer(t.projection.deg_s * t.projection.deg_s)));
    run.set("four_deg_gamma", to_json(Integer(4 * t.projection.deg_gamma)));
    if (holds) {
      run.say("S_T moves in a pencil: " + to_string(Integer(t.projection.deg_s * t.projection.deg_s)) + " = 4 * " +
              to_string(t.projection.deg_gamma) + ".");
    }
  });

  if (!declared.empty()) {
    run.stage("threshold", {"effective_threshold."}, [&] {
      const auto& t = Run::need(threefold, "threefold");
      for (const auto& d : declared) {
        auto value = effective_threshold(t, d.divisor);
        run.set("effective_threshold." + d.label, value ? Json(to_string(*value)) : Json(nullptr));
        if (d.label == declared.front().label) threshold = value;
        run.say("S_T + t K_T stays in the cone of E_Gamma and " + d.label + " up to t = " +
                (value ? to_string(*value) : std::string("none")) + ".");
      }
    });
  }

  run.stage("kbar", {"kbar."}, [&] {
    const auto& m = Run::need(model, "projection");
    kbar = negativity_certificate(m.deg_s, m.deg_gamma);
    run.set("kbar.verdict", negativity_verdict_name(kbar->verdict));
    run.set("kbar.inequality", kbar->witness_inequality);
    run.say(std::string("Log Kodaira dimension of (P^3, S): ") + negativity_verdict_name(kbar->verdict) + " by " +
            kbar->witness_inequality + ".");
  });

  if (auto it = c.find("obstruction"); it != c.end()) {
    run.stage("obstruction", {"sz.", "obstruction."}, [&] {
      const auto& m = Run::need(model, "projection");
      const Json& o = *it;
      const std::string via = get_string(o, "source_model", "obstruction");
      if (via != kF0LatticeId) throw config_error("obstruction.source_model", "only 'F0' is supported");
      const Integer plane_degree = integer_from_json(require(o, "plane_degree", "obstruction"), "obstruction.plane_degree");
      const Integer mult = integer_from_json(require(o, "gamma_multiplicity", "obstruction"), "obstruction.gamma_multiplicity");
      const SZModel sz = make_sz();
      const DivisorClass s_pull = m.deg_s * sz.from_f0(m.source.polarization);
      const DivisorClass h_pull = sz.from_plane(plane_degree);
      const DivisorClass e_gamma = sz.from_f0(m.gamma_w);
      run.set("sz.s_pullback", to_json(s_pull.coeffs()));
      run.set("sz.h_pullback", to_json(h_pull.coeffs()));
      run.set("sz.e_gamma_total", to_json(e_gamma.coeffs()));
      const FeasibilitySystem system = build_obstruction_system(sz, s_pull, h_pull, e_gamma, mult);
      Json eqs = Json::array();
      for (const auto& eq : system.equations()) eqs.push_back(render_equation(system, eq));
      run.set("obstruction.equations", eqs);
      const FeasibilityCertificate cert = solve_nonneg(system, bound);
      const ReplayResult replayed = replay(system, cert);
      obstruction_status = cert.status();
      obstruction_replays = replayed.ok;
      run.set("obstruction.status", feasibility_status_name(cert.status()));
      run.set("obstruction.replay", replayed.ok);
      run.set("obstruction.bound", bound);
      run.set("obstruction.certificate", to_json(system, cert));
      if (cert.status() == FeasibilityStatus::kInfeasible) {
        run.set("obstruction.final_line", render_solved(system, cert.chain().back().result));
        run.set("obstruction.contradiction", contradiction_kind_name(cert.contradiction()));
        run.say("The restriction equations on S_Z (" + join(eqs.get<std::vector<std::string>>(), "; ") +
                ") have no nonnegative integer solution: the derivation ends in " +
                render_solved(system, cert.chain().back().result) +
                ", so the main theorem is reproduced as an infeasibility certificate.");
      } else {
        run.say(std::string("The restriction equations on S_Z are ") + feasibility_status_name(cert.status()) +
                " with search bound " + std::to_string(bound) + "; no obstruction is certified.");
      }
      if (!replayed.ok) run.say("Certificate replay failed: " + replayed.message);
    });
  }

  const bool negative = kbar && kbar->verdict == NegativityVerdict::kNegativeCertified;
  std::string verdict = kUndetermined;
  if (c.contains("obstruction")) {
    if (negative && obstruction_status == FeasibilityStatus::kInfeasible && obstruction_replays) verdict = kNotCE;
  } else if (second && negative) {
    if (second->kind == RayKind::kFibration) {
      verdict = "CE_TO_PLANE_VIA_FIBRATION";
    } else if (second->kind == RayKind::kBirationalContractionFano && nef.value_or(false) && fano.value_or(false) &&
               threshold && *threshold > 0) {
      verdict = "CE_TO_PLANE_VIA_GOOD_MODEL";
    }
  }
  run.set("verdict", verdict);
  run.say("Verdict: " + verdict + ".");
}

void run_family(const Scenario& s, long long bound, Run& run) {
  const Json& c = s.config;
  std::optional<Json> general, special;
  std::optional<bool> dominant;

  auto fiber = [&](const std::string& which, std::optional<Json>& out) {
    run.stage(which, {which + "."}, [&] {
      const Json& f = require(c, which, "scenario");
      if (f.contains("scenario")) {
        const std::string ref = get_string(f, "scenario", which);
        const Scenario sub = builtin_scenario(ref);
        if (sub.kind != "projection") throw config_error(which + ".scenario", "must name a projection scenario");
        const ScenarioReport r = run_scenario(sub, bound);
        out = r.computed.at("verdict");
        run.set(which + ".scenario", ref);
        run.set(which + ".overall", r.overall ? "PASS" : "FAIL");
        if (auto k = r.computed.find("kbar.verdict"); k != r.computed.end()) run.set(which + ".kbar", k->second);
        run.say("The " + (which == "general_fiber" ? std::string("general") : std::string("special")) +
                " member is scenario " + ref + " with verdict " + out->get<std::string>() + ".");
      } else {
        const Json& m = require(f, "monoid", which);
        const Integer d = integer_from_json(require(m, "degree", which + ".monoid"), which + ".monoid.degree");
        const Integer mult =
            integer_from_json(require(m, "multiplicity", which + ".monoid"), which + ".monoid.multiplicity");
        const bool ok = monoid_ce_predicate(d, mult);
        run.set(which + ".monoid", ok);
        out = ok ? Json("CE_TO_PLANE_VIA_MONOID_PROJECTION") : Json(kUndetermined);
        run.say("The " + (which == "general_fiber" ? std::string("general") : std::string("special")) +
                " member is a degree " + to_string(d) + " surface with a point of multiplicity " + to_string(mult) +
                (ok ? ", so projection from that point is birational onto the plane." : ", which is not a monoid."));
      }
      run.set(which + ".verdict", *out);
    });
  };
  fiber("general_fiber", general);
  fiber("special_fiber", special);

  if (auto it = c.find("linear_systems"); it != c.end()) {
    run.stage("linear_systems", {"linear_system."}, [&] {
      for (auto ls = it->begin(); ls != it->end(); ++ls) {
        const std::string f = "linear_systems." + ls.key();
        const Integer deg = integer_from_json(require(*ls, "degree", f), f + ".degree");
        const IntVector mults = int_vector_from_json(require(*ls, "multiplicities", f), f + ".multiplicities");
        run.set("linear_system." + ls.key(), to_json(plane_linear_system_dim(deg, mults)));
      }
    });
  }

  if (auto it = c.find("dimension_count"); it != c.end()) {
    run.stage("dimension_count", {"dimension_count.", "grassmannian_dim"}, [&] {
      const Json& d = *it;
      const Integer k = integer_from_json(require(d, "k", "dimension_count"), "dimension_count.k");
      const Json& sys = require(d, "ambient_system", "dimension_count");
      const Integer n = plane_linear_system_dim(
          integer_from_json(require(sys, "degree", "dimension_count.ambient_system"), "dimension_count.ambient_system.degree"),
          int_vector_from_json(require(sys, "multiplicities", "dimension_count.ambient_system"),
                               "dimension_count.ambient_system.multiplicities"));
      const IntVector dims = int_vector_from_json(require(d, "param_space_dims", "dimension_count"),
                                                  "dimension_count.param_space_dims");
      const DimensionCount count = dominance_count(dims, k, n);
      dominant = count.dominant_possible;
      run.set("dimension_count.n", to_json(count.n));
      run.set("dimension_count.lhs", to_json(count.lhs));
      run.set("dimension_count.rhs", to_json(count.rhs));
      run.set("dimension_count.dominant_possible", count.dominant_possible);
      run.set("grassmannian_dim", to_json(grassmannian_dim(k, n)));
      std::vector<std::string> terms;
      for (const auto& x : dims) terms.push_back(to_string(x));
      run.say("Parameter count: " + join(terms, " + ") + " = " + to_string(count.lhs) + (count.dominant_possible ? " >= " : " < ") +
              to_string(count.rhs) + " = dim G(" + to_string(k) + ", " + to_string(n) + ").");
      if (auto a = d.find("assumption"); a != d.end() && a->is_string()) run.assume(a->get<std::string>());
    });
  }

  std::string verdict = kUndetermined;
  if (general && special) {
    const bool g_ce = is_ce_verdict(*general), s_ce = is_ce_verdict(*special);
    if (*general == kNotCE && s_ce) verdict = "CE_NOT_OPEN";
    if (g_ce && *special == kNotCE && dominant.value_or(!c.contains("dimension_count"))) verdict = "CE_NOT_CLOSED";
  }
  run.set("verdict", verdict);
  run.say("Verdict: " + verdict + ".");
}

}  // namespace

std::vector<std::string> list_scenarios() {
  std::vector<std::string> names;
  for (const auto& [name, text] : detail::builtin_scenario_sources()) names.emplace_back(name);
  return names;
}

Scenario builtin_scenario(const std::string& name) {
  for (const auto& [n, text] : detail::builtin_scenario_sources())
    if (n == name) return scenario_from_text(std::string(text), "builtin:" + name);
  throw Error(ErrorCode::kConfiguration, "no built-in scenario named '" + name + "'");
}

Scenario scenario_from_json(const Json& config, const std::string& origin) {
  if (!config.is_object()) throw config_error("scenario", "expected an object");
  Scenario s;
  s.name = get_string(config, "name", "scenario");
  s.kind = get_string(config, "kind", "scenario");
  if (s.kind != "projection" && s.kind != "family") throw config_error("kind", "'" + s.kind + "' is not projection or family");
  const Json& expected = require(config, "expected", "scenario");
  if (!expected.is_object()) throw config_error("expected", "expected an object");
  for (auto it = expected.begin(); it != expected.end(); ++it) {
    const std::string f = "expected." + it.key();
    require(*it, "value", f);
    if (get_string(*it, "source", f).empty()) throw config_error(f + ".source", "provenance must not be empty");
  }
  s.origin = origin;
  s.config = config;
  return s;
}

Scenario scenario_from_text(const std::string& text, const std::string& origin) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::kParse, origin + ": " + e.what());
  }
  return scenario_from_json(j, origin);
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot read '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return scenario_from_text(buf.str(), path);
}

ScenarioReport run_scenario(const Scenario& scenario, long long bound) {
  ScenarioReport report;
  report.name = scenario.name;
  report.kind = scenario.kind;
  Run run(report);
  if (bound < 0) {
    report.computed["error.bound"] = Json{{"code", "OUT_OF_RANGE"}, {"message", "search bound must be nonnegative"}};
  } else if (scenario.kind == "family") {
    run_family(scenario, bound, run);
  } else {
    run_projection(scenario, bound, run);
  }

  for (auto it = scenario.config["expected"].begin(); it != scenario.config["expected"].end(); ++it)
    report.expected[it.key()] = ExpectedValue{(*it)["value"], (*it)["source"].get<std::string>()};

  for (const auto& [key, exp] : report.expected) {
    auto got = report.computed.find(key);
    KeyVerdict v;
    if (got == report.computed.end()) {
      v.message = run.missing_reason(key);
    } else if (got->second == exp.value) {
      v.pass = true;
    } else {
      v.message = "computed " + got->second.dump() + ", expected " + exp.value.dump();
    }
    report.verdicts[key] = v;
  }
  for (const auto& [key, value] : report.computed) {
    if (key.rfind("error.", 0) == 0) report.verdicts[key] = KeyVerdict{false, value["message"].get<std::string>()};
  }
  report.overall = std::all_of(report.verdicts.begin(), report.verdicts.end(),
                               [](const auto& kv) { return kv.second.pass; });
  return report;
}

Json report_to_json(const ScenarioReport& r) {
  Json expected = Json::object(), verdicts = Json::object(), computed = Json::object();
  for (const auto& [k, v] : r.computed) computed[k] = v;
  for (const auto& [k, e] : r.expected) expected[k] = Json{{"value", e.value}, {"source", e.source}};
  for (const auto& [k, v] : r.verdicts) {
    verdicts[k] = Json{{"status", v.pass ? "PASS" : "FAIL"}};
    if (!v.message.empty()) verdicts[k]["message"] = v.message;
  }
  return Json{{"name", r.name},          {"kind", r.kind},         {"computed", computed},
              {"expected", expected},    {"verdicts", verdicts},   {"assumptions", r.assumptions},
              {"narrative", r.narrative}, {"overall", r.overall ? "PASS" : "FAIL"}};
}

std::string report_to_markdown(const ScenarioReport& r) {
  std::ostringstream out;
  out << "# Scenario " << r.name << "\n\n";
  out << "Overall: **" << (r.overall ? "PASS" : "FAIL") << "**\n\n";
  out << "## Derivation\n\n";
  for (const auto& line : r.narrative) out << "- " << line << "\n";
  out << "\n## Checks\n\n| key | computed | expected | status | source |\n|---|---|---|---|---|\n";
  std::set<std::string> keys;
  for (const auto& [k, v] : r.verdicts) keys.insert(k);
  for (const auto& k : keys) {
    auto c = r.computed.find(k);
    auto e = r.expected.find(k);
    const auto& v = r.verdicts.at(k);
    out << "| " << k << " | " << (c == r.computed.end() ? "-" : json_text(c->second)) << " | "
        << (e == r.expected.end() ? "-" : json_text(e->second.value)) << " | "
        << (v.pass ? "PASS" : "FAIL: " + v.message) << " | " << (e == r.expected.end() ? "" : e->second.source)
        << " |\n";
  }
  if (!r.assumptions.empty()) {
    out << "\n## Assumptions\n\n";
    for (const auto& a : r.assumptions) out << "- " << a << "\n";
  }
  if (auto cert = r.computed.find("obstruction.certificate"); cert != r.computed.end()) {
    out << "\n## Certificate\n\n```\n" << cert->second["transcript"].get<std::string>() << "```\n";
  }
  return out.str();
}

}  // namespace cremona
