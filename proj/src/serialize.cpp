#include "cremona/serialize.hpp"

#include <algorithm>

#include "cremona/error.hpp"

namespace cremona {

namespace {

Error parse_error(const std::string& field, const std::string& what) {
  return Error(ErrorCode::kParse, "field '" + field + "': " + what);
}

std::string string_from_json(const Json& j, const std::string& field) {
  if (!j.is_string()) throw parse_error(field, "expected a string");
  return j.get<std::string>();
}

IntMatrix matrix_from_json(const Json& j, const std::string& field) {
  if (!j.is_array()) throw parse_error(field, "expected an array of rows");
  std::vector<IntVector> rows;
  for (std::size_t r = 0; r < j.size(); ++r)
    rows.push_back(int_vector_from_json(j[r], field + "[" + std::to_string(r) + "]"));
  for (std::size_t r = 0; r < rows.size(); ++r)
    if (rows[r].size() != rows.front().size()) throw parse_error(field, "ragged rows");
  return IntMatrix::from_rows(rows);
}

Json matrix_to_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(to_json(m.row(r)));
  return rows;
}

Json equation_to_json(const LinearEquation& eq) {
  return Json{{"coeffs", to_json(eq.coeffs)}, {"constant", to_json(eq.constant)}};
}

}  // namespace

const Json& require(const Json& j, const std::string& key, const std::string& field) {
  if (!j.is_object()) throw parse_error(field, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw parse_error(field + "." + key, "missing");
  return *it;
}

Json to_json(const Integer& v) {
  if (auto small = to_int64(v)) return *small;
  return v.str();
}

Json to_json(const IntVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

Integer integer_from_json(const Json& j, const std::string& field) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Integer(j.get<std::uint64_t>());
    return Integer(j.get<std::int64_t>());
  }
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    const std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (s.size() == start || s.find_first_not_of("0123456789", start) != std::string::npos) {
      throw parse_error(field, "'" + s + "' is not an integer");
    }
    return Integer(s[0] == '+' ? s.substr(1) : s);
  }
  throw parse_error(field, "expected an integer");
}

IntVector int_vector_from_json(const Json& j, const std::string& field) {
  if (!j.is_array()) throw parse_error(field, "expected an array of integers");
  IntVector out;
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(integer_from_json(j[i], field + "[" + std::to_string(i) + "]"));
  return out;
}

Json to_json(const IntersectionLattice& lattice) {
  Json j{{"id", lattice.id()},
         {"basis", lattice.labels()},
         {"gram", matrix_to_json(lattice.gram())},
         {"canonical", to_json(lattice.canonical().coeffs())},
         {"effectivity", effectivity_rule_name(lattice.effectivity())}};
  if (!lattice.generators().empty()) {
    Json gens = Json::array();
    for (const auto& g : lattice.generators()) gens.push_back(to_json(g));
    j["generators"] = gens;
  }
  return j;
}

IntersectionLattice lattice_from_json(const Json& j, const std::string& field) {
  const std::string id = string_from_json(require(j, "id", field), field + ".id");
  const Json& basis = require(j, "basis", field);
  if (!basis.is_array()) throw parse_error(field + ".basis", "expected an array of names");
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < basis.size(); ++i)
    labels.push_back(string_from_json(basis[i], field + ".basis[" + std::to_string(i) + "]"));
  IntMatrix gram = matrix_from_json(require(j, "gram", field), field + ".gram");
  IntVector canonical = int_vector_from_json(require(j, "canonical", field), field + ".canonical");
  EffectivityRule rule = EffectivityRule::kUndeclared;
  if (auto it = j.find("effectivity"); it != j.end()) {
    try {
      rule = parse_effectivity_rule(string_from_json(*it, field + ".effectivity"));
    } catch (const Error& e) {
      throw parse_error(field + ".effectivity", e.what());
    }
  }
  std::vector<IntVector> generators;
  if (auto it = j.find("generators"); it != j.end()) {
    if (!it->is_array()) throw parse_error(field + ".generators", "expected an array of classes");
    for (std::size_t i = 0; i < it->size(); ++i)
      generators.push_back(int_vector_from_json((*it)[i], field + ".generators[" + std::to_string(i) + "]"));
  }
  try {
    return IntersectionLattice(id, std::move(labels), std::move(gram), std::move(canonical), rule,
                               std::move(generators));
  } catch (const Error& e) {
    throw parse_error(field, e.what());
  }
}

Json to_json(const DivisorClass& d) { return Json{{"lattice", d.lattice_id()}, {"coeffs", to_json(d.coeffs())}}; }

DivisorClass class_from_json(const Json& j, const IntersectionLattice& lattice, const std::string& field) {
  IntVector coeffs;
  if (j.is_array()) {
    coeffs = int_vector_from_json(j, field);
  } else {
    if (auto it = j.find("lattice"); it != j.end() && string_from_json(*it, field + ".lattice") != lattice.id()) {
      throw Error(ErrorCode::kLatticeMismatch, "field '" + field + "': class on lattice '" + it->get<std::string>() +
                                                   "' where '" + lattice.id() + "' is expected");
    }
    coeffs = int_vector_from_json(require(j, "coeffs", field), field + ".coeffs");
  }
  if (coeffs.size() != lattice.rank()) {
    throw parse_error(field, "has " + std::to_string(coeffs.size()) + " coefficients, lattice '" + lattice.id() +
                                 "' has rank " + std::to_string(lattice.rank()));
  }
  return lattice.make_class(std::move(coeffs));
}

Json to_json(const PolarizedSurface& s) {
  Json j = to_json(s.lattice);
  j["polarization"] = to_json(s.polarization.coeffs());
  j["name"] = s.name;
  return j;
}

PolarizedSurface surface_from_json(const Json& j, const std::string& field) {
  IntersectionLattice lattice = lattice_from_json(j, field);
  DivisorClass h = class_from_json(require(j, "polarization", field), lattice, field + ".polarization");
  std::string name = string_from_json(require(j, "name", field), field + ".name");
  return make_polarized_surface(std::move(lattice), std::move(h), std::move(name));
}

Json to_json(const ProjectionModel& p) {
  Json j{{"surface", to_json(p.source)},
         {"deg_s", to_json(p.deg_s)},
         {"sect_genus", to_json(p.sect_genus)},
         {"deg_gamma", to_json(p.deg_gamma)},
         {"gamma_w", to_json(p.gamma_w.coeffs())}};
  if (p.triple_points) j["triple_points"] = to_json(*p.triple_points);
  if (p.cusps) j["cusps"] = to_json(*p.cusps);
  return j;
}

Json to_json(const RayVerdict& v) {
  Json j{{"ray", to_json(v.ray_class.coeffs())},
         {"s_dot", to_json(v.s_dot)},
         {"k_dot", to_json(v.k_dot)},
         {"kind", ray_kind_name(v.kind)},
         {"assumptions", v.assumptions}};
  if (v.witness) {
    j["witness"] = Json{{"label", v.witness->label},
                        {"h", to_json(v.witness->divisor.h)},
                        {"e", to_json(v.witness->divisor.e)}};
  }
  return j;
}

Json to_json(const NegativityCertificate& c) {
  return Json{{"deg_s", to_json(c.deg_s)},
              {"deg_gamma", to_json(c.deg_gamma)},
              {"verdict", negativity_verdict_name(c.verdict)},
              {"inequality", c.witness_inequality}};
}

Json to_json(const FeasibilitySystem& s) {
  Json eqs = Json::array();
  for (const auto& eq : s.equations()) eqs.push_back(equation_to_json(eq));
  return Json{{"unknowns", s.unknowns()}, {"equations", eqs}};
}

FeasibilitySystem system_from_json(const Json& j, const std::string& field) {
  const Json& unknowns = require(j, "unknowns", field);
  if (!unknowns.is_array()) throw parse_error(field + ".unknowns", "expected an array of names");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < unknowns.size(); ++i)
    names.push_back(string_from_json(unknowns[i], field + ".unknowns[" + std::to_string(i) + "]"));
  const Json& eqs = require(j, "equations", field);
  if (!eqs.is_array()) throw parse_error(field + ".equations", "expected an array");
  std::vector<LinearEquation> equations;
  for (std::size_t i = 0; i < eqs.size(); ++i) {
    const std::string f = field + ".equations[" + std::to_string(i) + "]";
    const Json& coeffs = require(eqs[i], "coeffs", f);
    LinearEquation eq;
    if (coeffs.is_object()) {
      // {"name": coefficient, ...}
      eq.coeffs.assign(names.size(), Integer(0));
      for (auto it = coeffs.begin(); it != coeffs.end(); ++it) {
        auto pos = std::find(names.begin(), names.end(), it.key());
        if (pos == names.end()) throw parse_error(f + ".coeffs." + it.key(), "undeclared unknown");
        eq.coeffs[static_cast<std::size_t>(pos - names.begin())] = integer_from_json(it.value(), f + ".coeffs." + it.key());
      }
    } else {
      eq.coeffs = int_vector_from_json(coeffs, f + ".coeffs");
      if (eq.coeffs.size() != names.size()) throw parse_error(f + ".coeffs", "length does not match unknowns");
    }
    eq.constant = integer_from_json(require(eqs[i], "constant", f), f + ".constant");
    equations.push_back(std::move(eq));
  }
  return FeasibilitySystem(std::move(names), std::move(equations));
}

Json to_json(const FeasibilitySystem& s, const FeasibilityCertificate& c) {
  Json j{{"status", feasibility_status_name(c.status())}, {"transcript", render_transcript(s, c)}};
  switch (c.status()) {
    case FeasibilityStatus::kFeasible: {
      Json w = Json::object();
      for (std::size_t i = 0; i < s.unknown_count(); ++i) w[s.unknowns()[i]] = to_json(c.witness()[i]);
      j["witness"] = w;
      break;
    }
    case FeasibilityStatus::kUnknownUpToBound:
      j["bound"] = to_json(c.bound());
      break;
    case FeasibilityStatus::kInfeasible: {
      Json chain = Json::array();
      for (const auto& step : c.chain()) {
        Json terms = Json::array();
        for (const auto& [idx, mult] : step.terms) terms.push_back(Json::array({idx, to_json(mult)}));
        chain.push_back(Json{{"kind", step.kind == DerivationStep::Kind::kForceZero ? "force-zero" : "combination"},
                             {"terms", terms},
                             {"equation", equation_to_json(step.result)},
                             {"text", render_equation(s, step.result)}});
      }
      j["chain"] = chain;
      j["contradiction"] = contradiction_kind_name(c.contradiction());
      j["final"] = render_solved(s, c.chain().back().result);
      break;
    }
  }
  return j;
}

Json to_json(const DimensionCount& c) {
  Json dims = Json::array();
  for (const auto& d : c.param_space_dims) dims.push_back(to_json(d));
  return Json{{"k", to_json(c.k)},
              {"n", to_json(c.n)},
              {"param_space_dims", dims},
              {"lhs", to_json(c.lhs)},
              {"rhs", to_json(c.rhs)},
              {"dominant_possible", c.dominant_possible}};
}

}  // namespace cremona
