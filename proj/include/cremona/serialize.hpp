#pragma once

#include <string>

#include "json.hpp"

#include "cremona/family.hpp"
#include "cremona/lattice.hpp"
#include "cremona/log_kodaira.hpp"
#include "cremona/obstruction.hpp"
#include "cremona/projection.hpp"
#include "cremona/threefold.hpp"

namespace cremona {

using Json = nlohmann::json;

// Integers are written as JSON numbers when they fit in 64 bits and as
// decimal strings otherwise; both forms are accepted on input.
Json to_json(const Integer& v);
Json to_json(const IntVector& v);
Integer integer_from_json(const Json& j, const std::string& field);
IntVector int_vector_from_json(const Json& j, const std::string& field);

/// {id, basis, gram, canonical, effectivity[, generators]}
Json to_json(const IntersectionLattice& lattice);
IntersectionLattice lattice_from_json(const Json& j, const std::string& field = "lattice");

/// {lattice, coeffs}
Json to_json(const DivisorClass& d);
DivisorClass class_from_json(const Json& j, const IntersectionLattice& lattice, const std::string& field);

/// Lattice fields plus {polarization, name}.
Json to_json(const PolarizedSurface& s);
PolarizedSurface surface_from_json(const Json& j, const std::string& field = "surface");

/// {surface, deg_s, sect_genus, deg_gamma, gamma_w[, triple_points][, cusps]}
Json to_json(const ProjectionModel& p);

/// {ray, s_dot, k_dot, kind[, witness], assumptions}
Json to_json(const RayVerdict& v);

/// {deg_s, deg_gamma, verdict, inequality}
Json to_json(const NegativityCertificate& c);

/// {unknowns, equations: [{coeffs, constant}]}
Json to_json(const FeasibilitySystem& s);
FeasibilitySystem system_from_json(const Json& j, const std::string& field = "system");

/// {status[, witness][, chain, contradiction, final], transcript}
Json to_json(const FeasibilitySystem& s, const FeasibilityCertificate& c);

/// {k, n, param_space_dims, lhs, rhs, dominant_possible}
Json to_json(const DimensionCount& c);

/// Field lookup that throws kParse naming the missing field.
const Json& require(const Json& j, const std::string& key, const std::string& field);

}  // namespace cremona
