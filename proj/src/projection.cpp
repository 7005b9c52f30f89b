#include "cremona/projection.hpp"

#include "cremona/error.hpp"
#include "linalg.hpp"

namespace cremona {

Integer double_curve_degree(const Integer& d, const Integer& g) {
  if (d < 3) throw Error(ErrorCode::kModel, "surface of degree " + d.str() + " has no double curve in P^3");
  if (g < 0) throw Error(ErrorCode::kModel, "negative sectional genus " + g.str());
  const Integer result = (d - 1) * (d - 2) / 2 - g;
  if (result < 0) {
    throw Error(ErrorCode::kModel, "sectional genus " + g.str() + " exceeds the plane-curve bound for degree " +
                                       d.str() + "; not a general projection");
  }
  return result;
}

Integer plane_image_incidence(const PolarizedSurface& source, const DivisorClass& curve) {
  const Integer delta = pair(source.lattice, curve, source.polarization);
  if (delta != 1 && delta != 2) {
    throw Error(ErrorCode::kNotPlanar, "curve " + to_string(curve) + " has degree " + delta.str() +
                                           "; the incidence count needs a line or a conic");
  }
  return delta * (source.degree() - delta - 1) + self_intersection(source.lattice, curve);
}

Integer plane_image_incidence(const ProjectionModel& model, const DivisorClass& curve) {
  return plane_image_incidence(model.source, curve);
}

DivisorClass double_point_class(const PolarizedSurface& source, const Integer& deg_gamma,
                                const std::vector<Incidence>& incidences) {
  const auto& lattice = source.lattice;
  std::vector<IntVector> rows;
  std::vector<Rational> rhs;
  // Gamma_W . C = (G C) . x
  auto add = [&](const DivisorClass& c, const Integer& value) {
    lattice.check_member(c);
    rows.push_back(lattice.gram() * c.coeffs());
    rhs.emplace_back(value);
  };
  add(source.polarization, 2 * deg_gamma);
  for (const auto& inc : incidences) add(inc.curve, inc.value);

  const auto res = detail::solve_linear(detail::to_rational(rows), rhs);
  switch (res.status) {
    case detail::SolveStatus::kInconsistent:
      throw Error(ErrorCode::kContradiction, "incidence data for '" + source.name + "' are inconsistent");
    case detail::SolveStatus::kUnderdetermined:
      throw Error(ErrorCode::kRank, "incidence data for '" + source.name + "' have rank " +
                                        std::to_string(res.rank) + " < " + std::to_string(lattice.rank()));
    case detail::SolveStatus::kUnique:
      break;
  }
  IntVector coeffs;
  for (const auto& x : res.solution) {
    if (boost::multiprecision::denominator(x) != 1) {
      throw Error(ErrorCode::kContradiction, "incidence data for '" + source.name + "' force a non-integral class");
    }
    coeffs.push_back(boost::multiprecision::numerator(x));
  }
  return lattice.make_class(std::move(coeffs));
}

ProjectionModel make_projection_model(PolarizedSurface source, const std::vector<Incidence>& incidences,
                                      ProjectionMetadata metadata, std::optional<Integer> deg_gamma_override) {
  ProjectionModel m{std::move(source), 0, 0, 0, DivisorClass(), metadata.triple_points, metadata.cusps};
  m.deg_s = m.source.degree();
  m.sect_genus = m.source.sectional_genus();
  if (deg_gamma_override) {
    if (*deg_gamma_override < 0) throw Error(ErrorCode::kModel, "negative double curve degree");
    m.deg_gamma = *deg_gamma_override;
    m.deg_gamma_overridden = true;
  } else {
    m.deg_gamma = double_curve_degree(m.deg_s, m.sect_genus);
  }
  m.gamma_w = double_point_class(m.source, m.deg_gamma, incidences);
  return m;
}

}  // namespace cremona
