#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cremona/surfaces.hpp"

namespace cremona {

/// Number of points in which the double curve meets the image of a curve,
/// pinned as a pairing constraint on the double-point class.
struct Incidence {
  DivisorClass curve;
  Integer value;
  std::string label;
};

struct ProjectionMetadata {
  std::optional<Integer> triple_points;
  std::optional<Integer> cusps;
};

/// A general projection of a polarized surface to P^3 and its double curve.
struct ProjectionModel {
  PolarizedSurface source;
  Integer deg_s;
  Integer sect_genus;
  Integer deg_gamma;
  DivisorClass gamma_w;
  std::optional<Integer> triple_points;
  std::optional<Integer> cusps;
  /// deg_gamma was supplied by the caller instead of the genus formula.
  bool deg_gamma_overridden = false;
};

/// Degree of the double curve of a general projection of a surface of
/// degree d and sectional genus g: (d-1)(d-2)/2 - g.
Integer double_curve_degree(const Integer& d, const Integer& g);

/// Points of the double curve on the image of C, valid only when the image
/// is a line or a conic (delta = C.H in {1,2}): the residual curve in a
/// plane through pi(C) has degree deg_s - delta and meets pi(C) in
/// delta (deg_s - delta) points, of which delta + C.(H - C) come from
/// the residual on the source. Throws kNotPlanar otherwise.
Integer plane_image_incidence(const PolarizedSurface& source, const DivisorClass& curve);
Integer plane_image_incidence(const ProjectionModel& model, const DivisorClass& curve);

/// Recovers the double-point class from its pairings with the supplied
/// curves together with Gamma_W.H = 2 deg_gamma.
/// Throws kContradiction for inconsistent or non-integral data and kRank
/// when the data do not pin a unique class.
DivisorClass double_point_class(const PolarizedSurface& source, const Integer& deg_gamma,
                                const std::vector<Incidence>& incidences);

ProjectionModel make_projection_model(PolarizedSurface source, const std::vector<Incidence>& incidences,
                                      ProjectionMetadata metadata = {},
                                      std::optional<Integer> deg_gamma_override = std::nullopt);

}  // namespace cremona
