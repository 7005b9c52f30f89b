#include "cremona/threefold.hpp"

#include <algorithm>

#include "cremona/error.hpp"

namespace cremona {

std::string to_string(const ThreefoldClass& d) {
  auto term = [](const Integer& c, const char* name) { return (c == 1 ? std::string() : c.str()) + name; };
  if (d.e == 0) return term(d.h, "H");
  const Integer mag = abs(d.e);
  return (d.h == 0 ? std::string() : term(d.h, "H") + (d.e < 0 ? " - " : " + ")) +
         (d.h == 0 && d.e < 0 ? "-" : "") + term(mag, "E");
}

Integer BlowupThreefold::dot(const ThreefoldClass& divisor, const DivisorClass& curve) const {
  const auto& l = surface_lattice();
  return divisor.h * pair(l, curve, h_restrict) + divisor.e * pair(l, curve, e_restrict);
}

BlowupThreefold make_blowup_threefold(ProjectionModel projection) {
  BlowupThreefold t{std::move(projection), DivisorClass(), DivisorClass(), std::nullopt};
  t.h_restrict = t.projection.source.polarization;
  t.e_restrict = t.projection.gamma_w;
  t.sing_points = t.projection.triple_points;
  return t;
}

Integer st_dot(const BlowupThreefold& t, const DivisorClass& curve) {
  return t.dot(t.strict_transform(), curve);
}

Integer kt_dot(const BlowupThreefold& t, const DivisorClass& curve) { return t.dot(t.canonical(), curve); }

bool is_nef_on(const BlowupThreefold& t, const std::vector<DivisorClass>& generators) {
  if (generators.empty()) throw Error(ErrorCode::kConfiguration, "nefness needs at least one curve generator");
  return std::all_of(generators.begin(), generators.end(),
                     [&](const DivisorClass& c) { return st_dot(t, c) >= 0; });
}

bool fibration_numerology(const BlowupThreefold& t) {
  return t.projection.deg_s * t.projection.deg_s == 4 * t.projection.deg_gamma;
}

const char* ray_kind_name(RayKind kind) {
  switch (kind) {
    case RayKind::kFibration: return "FIBRATION";
    case RayKind::kBirationalContractionFano: return "BIRATIONAL_CONTRACTION_FANO";
    case RayKind::kFlopWallCanonicalFano: return "FLOP_WALL_CANONICAL_FANO";
    case RayKind::kUnclassified: return "UNCLASSIFIED";
  }
  return "UNCLASSIFIED";
}

RayVerdict classify_second_ray(const BlowupThreefold& t, const DivisorClass& ray,
                               const std::vector<DeclaredDivisor>& declared_effective,
                               const std::vector<DivisorClass>& cone_generators) {
  RayVerdict v;
  v.ray_class = ray;
  v.s_dot = st_dot(t, ray);
  v.k_dot = kt_dot(t, ray);
  v.assumptions.push_back("second extremal ray supplied by the caller, not computed");

  if (v.s_dot < 0 && v.k_dot == 0) {
    v.kind = RayKind::kFlopWallCanonicalFano;
    return v;
  }
  if (v.s_dot == 0 && v.k_dot < 0) {
    for (const auto& d : declared_effective) {
      if (t.dot(d.divisor, ray) < 0) {
        v.kind = RayKind::kBirationalContractionFano;
        v.witness = d;
        v.assumptions.push_back("effective divisor " + d.label + " ~ " + to_string(d.divisor) +
                                " declared, not derived" + (d.assumption.empty() ? "" : ": " + d.assumption));
        return v;
      }
    }
    const bool nef = cone_generators.empty() || is_nef_on(t, cone_generators);
    if (nef && fibration_numerology(t)) {
      v.kind = RayKind::kFibration;
      return v;
    }
  }
  v.kind = RayKind::kUnclassified;
  return v;
}

bool fano_check(const BlowupThreefold& t, const std::vector<DivisorClass>& rays) {
  if (rays.empty()) throw Error(ErrorCode::kConfiguration, "Fano check needs the second extremal ray");
  return std::all_of(rays.begin(), rays.end(), [&](const DivisorClass& c) { return -kt_dot(t, c) > 0; });
}

std::optional<Rational> effective_threshold(const BlowupThreefold& t, const ThreefoldClass& declared) {
  if (declared.h <= 0) {
    throw Error(ErrorCode::kConfiguration, "declared divisor " + to_string(declared) +
                                               " must have positive H-coefficient to bound the cone");
  }
  // (x, y) lies in cone(E, D) iff x >= 0 and D.h * y - D.e * x >= 0.
  // With (x, y) = S + t K each condition reads alpha t >= beta.
  const ThreefoldClass s = t.strict_transform();
  const ThreefoldClass k = t.canonical();
  const std::pair<Integer, Integer> conditions[] = {
      {k.h, -s.h},
      {declared.h * k.e - declared.e * k.h, -(declared.h * s.e - declared.e * s.h)},
  };
  std::optional<Rational> upper;
  for (const auto& [alpha, beta] : conditions) {
    if (alpha == 0) {
      if (beta > 0) return std::nullopt;
    } else if (alpha > 0) {
      if (beta > 0) return std::nullopt;  // t = 0 already violates it
    } else {
      const Rational bound = Rational(beta) / Rational(alpha);
      if (bound < 0) return std::nullopt;
      if (!upper || bound < *upper) upper = bound;
    }
  }
  return upper;
}

}  // namespace cremona
