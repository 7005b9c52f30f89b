#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cremona/projection.hpp"

namespace cremona {

/// Divisor class h * nu^*O(1) + e * E_Gamma on the blow-up T of P^3 along
/// the double curve. Pic(T) has rank two, so this is every class.
struct ThreefoldClass {
  Integer h;
  Integer e;
  bool operator==(const ThreefoldClass&) const = default;
};

std::string to_string(const ThreefoldClass& d);

/// The blow-up T -> P^3 along the double curve, recorded only through the
/// restrictions of nu^*O(1) and E_Gamma to the strict transform S_T
/// (isomorphic to the source surface).
struct BlowupThreefold {
  ProjectionModel projection;
  DivisorClass h_restrict;
  DivisorClass e_restrict;
  /// Points of type 1/2(1,-1,1), one over each triple point of the curve.
  std::optional<Integer> sing_points;

  /// S_T = deg_s H - 2 E_Gamma.
  ThreefoldClass strict_transform() const { return {projection.deg_s, -2}; }
  /// K_T = -4 H + E_Gamma.
  ThreefoldClass canonical() const { return {-4, 1}; }

  const IntersectionLattice& surface_lattice() const { return projection.source.lattice; }

  /// Intersection number of a threefold divisor with a curve on S_T.
  Integer dot(const ThreefoldClass& divisor, const DivisorClass& curve) const;
};

BlowupThreefold make_blowup_threefold(ProjectionModel projection);

Integer st_dot(const BlowupThreefold& t, const DivisorClass& curve);
Integer kt_dot(const BlowupThreefold& t, const DivisorClass& curve);

/// S_T non-negative on every generator. kConfiguration on an empty list.
bool is_nef_on(const BlowupThreefold& t, const std::vector<DivisorClass>& generators);

/// deg_s^2 = 4 deg_gamma, i.e. S_T^2 . nu^*H = 0: S_T moves in a pencil.
bool fibration_numerology(const BlowupThreefold& t);

enum class RayKind {
  kFibration,
  kBirationalContractionFano,
  kFlopWallCanonicalFano,
  kUnclassified,
};

const char* ray_kind_name(RayKind kind);

/// A divisor on T the caller asserts to be effective.
struct DeclaredDivisor {
  ThreefoldClass divisor;
  std::string label;
  std::string assumption;
};

struct RayVerdict {
  DivisorClass ray_class;
  Integer s_dot;
  Integer k_dot;
  RayKind kind = RayKind::kUnclassified;
  /// Declared divisor negative on the ray (birational contraction case).
  std::optional<DeclaredDivisor> witness;
  std::vector<std::string> assumptions;
};

/// Sign-pattern classification of the caller-supplied second extremal ray.
///   s < 0, k = 0                         -> flop wall, canonical Fano
///   s = 0, k < 0, declared D with D.C < 0 -> birational contraction
///   s = 0, k < 0, S_T moves in a pencil   -> fibration
/// anything else is kUnclassified. When `cone_generators` is non-empty the
/// fibration case additionally requires S_T nef on them.
RayVerdict classify_second_ray(const BlowupThreefold& t, const DivisorClass& ray,
                               const std::vector<DeclaredDivisor>& declared_effective = {},
                               const std::vector<DivisorClass>& cone_generators = {});

/// -K_T positive on every supplied ray. The fibres of nu are always
/// included (-K_T . fibre = 1). kConfiguration on an empty list.
bool fano_check(const BlowupThreefold& t, const std::vector<DivisorClass>& rays);

/// Largest t >= 0 with S_T + t K_T in the cone spanned by E_Gamma and
/// `declared`; std::nullopt when S_T itself is outside that cone.
std::optional<Rational> effective_threshold(const BlowupThreefold& t, const ThreefoldClass& declared);

}  // namespace cremona
