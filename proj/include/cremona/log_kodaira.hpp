#pragma once

#include <string>

#include "cremona/integer.hpp"

namespace cremona {

enum class NegativityVerdict { kNegativeCertified, kInconclusive };

const char* negativity_verdict_name(NegativityVerdict v);

/// Degree obstruction for a surface S of degree deg_s that is double along
/// a curve of degree deg_gamma. A surface D of degree d with multiplicity
/// at least d/2 along the curve would give deg_s * d = deg(D.S) >=
/// d * deg_gamma, so deg_s < deg_gamma rules such D out and the log pair
/// has negative Kodaira dimension. Otherwise nothing is claimed.
struct NegativityCertificate {
  Integer deg_s;
  Integer deg_gamma;
  NegativityVerdict verdict = NegativityVerdict::kInconclusive;
  std::string witness_inequality;
};

/// kOutOfRange for non-positive degrees.
NegativityCertificate negativity_certificate(const Integer& deg_s, const Integer& deg_gamma);

}  // namespace cremona
