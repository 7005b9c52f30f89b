#include "cremona/log_kodaira.hpp"

#include "cremona/error.hpp"

namespace cremona {

const char* negativity_verdict_name(NegativityVerdict v) {
  return v == NegativityVerdict::kNegativeCertified ? "NEGATIVE_CERTIFIED" : "INCONCLUSIVE";
}

NegativityCertificate negativity_certificate(const Integer& deg_s, const Integer& deg_gamma) {
  if (deg_s < 1 || deg_gamma < 1) {
    throw Error(ErrorCode::kOutOfRange, "degrees must be positive, got deg S = " + deg_s.str() +
                                            ", deg Gamma = " + deg_gamma.str());
  }
  NegativityCertificate c{deg_s, deg_gamma, NegativityVerdict::kInconclusive, ""};
  if (deg_s < deg_gamma) {
    c.verdict = NegativityVerdict::kNegativeCertified;
    c.witness_inequality = deg_s.str() + " < " + deg_gamma.str();
  } else {
    c.witness_inequality = deg_s.str() + " >= " + deg_gamma.str();
  }
  return c;
}

}  // namespace cremona
