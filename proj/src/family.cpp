#include "cremona/family.hpp"

#include "cremona/error.hpp"

namespace cremona {

Integer grassmannian_dim(const Integer& k, const Integer& n) {
  if (k < 0 || k >= n) {
    throw Error(ErrorCode::kOutOfRange, "G(" + k.str() + ", " + n.str() + ") needs 0 <= k < n");
  }
  return (k + 1) * (n - k);
}

DimensionCount dominance_count(const std::vector<Integer>& param_space_dims, const Integer& k,
                               const Integer& n) {
  DimensionCount c{k, n, param_space_dims, 0, grassmannian_dim(k, n), false};
  for (const auto& d : param_space_dims) {
    if (d < 0) throw Error(ErrorCode::kOutOfRange, "negative parameter space dimension " + d.str());
    c.lhs += d;
  }
  c.dominant_possible = c.lhs >= c.rhs;
  return c;
}

bool monoid_ce_predicate(const Integer& degree, const Integer& multiplicity) {
  if (degree < 1) throw Error(ErrorCode::kOutOfRange, "degree must be positive");
  if (multiplicity < 0 || multiplicity > degree) {
    throw Error(ErrorCode::kOutOfRange, "multiplicity " + multiplicity.str() + " outside [0, " + degree.str() + "]");
  }
  return multiplicity == degree - 1;
}

Integer plane_linear_system_dim(const Integer& degree, const std::vector<Integer>& multiplicities) {
  if (degree < 0) throw Error(ErrorCode::kOutOfRange, "negative degree");
  Integer dim = (degree + 2) * (degree + 1) / 2 - 1;
  for (const auto& m : multiplicities) {
    if (m < 0) throw Error(ErrorCode::kOutOfRange, "negative multiplicity");
    dim -= m * (m + 1) / 2;
  }
  return dim;
}

}  // namespace cremona
