#pragma once

#include <vector>

#include "cremona/integer.hpp"

namespace cremona {

/// Dimension of the Grassmannian of k-planes in P^n, (k+1)(n-k).
Integer grassmannian_dim(const Integer& k, const Integer& n);

struct DimensionCount {
  Integer k;
  Integer n;
  std::vector<Integer> param_space_dims;
  Integer lhs;
  Integer rhs;
  bool dominant_possible = false;
};

/// Compares the total dimension of a parameter space with dim G(k, n).
DimensionCount dominance_count(const std::vector<Integer>& param_space_dims, const Integer& k,
                               const Integer& n);

/// A degree-d surface with a point of multiplicity d-1 (a monoid) projects
/// birationally from that point onto a plane.
bool monoid_ce_predicate(const Integer& degree, const Integer& multiplicity);

/// Expected projective dimension of plane curves of degree d with points of
/// the given multiplicities: C(d+2, 2) - 1 - sum m(m+1)/2.
Integer plane_linear_system_dim(const Integer& degree, const std::vector<Integer>& multiplicities);

}  // namespace cremona
