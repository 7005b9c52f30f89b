#pragma once

// Exact rational linear algebra shared by the lattice, projection and
// obstruction modules. Not part of the installed interface.

#include <cstddef>
#include <optional>
#include <vector>

#include "cremona/integer.hpp"

namespace cremona::detail {

using RatRow = std::vector<Rational>;
using RatMatrix = std::vector<RatRow>;

enum class SolveStatus { kUnique, kInconsistent, kUnderdetermined };

struct SolveResult {
  SolveStatus status = SolveStatus::kInconsistent;
  std::vector<Rational> solution;
  std::size_t rank = 0;
};

/// Solves A x = b over the rationals.
SolveResult solve_linear(RatMatrix a, std::vector<Rational> b);

/// Row rank over the rationals.
std::size_t rank_of(RatMatrix a);

/// Inverse of a square matrix, or nullopt if singular.
std::optional<RatMatrix> inverse(RatMatrix a);

RatMatrix to_rational(const std::vector<IntVector>& rows);

/// Smallest positive integer multiple of a rational vector that is
/// integral, divided by the gcd of its entries. Returns the zero vector
/// unchanged.
IntVector primitive_integer_multiple(const std::vector<Rational>& v);

}  // namespace cremona::detail
