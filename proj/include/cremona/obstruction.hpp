#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cremona/surfaces.hpp"

namespace cremona {

/// sum_i coeffs[i] * x_i = constant
struct LinearEquation {
  IntVector coeffs;
  Integer constant;
  bool operator==(const LinearEquation&) const = default;
};

/// Linear equations over named unknowns, every unknown ranging over the
/// nonnegative integers.
class FeasibilitySystem {
 public:
  FeasibilitySystem() = default;
  FeasibilitySystem(std::vector<std::string> unknowns, std::vector<LinearEquation> equations);

  const std::vector<std::string>& unknowns() const { return unknowns_; }
  const std::vector<LinearEquation>& equations() const { return equations_; }
  std::size_t unknown_count() const { return unknowns_.size(); }

  std::optional<std::size_t> index_of(const std::string& unknown) const;

  /// Nonnegative and satisfies every equation exactly.
  bool satisfied_by(const IntVector& assignment) const;

 private:
  std::vector<std::string> unknowns_;
  std::vector<LinearEquation> equations_;
};

enum class FeasibilityStatus { kFeasible, kInfeasible, kUnknownUpToBound };
const char* feasibility_status_name(FeasibilityStatus s);

/// One line of an infeasibility derivation. Lines are numbered with the
/// system equations first (0 .. m-1) and chain steps after them.
struct DerivationStep {
  enum class Kind {
    /// result = sum multiplier * line
    kCombination,
    /// `terms` holds the single source line, which has all coefficients of
    /// one sign and constant 0; result is x_j = 0 for one j in its support.
    kForceZero,
  };
  Kind kind = Kind::kCombination;
  std::vector<std::pair<std::size_t, Integer>> terms;
  LinearEquation result;
};

enum class ContradictionKind {
  /// Final line: nonnegative coefficients, negative constant.
  kNegativeNonnegCombination,
  /// Final line: gcd of the coefficients does not divide the constant.
  kDivisibility,
};

const char* contradiction_kind_name(ContradictionKind k);

class FeasibilityCertificate {
 public:
  /// Re-checks the witness; kContradiction if it fails.
  static FeasibilityCertificate feasible(const FeasibilitySystem& system, IntVector witness);
  /// Replays the chain; kContradiction if it does not replay.
  static FeasibilityCertificate infeasible(const FeasibilitySystem& system,
                                           std::vector<DerivationStep> chain, ContradictionKind kind);
  static FeasibilityCertificate unknown(Integer bound);

  FeasibilityStatus status() const { return status_; }
  const IntVector& witness() const { return witness_; }
  const std::vector<DerivationStep>& chain() const { return chain_; }
  ContradictionKind contradiction() const { return contradiction_; }
  const Integer& bound() const { return bound_; }

 private:
  FeasibilityStatus status_ = FeasibilityStatus::kUnknownUpToBound;
  IntVector witness_;
  std::vector<DerivationStep> chain_;
  ContradictionKind contradiction_ = ContradictionKind::kNegativeNonnegCombination;
  Integer bound_ = 0;
};

struct ReplayResult {
  bool ok = false;
  std::string message;
};

/// Mechanically re-derives every chain line (or re-checks the witness).
ReplayResult replay(const FeasibilitySystem& system, const FeasibilityCertificate& certificate);

/// Decides nonnegative integer feasibility. Elimination runs first:
/// sign-uniform combinations with zero constant force their support to
/// zero, and a sign-uniform combination with a constant of the opposite
/// sign (or a gcd that does not divide the constant) proves infeasibility.
/// Otherwise every unknown is searched over [0, bound]; no witness there
/// gives kUnknownUpToBound.
FeasibilityCertificate solve_nonneg(const FeasibilitySystem& system, const Integer& bound);

/// Unknowns of the restriction system, in order.
inline const std::vector<std::string>& obstruction_unknowns() {
  static const std::vector<std::string> names{"e", "s1", "s2", "a", "b1", "b2"};
  return names;
}

/// Restriction-class equations on S_Z for a Cremona map sending S to a
/// plane. Writing
///   p^*S|  = S_Z| + mult * E_Gamma + E_S + (0, 0, a+1) ~ s_pullback
///   q^*H|  = S_Z| + E_H + (b1+1, b2+1, 0)            ~ h_pullback
/// with E_S = (s1, s2, s1+s2) and E_H = (e, e, e) and subtracting gives
/// (e,e,e) = (s1, s2, s1+s2) + K + (-b1, -b2, a), where
/// K = mult * E_Gamma - (s_pullback - h_pullback) + (-1, -1, 1).
/// kPredicate if s_pullback or e_gamma_total is not pulled back from S_T
/// (a+b = c) or h_pullback is not pulled back from the plane (a = b = c).
FeasibilitySystem build_obstruction_system(const SZModel& sz, const DivisorClass& s_pullback,
                                           const DivisorClass& h_pullback,
                                           const DivisorClass& e_gamma_total,
                                           const Integer& deg_s_mult = 2);

/// "e - s1 + b1 = 2"
std::string render_equation(const FeasibilitySystem& system, const LinearEquation& eq);
/// Solves for the first unknown with coefficient +-1: "e = -2 - b2".
std::string render_solved(const FeasibilitySystem& system, const LinearEquation& eq);
/// Human-readable proof or witness.
std::string render_transcript(const FeasibilitySystem& system, const FeasibilityCertificate& certificate);

}  // namespace cremona
