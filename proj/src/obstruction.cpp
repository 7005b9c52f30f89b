#include "cremona/obstruction.hpp"

#include <algorithm>
#include <sstream>

#include "cremona/error.hpp"

namespace cremona {

namespace {

bool all_nonneg(const IntVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x >= 0; });
}

bool all_nonpos(const IntVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x <= 0; });
}

std::string term(const Integer& c, const std::string& name, bool first) {
  std::string s;
  if (c < 0) s += first ? "-" : " - ";
  else if (!first) s += " + ";
  const Integer mag = abs(c);
  if (mag != 1) s += mag.str() + " ";
  return s + name;
}

}  // namespace

FeasibilitySystem::FeasibilitySystem(std::vector<std::string> unknowns, std::vector<LinearEquation> equations)
    : unknowns_(std::move(unknowns)), equations_(std::move(equations)) {
  for (std::size_t i = 0; i < unknowns_.size(); ++i)
    for (std::size_t j = i + 1; j < unknowns_.size(); ++j)
      if (unknowns_[i] == unknowns_[j]) throw Error(ErrorCode::kConfiguration, "duplicate unknown '" + unknowns_[i] + "'");
  for (const auto& eq : equations_) {
    if (eq.coeffs.size() != unknowns_.size()) {
      throw Error(ErrorCode::kDimension, "equation references " + std::to_string(eq.coeffs.size()) +
                                             " unknowns but the system declares " +
                                             std::to_string(unknowns_.size()));
    }
  }
}

std::optional<std::size_t> FeasibilitySystem::index_of(const std::string& unknown) const {
  auto it = std::find(unknowns_.begin(), unknowns_.end(), unknown);
  if (it == unknowns_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - unknowns_.begin());
}

bool FeasibilitySystem::satisfied_by(const IntVector& assignment) const {
  if (assignment.size() != unknowns_.size() || !all_nonneg(assignment)) return false;
  return std::all_of(equations_.begin(), equations_.end(),
                     [&](const LinearEquation& eq) { return dot(eq.coeffs, assignment) == eq.constant; });
}

const char* feasibility_status_name(FeasibilityStatus s) {
  switch (s) {
    case FeasibilityStatus::kFeasible: return "FEASIBLE";
    case FeasibilityStatus::kInfeasible: return "INFEASIBLE";
    case FeasibilityStatus::kUnknownUpToBound: return "UNKNOWN_UP_TO_BOUND";
  }
  return "UNKNOWN_UP_TO_BOUND";
}

const char* contradiction_kind_name(ContradictionKind k) {
  return k == ContradictionKind::kDivisibility ? "DIVISIBILITY" : "NEGATIVE_NONNEG_COMBINATION";
}

FeasibilityCertificate FeasibilityCertificate::feasible(const FeasibilitySystem& system, IntVector witness) {
  if (!system.satisfied_by(witness)) throw Error(ErrorCode::kContradiction, "witness does not satisfy the system");
  FeasibilityCertificate c;
  c.status_ = FeasibilityStatus::kFeasible;
  c.witness_ = std::move(witness);
  return c;
}

FeasibilityCertificate FeasibilityCertificate::infeasible(const FeasibilitySystem& system,
                                                          std::vector<DerivationStep> chain,
                                                          ContradictionKind kind) {
  FeasibilityCertificate c;
  c.status_ = FeasibilityStatus::kInfeasible;
  c.chain_ = std::move(chain);
  c.contradiction_ = kind;
  const auto r = replay(system, c);
  if (!r.ok) throw Error(ErrorCode::kContradiction, "infeasibility chain does not replay: " + r.message);
  return c;
}

FeasibilityCertificate FeasibilityCertificate::unknown(Integer bound) {
  FeasibilityCertificate c;
  c.status_ = FeasibilityStatus::kUnknownUpToBound;
  c.bound_ = std::move(bound);
  return c;
}

ReplayResult replay(const FeasibilitySystem& system, const FeasibilityCertificate& certificate) {
  switch (certificate.status()) {
    case FeasibilityStatus::kFeasible:
      if (system.satisfied_by(certificate.witness())) return {true, "witness satisfies every equation"};
      return {false, "witness violates the system"};
    case FeasibilityStatus::kUnknownUpToBound:
      return {true, "no claim to replay"};
    case FeasibilityStatus::kInfeasible:
      break;
  }
  const std::size_t n = system.unknown_count();
  std::vector<LinearEquation> lines = system.equations();
  const auto& chain = certificate.chain();
  if (chain.empty()) return {false, "empty chain"};
  for (std::size_t k = 0; k < chain.size(); ++k) {
    const auto& step = chain[k];
    const std::string where = "line " + std::to_string(lines.size() + 1);
    if (step.result.coeffs.size() != n) return {false, where + ": wrong width"};
    if (step.terms.empty()) return {false, where + ": no source lines"};
    for (const auto& [idx, mult] : step.terms)
      if (idx >= lines.size()) return {false, where + ": refers to a later line"};

    if (step.kind == DerivationStep::Kind::kCombination) {
      LinearEquation sum{IntVector(n, Integer(0)), 0};
      for (const auto& [idx, mult] : step.terms) {
        for (std::size_t j = 0; j < n; ++j) sum.coeffs[j] += mult * lines[idx].coeffs[j];
        sum.constant += mult * lines[idx].constant;
      }
      if (!(sum == step.result)) return {false, where + ": combination does not reproduce the stated line"};
    } else {
      if (step.terms.size() != 1) return {false, where + ": force-zero needs exactly one source"};
      const auto& src = lines[step.terms.front().first];
      if (src.constant != 0 || !(all_nonneg(src.coeffs) || all_nonpos(src.coeffs))) {
        return {false, where + ": source is not a sign-uniform line with zero constant"};
      }
      std::size_t nonzero = 0, pos = 0;
      for (std::size_t j = 0; j < n; ++j)
        if (step.result.coeffs[j] != 0) ++nonzero, pos = j;
      if (nonzero != 1 || step.result.coeffs[pos] != 1 || step.result.constant != 0) {
        return {false, where + ": force-zero result must read x = 0"};
      }
      if (src.coeffs[pos] == 0) return {false, where + ": forced unknown is not in the source support"};
    }
    lines.push_back(step.result);
  }
  const auto& last = lines.back();
  if (certificate.contradiction() == ContradictionKind::kNegativeNonnegCombination) {
    if (all_nonneg(last.coeffs) && last.constant < 0) return {true, "final line forces a negative sum of nonnegative terms"};
    return {false, "final line is not a nonnegative combination equal to a negative integer"};
  }
  const Integer g = gcd_of(last.coeffs);
  if (g == 0 ? last.constant != 0 : last.constant % g != 0) return {true, "final line has no integer solution"};
  return {false, "final line is divisible"};
}

FeasibilitySystem build_obstruction_system(const SZModel& sz, const DivisorClass& s_pullback,
                                           const DivisorClass& h_pullback, const DivisorClass& e_gamma_total,
                                           const Integer& deg_s_mult) {
  if (deg_s_mult < 1) throw Error(ErrorCode::kOutOfRange, "multiplicity along the double curve must be positive");
  if (!sz.is_st_pullback(s_pullback)) {
    throw Error(ErrorCode::kPredicate, "s_pullback " + to_string(s_pullback) + " is not pulled back from S_T (a+b != c)");
  }
  if (!sz.is_st_pullback(e_gamma_total)) {
    throw Error(ErrorCode::kPredicate, "e_gamma_total " + to_string(e_gamma_total) + " is not pulled back from S_T (a+b != c)");
  }
  if (!sz.is_plane_pullback(h_pullback)) {
    throw Error(ErrorCode::kPredicate, "h_pullback " + to_string(h_pullback) + " is not pulled back from the plane (a=b=c fails)");
  }
  // Exceptional curves over p1 (in p^*S) and over q1, q2 (in q^*H) each
  // appear with multiplicity at least one.
  const DivisorClass offsets = sz.lattice().make_class({-1, -1, 1});
  const DivisorClass k = deg_s_mult * e_gamma_total - (s_pullback - h_pullback) + offsets;

  //                         e   s1  s2   a  b1  b2
  std::vector<LinearEquation> eqs{
      {make_ints({1, -1, 0, 0, 1, 0}), k[0]},
      {make_ints({1, 0, -1, 0, 0, 1}), k[1]},
      {make_ints({1, -1, -1, -1, 0, 0}), k[2]},
  };
  return FeasibilitySystem(obstruction_unknowns(), std::move(eqs));
}

std::string render_equation(const FeasibilitySystem& system, const LinearEquation& eq) {
  std::string lhs;
  for (std::size_t j = 0; j < eq.coeffs.size(); ++j) {
    if (eq.coeffs[j] == 0) continue;
    lhs += term(eq.coeffs[j], system.unknowns()[j], lhs.empty());
  }
  if (lhs.empty()) lhs = "0";
  return lhs + " = " + eq.constant.str();
}

std::string render_solved(const FeasibilitySystem& system, const LinearEquation& eq) {
  std::size_t pivot = eq.coeffs.size();
  for (std::size_t j = 0; j < eq.coeffs.size(); ++j) {
    if (abs(eq.coeffs[j]) == 1) {
      pivot = j;
      break;
    }
  }
  if (pivot == eq.coeffs.size()) return render_equation(system, eq);
  const Integer sign = eq.coeffs[pivot];
  std::string rhs;
  const Integer constant = sign * eq.constant;
  if (constant != 0) rhs = constant.str();
  for (std::size_t j = 0; j < eq.coeffs.size(); ++j) {
    if (j == pivot || eq.coeffs[j] == 0) continue;
    rhs += term(-sign * eq.coeffs[j], system.unknowns()[j], rhs.empty());
  }
  if (rhs.empty()) rhs = "0";
  return system.unknowns()[pivot] + " = " + rhs;
}

std::string render_transcript(const FeasibilitySystem& system, const FeasibilityCertificate& certificate) {
  std::ostringstream out;
  out << "System over nonnegative integers " << "(";
  for (std::size_t j = 0; j < system.unknown_count(); ++j) out << (j ? ", " : "") << system.unknowns()[j];
  out << "):\n";
  std::size_t line = 0;
  for (const auto& eq : system.equations()) {
    out << "  (" << ++line << ") " << render_solved(system, eq) << "\n";
  }
  switch (certificate.status()) {
    case FeasibilityStatus::kFeasible: {
      out << "Witness:";
      for (std::size_t j = 0; j < system.unknown_count(); ++j)
        out << " " << system.unknowns()[j] << "=" << certificate.witness()[j];
      out << "\nConclusion: FEASIBLE\n";
      return out.str();
    }
    case FeasibilityStatus::kUnknownUpToBound:
      out << "No contradiction derived and no witness with every unknown <= " << certificate.bound()
          << ".\nConclusion: UNKNOWN_UP_TO_BOUND\n";
      return out.str();
    case FeasibilityStatus::kInfeasible:
      break;
  }
  out << "Derivation:\n";
  for (const auto& step : certificate.chain()) {
    out << "  (" << ++line << ") " << render_equation(system, step.result) << "    [";
    if (step.kind == DerivationStep::Kind::kForceZero) {
      out << "from (" << step.terms.front().first + 1 << "): nonnegative terms summing to 0";
    } else {
      bool first = true;
      for (const auto& [idx, mult] : step.terms) {
        if (mult < 0) out << (first ? "-" : " - ");
        else if (!first) out << " + ";
        if (abs(mult) != 1) out << abs(mult) << "*";
        out << "(" << idx + 1 << ")";
        first = false;
      }
    }
    out << "]\n";
  }
  const auto& last = certificate.chain().back().result;
  if (certificate.contradiction() == ContradictionKind::kNegativeNonnegCombination) {
    out << "  i.e. " << render_solved(system, last)
        << ", impossible: a sum of nonnegative unknowns cannot be negative.\n";
  } else {
    out << "  impossible over the integers: gcd of the coefficients does not divide " << last.constant << ".\n";
  }
  out << "Conclusion: INFEASIBLE\n";
  return out.str();
}

}  // namespace cremona
