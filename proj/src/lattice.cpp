#include "cremona/lattice.hpp"

#include <algorithm>

#include "cremona/error.hpp"
#include "linalg.hpp"

namespace cremona {

namespace {

void require_same_lattice(const DivisorClass& a, const DivisorClass& b) {
  if (a.lattice_id() != b.lattice_id()) {
    throw Error(ErrorCode::kLatticeMismatch,
                "classes live on different lattices: '" + a.lattice_id() + "' and '" +
                    b.lattice_id() + "'");
  }
  if (a.size() != b.size()) throw Error(ErrorCode::kDimension, "class length mismatch");
}

bool is_standard_blowup_gram(const IntMatrix& gram) {
  for (std::size_t r = 0; r < gram.rows(); ++r)
    for (std::size_t c = 0; c < gram.cols(); ++c) {
      const int expected = r != c ? 0 : (r == 0 ? 1 : -1);
      if (gram(r, c) != expected) return false;
    }
  return gram.rows() >= 1;
}

// d L - sum a_i E_i is a sum of d lines each through at most two of the
// points (and each point at most once per line), plus exceptional curves,
// iff d >= 0, every positive a_i <= d and sum of positive a_i <= 2d.
bool standard_cone_contains(const IntVector& coeffs) {
  const Integer& d = coeffs[0];
  if (d < 0) return false;
  Integer total = 0;
  for (std::size_t i = 1; i < coeffs.size(); ++i) {
    const Integer required = -coeffs[i];
    if (required <= 0) continue;
    if (required > d) return false;
    total += required;
  }
  return total <= 2 * d;
}

bool generator_cone_contains(const IntersectionLattice& lattice, const IntVector& coeffs) {
  const auto& gens = lattice.generators();
  if (gens.empty()) {
    throw Error(ErrorCode::kConfiguration,
                "lattice '" + lattice.id() + "' declares an explicit generator list but it is empty");
  }
  // Columns are generators.
  detail::RatMatrix a(lattice.rank(), detail::RatRow(gens.size()));
  for (std::size_t g = 0; g < gens.size(); ++g)
    for (std::size_t r = 0; r < lattice.rank(); ++r) a[r][g] = gens[g][r];
  if (detail::rank_of(a) != gens.size()) {
    throw Error(ErrorCode::kConfiguration,
                "generator list of lattice '" + lattice.id() + "' is not linearly independent");
  }
  std::vector<Rational> b(coeffs.begin(), coeffs.end());
  const auto res = detail::solve_linear(a, b);
  if (res.status != detail::SolveStatus::kUnique) return false;
  return std::all_of(res.solution.begin(), res.solution.end(), [](const Rational& x) {
    return x >= 0 && boost::multiprecision::denominator(x) == 1;
  });
}

}  // namespace

const char* effectivity_rule_name(EffectivityRule rule) {
  switch (rule) {
    case EffectivityRule::kUndeclared: return "UNDECLARED";
    case EffectivityRule::kAllCoordsNonneg: return "ALL_COORDS_NONNEG";
    case EffectivityRule::kStandardBlowupCone: return "STANDARD_BLOWUP_CONE";
    case EffectivityRule::kExplicitGeneratorList: return "EXPLICIT_GENERATOR_LIST";
  }
  return "UNDECLARED";
}

EffectivityRule parse_effectivity_rule(const std::string& name) {
  for (auto rule : {EffectivityRule::kUndeclared, EffectivityRule::kAllCoordsNonneg,
                    EffectivityRule::kStandardBlowupCone, EffectivityRule::kExplicitGeneratorList}) {
    if (name == effectivity_rule_name(rule)) return rule;
  }
  throw Error(ErrorCode::kParse, "unknown effectivity rule '" + name + "'");
}

bool DivisorClass::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Integer& x) { return x == 0; });
}

DivisorClass DivisorClass::operator+(const DivisorClass& other) const {
  require_same_lattice(*this, other);
  IntVector out = coeffs_;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += other.coeffs_[i];
  return DivisorClass(lattice_id_, std::move(out));
}

DivisorClass DivisorClass::operator-(const DivisorClass& other) const { return *this + (-other); }

DivisorClass DivisorClass::operator-() const {
  IntVector out = coeffs_;
  for (auto& x : out) x = -x;
  return DivisorClass(lattice_id_, std::move(out));
}

DivisorClass operator*(const Integer& k, const DivisorClass& d) {
  IntVector out = d.coeffs_;
  for (auto& x : out) x *= k;
  return DivisorClass(d.lattice_id_, std::move(out));
}

std::string to_string(const DivisorClass& d) {
  std::string s = "(";
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (i) s += ",";
    s += d[i].str();
  }
  return s + ")";
}

IntersectionLattice::IntersectionLattice(std::string id, std::vector<std::string> labels,
                                         IntMatrix gram, IntVector canonical,
                                         EffectivityRule rule, std::vector<IntVector> generators)
    : id_(std::move(id)),
      labels_(std::move(labels)),
      gram_(std::move(gram)),
      canonical_(std::move(canonical)),
      rule_(rule),
      generators_(std::move(generators)) {
  if (gram_.rows() != labels_.size() || gram_.cols() != labels_.size()) {
    throw Error(ErrorCode::kDimension, "gram of lattice '" + id_ + "' is " +
                                           std::to_string(gram_.rows()) + "x" +
                                           std::to_string(gram_.cols()) + " but the basis has " +
                                           std::to_string(labels_.size()) + " elements");
  }
  if (!gram_.symmetric()) throw Error(ErrorCode::kDimension, "gram of lattice '" + id_ + "' is not symmetric");
  if (canonical_.size() != labels_.size()) {
    throw Error(ErrorCode::kDimension, "canonical class of lattice '" + id_ + "' has wrong length");
  }
  for (const auto& g : generators_) {
    if (g.size() != labels_.size()) {
      throw Error(ErrorCode::kDimension, "generator of lattice '" + id_ + "' has wrong length");
    }
  }
}

DivisorClass IntersectionLattice::make_class(IntVector coeffs) const {
  if (coeffs.size() != rank()) {
    throw Error(ErrorCode::kDimension, "class with " + std::to_string(coeffs.size()) +
                                           " coefficients on lattice '" + id_ + "' of rank " +
                                           std::to_string(rank()));
  }
  return DivisorClass(id_, std::move(coeffs));
}

DivisorClass IntersectionLattice::make_class(std::initializer_list<long long> coeffs) const {
  return make_class(make_ints(coeffs));
}

DivisorClass IntersectionLattice::zero() const { return DivisorClass(id_, IntVector(rank(), Integer(0))); }

DivisorClass IntersectionLattice::basis_class(std::size_t i) const {
  if (i >= rank()) throw Error(ErrorCode::kOutOfRange, "basis index out of range");
  IntVector v(rank(), Integer(0));
  v[i] = 1;
  return DivisorClass(id_, std::move(v));
}

DivisorClass IntersectionLattice::basis_class(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) throw Error(ErrorCode::kOutOfRange, "no basis element '" + label + "' in '" + id_ + "'");
  return basis_class(static_cast<std::size_t>(it - labels_.begin()));
}

void IntersectionLattice::check_member(const DivisorClass& d) const {
  if (d.lattice_id() != id_) {
    throw Error(ErrorCode::kLatticeMismatch,
                "class on lattice '" + d.lattice_id() + "' used with lattice '" + id_ + "'");
  }
  if (d.size() != rank()) throw Error(ErrorCode::kDimension, "class length does not match lattice rank");
}

Integer pair(const IntersectionLattice& lattice, const DivisorClass& a, const DivisorClass& b) {
  lattice.check_member(a);
  lattice.check_member(b);
  return dot(a.coeffs(), lattice.gram() * b.coeffs());
}

Integer self_intersection(const IntersectionLattice& lattice, const DivisorClass& d) {
  return pair(lattice, d, d);
}

Integer genus(const IntersectionLattice& lattice, const DivisorClass& curve) {
  const Integer twice = pair(lattice, curve, curve + lattice.canonical());
  if (twice % 2 != 0) {
    throw Error(ErrorCode::kAdjunctionParity, "C.(C+K) = " + twice.str() + " is odd for C = " +
                                                  to_string(curve) + " on '" + lattice.id() + "'");
  }
  return twice / 2 + 1;
}

bool is_effective(const IntersectionLattice& lattice, const DivisorClass& d) {
  lattice.check_member(d);
  switch (lattice.effectivity()) {
    case EffectivityRule::kAllCoordsNonneg:
      return std::all_of(d.coeffs().begin(), d.coeffs().end(), [](const Integer& x) { return x >= 0; });
    case EffectivityRule::kStandardBlowupCone:
      if (!is_standard_blowup_gram(lattice.gram())) {
        throw Error(ErrorCode::kConfiguration,
                    "lattice '" + lattice.id() + "' declares STANDARD_BLOWUP_CONE but its gram is not diag(1,-1,...,-1)");
      }
      return standard_cone_contains(d.coeffs());
    case EffectivityRule::kExplicitGeneratorList:
      return generator_cone_contains(lattice, d.coeffs());
    case EffectivityRule::kUndeclared:
      break;
  }
  throw Error(ErrorCode::kConfiguration, "effectivity rule not declared for lattice '" + lattice.id() + "'");
}

BlowupMap::BlowupMap(std::string source_id, std::string target_id, IntMatrix pullback,
                     std::vector<DivisorClass> exceptional)
    : source_id_(std::move(source_id)),
      target_id_(std::move(target_id)),
      pullback_(std::move(pullback)),
      exceptional_(std::move(exceptional)) {}

DivisorClass BlowupMap::pullback(const DivisorClass& d) const {
  if (d.lattice_id() != source_id_) {
    throw Error(ErrorCode::kLatticeMismatch,
                "pullback from '" + source_id_ + "' applied to a class on '" + d.lattice_id() + "'");
  }
  return DivisorClass(target_id_, pullback_ * d.coeffs());
}

BlowupResult blow_up_point(const IntersectionLattice& lattice,
                           std::optional<std::string> exceptional_label,
                           std::optional<std::string> new_id) {
  const std::size_t n = lattice.rank();
  const std::string id = new_id.value_or("Bl(" + lattice.id() + ")");
  auto labels = lattice.labels();
  labels.push_back(exceptional_label.value_or("E" + std::to_string(n)));

  IntMatrix gram(n + 1, n + 1);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) gram(r, c) = lattice.gram()(r, c);
  gram(n, n) = -1;

  IntMatrix pull(n + 1, n);
  for (std::size_t i = 0; i < n; ++i) pull(i, i) = 1;

  IntVector canonical = pull * lattice.canonical().coeffs();
  canonical[n] = 1;

  EffectivityRule rule = EffectivityRule::kUndeclared;
  if (lattice.effectivity() == EffectivityRule::kStandardBlowupCone ||
      (lattice.effectivity() == EffectivityRule::kAllCoordsNonneg && n == 1 && lattice.gram()(0, 0) == 1)) {
    rule = EffectivityRule::kStandardBlowupCone;
  }

  IntVector e(n + 1, Integer(0));
  e[n] = 1;
  IntersectionLattice target(id, std::move(labels), std::move(gram), std::move(canonical), rule);
  BlowupMap map(lattice.id(), id, std::move(pull), {DivisorClass(id, std::move(e))});
  return BlowupResult{std::move(target), std::move(map)};
}

DivisorClass BasisChange::to_new(const DivisorClass& old_class) const {
  if (old_class.size() != old_to_new.cols()) throw Error(ErrorCode::kDimension, "class length mismatch");
  return DivisorClass(lattice.id(), old_to_new * old_class.coeffs());
}

DivisorClass BasisChange::to_old(const DivisorClass& new_class, const std::string& old_id) const {
  lattice.check_member(new_class);
  return DivisorClass(old_id, new_in_old * new_class.coeffs());
}

BasisChange change_basis(const IntersectionLattice& lattice, std::string new_id,
                         std::vector<std::string> new_labels, const IntMatrix& new_in_old,
                         EffectivityRule rule, const std::optional<IntMatrix>& expected_gram,
                         std::vector<IntVector> generators) {
  if (new_in_old.rows() != lattice.rank() || new_in_old.cols() != lattice.rank()) {
    throw Error(ErrorCode::kDimension, "basis change matrix must be square of the lattice rank");
  }
  auto inverse = integer_inverse(new_in_old);
  if (!inverse) {
    throw Error(ErrorCode::kConfiguration, "basis change matrix is not invertible over the integers");
  }
  IntMatrix gram = new_in_old.transpose() * lattice.gram() * new_in_old;
  if (expected_gram && !(*expected_gram == gram)) {
    throw Error(ErrorCode::kContradiction,
                "transformed gram of '" + lattice.id() + "' does not match the declared gram of '" + new_id + "'");
  }
  IntVector canonical = *inverse * lattice.canonical().coeffs();
  IntersectionLattice out(std::move(new_id), std::move(new_labels), std::move(gram), std::move(canonical),
                          rule, std::move(generators));
  return BasisChange{std::move(out), new_in_old, std::move(*inverse)};
}

}  // namespace cremona
