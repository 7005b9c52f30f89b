#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cremona/integer.hpp"
#include "cremona/matrix.hpp"

namespace cremona {

/// How a lattice decides effectivity. The rule is declared by whoever
/// builds the lattice; nothing here computes an effective cone.
enum class EffectivityRule {
  kUndeclared,
  /// Every coefficient is nonnegative.
  kAllCoordsNonneg,
  /// Basis (L, E1, ..., En) of a plane blown up in general points:
  /// effective when the class is a sum of lines through at most two of the
  /// points plus exceptional curves. A sufficient test only.
  kStandardBlowupCone,
  /// Nonnegative integer combination of a linearly independent list of
  /// generator classes.
  kExplicitGeneratorList,
};

const char* effectivity_rule_name(EffectivityRule rule);
EffectivityRule parse_effectivity_rule(const std::string& name);

/// Integer coefficient vector tagged with the id of its lattice.
class DivisorClass {
 public:
  DivisorClass() = default;
  DivisorClass(std::string lattice_id, IntVector coeffs)
      : lattice_id_(std::move(lattice_id)), coeffs_(std::move(coeffs)) {}

  const std::string& lattice_id() const { return lattice_id_; }
  const IntVector& coeffs() const { return coeffs_; }
  std::size_t size() const { return coeffs_.size(); }
  const Integer& operator[](std::size_t i) const { return coeffs_[i]; }

  bool is_zero() const;

  DivisorClass operator+(const DivisorClass& other) const;
  DivisorClass operator-(const DivisorClass& other) const;
  DivisorClass operator-() const;
  friend DivisorClass operator*(const Integer& k, const DivisorClass& d);

  bool operator==(const DivisorClass& other) const = default;

 private:
  std::string lattice_id_;
  IntVector coeffs_;
};

std::string to_string(const DivisorClass& d);

/// Named integer basis with a symmetric pairing and a canonical class.
class IntersectionLattice {
 public:
  IntersectionLattice(std::string id, std::vector<std::string> labels, IntMatrix gram,
                      IntVector canonical, EffectivityRule rule,
                      std::vector<IntVector> generators = {});

  const std::string& id() const { return id_; }
  std::size_t rank() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const IntMatrix& gram() const { return gram_; }
  DivisorClass canonical() const { return DivisorClass(id_, canonical_); }
  EffectivityRule effectivity() const { return rule_; }
  const std::vector<IntVector>& generators() const { return generators_; }

  /// Builds a class on this lattice, checking the coefficient count.
  DivisorClass make_class(IntVector coeffs) const;
  DivisorClass make_class(std::initializer_list<long long> coeffs) const;
  DivisorClass zero() const;
  DivisorClass basis_class(std::size_t i) const;
  DivisorClass basis_class(const std::string& label) const;

  /// Throws kLatticeMismatch unless `d` was built on this lattice.
  void check_member(const DivisorClass& d) const;

 private:
  std::string id_;
  std::vector<std::string> labels_;
  IntMatrix gram_;
  IntVector canonical_;
  EffectivityRule rule_;
  std::vector<IntVector> generators_;
};

Integer pair(const IntersectionLattice& lattice, const DivisorClass& a, const DivisorClass& b);
Integer self_intersection(const IntersectionLattice& lattice, const DivisorClass& d);

/// Arithmetic genus by adjunction, (C.(C+K))/2 + 1. Throws
/// kAdjunctionParity when C.(C+K) is odd.
Integer genus(const IntersectionLattice& lattice, const DivisorClass& curve);

bool is_effective(const IntersectionLattice& lattice, const DivisorClass& d);

/// Pullback along a point blow-up, source classes to target classes.
class BlowupMap {
 public:
  BlowupMap(std::string source_id, std::string target_id, IntMatrix pullback,
            std::vector<DivisorClass> exceptional);

  const std::string& source_id() const { return source_id_; }
  const std::string& target_id() const { return target_id_; }
  const IntMatrix& pullback_matrix() const { return pullback_; }
  const std::vector<DivisorClass>& exceptional_classes() const { return exceptional_; }

  DivisorClass pullback(const DivisorClass& d) const;

 private:
  std::string source_id_;
  std::string target_id_;
  IntMatrix pullback_;
  std::vector<DivisorClass> exceptional_;
};

struct BlowupResult {
  IntersectionLattice lattice;
  BlowupMap map;
};

/// Blow-up of one general point. The new basis element is appended with
/// self-intersection -1 and K' = p*K + E. Default id is "Bl(<id>)" and the
/// default exceptional label is "E<old rank>".
BlowupResult blow_up_point(const IntersectionLattice& lattice,
                           std::optional<std::string> exceptional_label = std::nullopt,
                           std::optional<std::string> new_id = std::nullopt);

/// Result of an explicit change of basis.
struct BasisChange {
  IntersectionLattice lattice;
  /// Columns are the new basis vectors in old coordinates.
  IntMatrix new_in_old;
  /// Inverse of new_in_old; maps old coordinates to new ones.
  IntMatrix old_to_new;

  DivisorClass to_new(const DivisorClass& old_class) const;
  DivisorClass to_old(const DivisorClass& new_class, const std::string& old_id) const;
};

/// Re-expresses `lattice` in a new basis. `new_in_old` must be unimodular.
/// When `expected_gram` is given the transformed gram must match it exactly
/// (kContradiction otherwise). The effectivity rule is not transported; the
/// caller declares a new one.
BasisChange change_basis(const IntersectionLattice& lattice, std::string new_id,
                         std::vector<std::string> new_labels, const IntMatrix& new_in_old,
                         EffectivityRule rule,
                         const std::optional<IntMatrix>& expected_gram = std::nullopt,
                         std::vector<IntVector> generators = {});

}  // namespace cremona
