#pragma once

#include <string>
#include <vector>

#include "cremona/lattice.hpp"

namespace cremona {

/// A surface with a chosen hyperplane class.
struct PolarizedSurface {
  IntersectionLattice lattice;
  DivisorClass polarization;
  std::string name;

  Integer degree() const { return self_intersection(lattice, polarization); }
  Integer sectional_genus() const { return genus(lattice, polarization); }
};

/// Validates H^2 > 0 and genus(H) >= 0 (kModel otherwise).
PolarizedSurface make_polarized_surface(IntersectionLattice lattice, DivisorClass polarization,
                                        std::string name);

inline constexpr const char* kPlaneLatticeId = "P2";
inline constexpr const char* kF0LatticeId = "F0";
inline constexpr const char* kSZLatticeId = "S_Z";

IntersectionLattice make_plane_lattice();

/// P1 x P1 with basis O(1,0), O(0,1); O(1,0).O(0,1) = 1, K = (-2,-2).
IntersectionLattice make_f0_lattice();

/// The plane blown up in `points` general points, basis (L, E1, ..., En),
/// id "Bl<n>P2".
IntersectionLattice make_blown_up_plane_lattice(std::size_t points);

/// F0 polarized by O(1,3): the rational normal sextic scroll in P^7.
PolarizedSurface make_f0_sextic();

/// Plane blown up in ten points, polarized by quartics through them.
/// Effectivity is declared by the generators c = L-E1-E2 and m_i = E_i.
PolarizedSurface make_bordiga();

/// Plane blown up in three points, anticanonically polarized.
PolarizedSurface make_dp6();

/// Plane blown up in `points` points polarized by d L - sum m_i E_i.
PolarizedSurface make_blown_up_plane(std::size_t points, const Integer& degree,
                                     const IntVector& multiplicities, std::string name);

/// Classes E_i and L-E_i-E_j of a blown-up plane lattice that are
/// (-1)-curves (C^2 = K.C = -1).
std::vector<DivisorClass> standard_minus_one_classes(const IntersectionLattice& lattice);

/// Common resolution of F0 blown up in one point and the plane blown up in
/// two points, in the basis (F1, F2, M) with F1, F2 the rulings through
/// the blown-up point and M the line through the two plane points.
class SZModel {
 public:
  SZModel();

  const IntersectionLattice& lattice() const { return lattice_; }
  const IntersectionLattice& f0() const { return f0_; }
  const BasisChange& plane_model() const { return plane_model_; }

  /// (alpha, beta) on F0 -> (alpha, beta, alpha + beta).
  DivisorClass from_f0(const DivisorClass& f0_class) const;
  /// Plane class of degree d -> (d, d, d).
  DivisorClass from_plane(const Integer& degree) const;

  /// a + b = c
  bool is_st_pullback(const DivisorClass& d) const;
  /// a = b = c
  bool is_plane_pullback(const DivisorClass& d) const;

  DivisorClass line_ruling() const { return lattice_.make_class({0, 1, 1}); }
  DivisorClass cubic_ruling() const { return lattice_.make_class({1, 0, 1}); }

 private:
  IntersectionLattice f0_;
  BasisChange plane_model_;
  IntersectionLattice lattice_;
};

SZModel make_sz();

}  // namespace cremona
