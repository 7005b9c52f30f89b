#include "cremona/surfaces.hpp"

#include "cremona/error.hpp"

namespace cremona {

namespace {

IntersectionLattice with_rule(const IntersectionLattice& l, EffectivityRule rule,
                              std::vector<IntVector> generators) {
  return IntersectionLattice(l.id(), l.labels(), l.gram(), l.canonical().coeffs(), rule,
                             std::move(generators));
}

BasisChange make_sz_basis() {
  const IntersectionLattice plane = make_blown_up_plane_lattice(2);
  // Columns: F1 = E1, F2 = E2, M = L - E1 - E2.
  const IntMatrix columns{{0, 0, 1}, {1, 0, -1}, {0, 1, -1}};
  const IntMatrix expected{{-1, 0, 1}, {0, -1, 1}, {1, 1, -1}};
  return change_basis(plane, kSZLatticeId, {"F1", "F2", "M"}, columns,
                      EffectivityRule::kAllCoordsNonneg, expected);
}

}  // namespace

PolarizedSurface make_polarized_surface(IntersectionLattice lattice, DivisorClass polarization,
                                        std::string name) {
  lattice.check_member(polarization);
  PolarizedSurface s{std::move(lattice), std::move(polarization), std::move(name)};
  if (s.degree() <= 0) {
    throw Error(ErrorCode::kModel, "polarization of '" + s.name + "' has H^2 = " + s.degree().str());
  }
  if (s.sectional_genus() < 0) {
    throw Error(ErrorCode::kModel, "polarization of '" + s.name + "' has negative sectional genus");
  }
  return s;
}

IntersectionLattice make_plane_lattice() {
  return IntersectionLattice(kPlaneLatticeId, {"L"}, IntMatrix{{1}}, make_ints({-3}),
                             EffectivityRule::kAllCoordsNonneg);
}

IntersectionLattice make_f0_lattice() {
  return IntersectionLattice(kF0LatticeId, {"O(1,0)", "O(0,1)"}, IntMatrix{{0, 1}, {1, 0}},
                             make_ints({-2, -2}), EffectivityRule::kAllCoordsNonneg);
}

IntersectionLattice make_blown_up_plane_lattice(std::size_t points) {
  IntersectionLattice l = make_plane_lattice();
  for (std::size_t i = 1; i <= points; ++i) {
    l = blow_up_point(l, "E" + std::to_string(i), "Bl" + std::to_string(i) + "P2").lattice;
  }
  return l;
}

PolarizedSurface make_f0_sextic() {
  IntersectionLattice f0 = make_f0_lattice();
  DivisorClass h = f0.make_class({1, 3});
  return make_polarized_surface(std::move(f0), std::move(h), "Rational sextic scroll");
}

PolarizedSurface make_bordiga() {
  const IntersectionLattice base = make_blown_up_plane_lattice(10);
  std::vector<IntVector> generators;
  generators.push_back((base.basis_class(0) - base.basis_class(1) - base.basis_class(2)).coeffs());
  for (std::size_t i = 1; i <= 10; ++i) generators.push_back(base.basis_class(i).coeffs());
  IntersectionLattice l = with_rule(base, EffectivityRule::kExplicitGeneratorList, std::move(generators));
  IntVector h(11, Integer(-1));
  h[0] = 4;
  DivisorClass polarization(l.id(), std::move(h));
  return make_polarized_surface(std::move(l), std::move(polarization), "Bordiga surface");
}

PolarizedSurface make_dp6() {
  return make_blown_up_plane(3, 3, make_ints({1, 1, 1}), "del Pezzo surface of degree 6");
}

PolarizedSurface make_blown_up_plane(std::size_t points, const Integer& degree,
                                     const IntVector& multiplicities, std::string name) {
  if (multiplicities.size() != points) {
    throw Error(ErrorCode::kDimension, "expected " + std::to_string(points) + " multiplicities");
  }
  IntersectionLattice l = make_blown_up_plane_lattice(points);
  IntVector h(points + 1);
  h[0] = degree;
  for (std::size_t i = 0; i < points; ++i) h[i + 1] = -multiplicities[i];
  DivisorClass polarization(l.id(), std::move(h));
  return make_polarized_surface(std::move(l), std::move(polarization), std::move(name));
}

std::vector<DivisorClass> standard_minus_one_classes(const IntersectionLattice& lattice) {
  std::vector<DivisorClass> out;
  const std::size_t n = lattice.rank() - 1;
  auto keep = [&](const DivisorClass& d) {
    if (self_intersection(lattice, d) == -1 && pair(lattice, d, lattice.canonical()) == -1) out.push_back(d);
  };
  for (std::size_t i = 1; i <= n; ++i) keep(lattice.basis_class(i));
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j)
      keep(lattice.basis_class(0) - lattice.basis_class(i) - lattice.basis_class(j));
  return out;
}

SZModel::SZModel()
    : f0_(make_f0_lattice()), plane_model_(make_sz_basis()), lattice_(plane_model_.lattice) {}

DivisorClass SZModel::from_f0(const DivisorClass& f0_class) const {
  f0_.check_member(f0_class);
  return DivisorClass(lattice_.id(), IntVector{f0_class[0], f0_class[1], f0_class[0] + f0_class[1]});
}

DivisorClass SZModel::from_plane(const Integer& degree) const {
  return DivisorClass(lattice_.id(), IntVector{degree, degree, degree});
}

bool SZModel::is_st_pullback(const DivisorClass& d) const {
  lattice_.check_member(d);
  return d[0] + d[1] == d[2];
}

bool SZModel::is_plane_pullback(const DivisorClass& d) const {
  lattice_.check_member(d);
  return d[0] == d[1] && d[1] == d[2];
}

SZModel make_sz() { return SZModel(); }

}  // namespace cremona
