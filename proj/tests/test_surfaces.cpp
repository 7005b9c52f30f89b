#include "doctest.h"

#include "cremona/error.hpp"
#include "cremona/surfaces.hpp"

using namespace cremona;

TEST_CASE("model surfaces") {
  const auto sextic = make_f0_sextic();
  CHECK(sextic.degree() == 6);
  CHECK(sextic.sectional_genus() == 0);

  const auto bordiga = make_bordiga();
  CHECK(bordiga.degree() == 6);
  CHECK(bordiga.sectional_genus() == 3);
  CHECK(bordiga.lattice.effectivity() == EffectivityRule::kExplicitGeneratorList);

  const auto dp6 = make_dp6();
  CHECK(dp6.degree() == 6);
  CHECK(dp6.sectional_genus() == 1);
  CHECK(dp6.polarization == -dp6.lattice.canonical());
}

TEST_CASE("polarization validation") {
  const auto l = make_blown_up_plane_lattice(1);
  CHECK_THROWS_AS(make_polarized_surface(l, l.make_class({0, 1}), "bad"), Error);
  CHECK_THROWS_AS(make_blown_up_plane(2, 3, make_ints({1}), "bad"), Error);
}

TEST_CASE("minus one classes") {
  CHECK(standard_minus_one_classes(make_blown_up_plane_lattice(3)).size() == 6);
  CHECK(standard_minus_one_classes(make_blown_up_plane_lattice(10)).size() == 55);
  for (const auto& c : standard_minus_one_classes(make_blown_up_plane_lattice(5))) {
    const auto l = make_blown_up_plane_lattice(5);
    CHECK(self_intersection(l, c) == -1);
    CHECK(pair(l, c, l.canonical()) == -1);
  }
}

TEST_CASE("S_Z model") {
  const SZModel sz = make_sz();
  const auto& l = sz.lattice();
  CHECK(l.id() == "S_Z");
  CHECK(l.gram() == IntMatrix{{-1, 0, 1}, {0, -1, 1}, {1, 1, -1}});
  CHECK(l.canonical().coeffs() == make_ints({-2, -2, -3}));
  CHECK(sz.from_f0(sz.f0().make_class({1, 3})).coeffs() == make_ints({1, 3, 4}));
  CHECK(sz.from_f0(sz.f0().make_class({4, 8})).coeffs() == make_ints({4, 8, 12}));
  CHECK(sz.from_plane(1).coeffs() == make_ints({1, 1, 1}));
  CHECK(self_intersection(l, sz.from_plane(5)) == 25);
  CHECK(sz.is_plane_pullback(sz.from_plane(2)));
  CHECK_FALSE(sz.is_plane_pullback(sz.line_ruling()));
  CHECK(sz.is_st_pullback(sz.line_ruling()));
  CHECK(self_intersection(l, sz.line_ruling()) == 0);
  CHECK(self_intersection(l, sz.cubic_ruling()) == 0);
  CHECK(pair(l, sz.line_ruling(), sz.cubic_ruling()) == 1);
  // F0 pulls back with K_SZ = p*K_F0 + (exceptional curve M).
  CHECK(sz.from_f0(sz.f0().canonical()) + l.make_class({0, 0, 1}) == l.canonical());
  CHECK_THROWS_AS(sz.from_f0(make_plane_lattice().make_class({1})), Error);
}
