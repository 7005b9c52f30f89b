#include "doctest.h"

#include "cremona/error.hpp"
#include "cremona/lattice.hpp"
#include "cremona/surfaces.hpp"

using namespace cremona;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::kIo;
}

}  // namespace

TEST_CASE("plane pairing and genus") {
  const auto p2 = make_plane_lattice();
  CHECK(pair(p2, p2.make_class({1}), p2.make_class({1})) == 1);
  CHECK(pair(p2, p2.make_class({3}), p2.make_class({2})) == 6);
  CHECK(genus(p2, p2.make_class({3})) == 1);
  CHECK(genus(p2, p2.make_class({4})) == 3);
  CHECK(genus(p2, p2.make_class({1})) == 0);
}

TEST_CASE("F0 canonical class") {
  const auto f0 = make_f0_lattice();
  CHECK(self_intersection(f0, f0.canonical()) == 8);
  CHECK(genus(f0, f0.make_class({2, 2})) == 1);
  CHECK(genus(f0, f0.make_class({1, 3})) == 0);
}

TEST_CASE("adjunction parity") {
  const IntersectionLattice odd("odd", {"x"}, IntMatrix{{1}}, make_ints({0}), EffectivityRule::kUndeclared);
  CHECK(code_of([&] { genus(odd, odd.make_class({1})); }) == ErrorCode::kAdjunctionParity);
  CHECK(genus(odd, odd.make_class({2})) == 3);
}

TEST_CASE("lattice mismatch and dimension errors") {
  const auto p2 = make_plane_lattice();
  const auto f0 = make_f0_lattice();
  CHECK(code_of([&] { pair(p2, p2.make_class({1}), f0.make_class({1, 0})); }) == ErrorCode::kLatticeMismatch);
  CHECK(code_of([&] { p2.make_class({1, 2}); }) == ErrorCode::kDimension);
  CHECK(code_of([&] {
          IntersectionLattice("bad", {"a", "b"}, IntMatrix{{0, 1}, {2, 0}}, make_ints({0, 0}),
                              EffectivityRule::kUndeclared);
        }) != ErrorCode::kIo);
}

TEST_CASE("blow-up of the plane") {
  const auto p2 = make_plane_lattice();
  const auto up = blow_up_point(p2);
  CHECK(up.lattice.id() == "Bl(P2)");
  CHECK(up.lattice.labels() == std::vector<std::string>{"L", "E1"});
  CHECK(up.lattice.canonical().coeffs() == make_ints({-3, 1}));
  CHECK(up.map.pullback(p2.make_class({2})).coeffs() == make_ints({2, 0}));
  CHECK(up.lattice.effectivity() == EffectivityRule::kStandardBlowupCone);
  CHECK(self_intersection(up.lattice, up.lattice.canonical()) == 8);
  const auto twice = blow_up_point(up.lattice, std::string("F"), std::string("X"));
  CHECK(twice.lattice.id() == "X");
  CHECK(twice.lattice.labels().back() == "F");
  CHECK(self_intersection(twice.lattice, twice.lattice.canonical()) == 7);
}

TEST_CASE("blown-up plane lattices match iterated blow-ups") {
  auto l = make_plane_lattice();
  for (int i = 0; i < 6; ++i) l = blow_up_point(l).lattice;
  const auto direct = make_blown_up_plane_lattice(6);
  CHECK(direct.gram() == l.gram());
  CHECK(direct.canonical().coeffs() == l.canonical().coeffs());
  CHECK(self_intersection(direct, direct.canonical()) == 3);
}

TEST_CASE("standard cone effectivity") {
  const auto l = make_blown_up_plane_lattice(3);
  CHECK(is_effective(l, l.make_class({1, -1, -1, 0})));
  CHECK(is_effective(l, l.make_class({0, 1, 0, 0})));
  CHECK(is_effective(l, l.make_class({3, -1, -1, -1})));
  CHECK_FALSE(is_effective(l, l.make_class({1, -1, -1, -1})));
  CHECK_FALSE(is_effective(l, l.make_class({-1, 0, 0, 0})));
  CHECK_FALSE(is_effective(l, l.make_class({1, -2, 0, 0})));
}

TEST_CASE("other effectivity rules") {
  const auto f0 = make_f0_lattice();
  CHECK(is_effective(f0, f0.make_class({0, 3})));
  CHECK_FALSE(is_effective(f0, f0.make_class({1, -1})));

  const auto bordiga = make_bordiga();
  const auto& l = bordiga.lattice;
  IntVector c(11, Integer(0));
  c[0] = 1;
  c[1] = c[2] = -1;
  CHECK(is_effective(l, l.make_class(c)));
  c[3] = 1;
  CHECK(is_effective(l, l.make_class(c)));
  IntVector line(11, Integer(0));
  line[0] = 1;
  CHECK(is_effective(l, l.make_class(line)));  // c + E1 + E2
  line[3] = -1;
  CHECK_FALSE(is_effective(l, l.make_class(line)));

  const IntersectionLattice undeclared("u", {"x"}, IntMatrix{{1}}, make_ints({1}), EffectivityRule::kUndeclared);
  CHECK(code_of([&] { is_effective(undeclared, undeclared.make_class({1})); }) == ErrorCode::kConfiguration);
  const IntersectionLattice no_gens("g", {"x"}, IntMatrix{{1}}, make_ints({1}), EffectivityRule::kExplicitGeneratorList);
  CHECK(code_of([&] { is_effective(no_gens, no_gens.make_class({1})); }) == ErrorCode::kConfiguration);
}

TEST_CASE("effectivity rule names round-trip") {
  for (auto r : {EffectivityRule::kAllCoordsNonneg, EffectivityRule::kStandardBlowupCone,
                 EffectivityRule::kExplicitGeneratorList, EffectivityRule::kUndeclared}) {
    CHECK(parse_effectivity_rule(effectivity_rule_name(r)) == r);
  }
  CHECK_THROWS_AS(parse_effectivity_rule("SOMETIMES"), Error);
}

TEST_CASE("change of basis") {
  const auto l = make_blown_up_plane_lattice(2);
  const IntMatrix u{{0, 0, 1}, {1, 0, -1}, {0, 1, -1}};
  const auto bc = change_basis(l, "new", {"a", "b", "c"}, u, EffectivityRule::kAllCoordsNonneg,
                               IntMatrix{{-1, 0, 1}, {0, -1, 1}, {1, 1, -1}});
  CHECK(bc.lattice.canonical().coeffs() == make_ints({-2, -2, -3}));
  const auto h = l.make_class({1, 0, 0});
  CHECK(bc.to_new(h).coeffs() == make_ints({1, 1, 1}));
  CHECK(bc.to_old(bc.to_new(h), l.id()) == h);
  CHECK(code_of([&] {
          change_basis(l, "x", {"a", "b", "c"}, u, EffectivityRule::kUndeclared, IntMatrix{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
        }) == ErrorCode::kContradiction);
  CHECK(code_of([&] {
          change_basis(l, "x", {"a", "b", "c"}, IntMatrix{{2, 0, 0}, {0, 1, 0}, {0, 0, 1}}, EffectivityRule::kUndeclared);
        }) == ErrorCode::kConfiguration);
}
