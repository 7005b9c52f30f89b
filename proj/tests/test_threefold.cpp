#include "doctest.h"

#include "cremona/error.hpp"
#include "cremona/threefold.hpp"

using namespace cremona;

namespace {

BlowupThreefold sextic_threefold() {
  const auto s = make_f0_sextic();
  const auto f2 = s.lattice.make_class({0, 1});
  return make_blowup_threefold(make_projection_model(s, {{f2, plane_image_incidence(s, f2), "f2"}},
                                                     ProjectionMetadata{Integer(4), Integer(8)}));
}

struct Bordiga {
  BlowupThreefold t;
  DivisorClass m, c;
};

Bordiga bordiga_threefold() {
  const auto b = make_bordiga();
  const auto& l = b.lattice;
  std::vector<Incidence> inc;
  for (std::size_t i = 1; i <= 10; ++i) inc.push_back({l.basis_class(i), 3, "m"});
  const auto c = l.basis_class(0) - l.basis_class(1) - l.basis_class(2);
  inc.push_back({c, 5, "c"});
  return {make_blowup_threefold(make_projection_model(b, inc)), l.basis_class(1), c};
}

const DeclaredDivisor kQuadrics{{2, -1}, "D", "quadrics through the double curve"};

}  // namespace

TEST_CASE("sextic ray numbers") {
  const auto t = sextic_threefold();
  const auto& l = t.surface_lattice();
  const auto f1 = l.make_class({1, 0});
  const auto f2 = l.make_class({0, 1});
  CHECK(to_string(t.strict_transform()) == "6H - 2E");
  CHECK(to_string(t.canonical()) == "-4H + E");
  CHECK(t.sing_points == Integer(4));
  CHECK(st_dot(t, f1) == 2);
  CHECK(st_dot(t, f2) == -2);
  CHECK(kt_dot(t, f1) == -4);
  CHECK(kt_dot(t, f2) == 0);
  CHECK_FALSE(is_nef_on(t, {f1, f2}));
  CHECK_FALSE(fibration_numerology(t));
  const auto v = classify_second_ray(t, f2);
  CHECK(v.kind == RayKind::kFlopWallCanonicalFano);
  CHECK_FALSE(v.assumptions.empty());
  CHECK_FALSE(fano_check(t, {f2}));
  CHECK(classify_second_ray(t, f1).kind == RayKind::kUnclassified);
}

TEST_CASE("Bordiga good model premises") {
  const auto [t, m, c] = bordiga_threefold();
  CHECK(st_dot(t, m) == 0);
  CHECK(kt_dot(t, m) == -1);
  CHECK(st_dot(t, c) == 2);
  CHECK(kt_dot(t, c) == -3);
  CHECK(is_nef_on(t, {m, c}));
  CHECK(fano_check(t, {m, c}));
  const auto v = classify_second_ray(t, m, {kQuadrics});
  CHECK(v.kind == RayKind::kBirationalContractionFano);
  REQUIRE(v.witness);
  CHECK(v.witness->label == "D");
  CHECK(t.dot(kQuadrics.divisor, m) == -1);
  // Without the declared divisor the numerology decides: 36 != 28.
  CHECK(classify_second_ray(t, m).kind == RayKind::kUnclassified);
}

TEST_CASE("effective threshold") {
  const auto [t, m, c] = bordiga_threefold();
  const auto rho = effective_threshold(t, kQuadrics.divisor);
  REQUIRE(rho);
  CHECK(*rho == 1);
  // Oracle: S + tK = (6 - 4t) H + (t - 2) E = x D + y E with x, y >= 0.
  for (int num = 0; num <= 8; ++num) {
    const Rational s = Rational(num) / 4;
    const Rational x = (6 - 4 * s) / 2;
    const Rational y = s - 2 + x;
    CHECK(((x >= 0 && y >= 0) == (s <= *rho)));
  }
  CHECK_THROWS_AS(effective_threshold(t, {0, 1}), Error);
  // A divisor that does not contain S_T in its cone with E.
  CHECK_FALSE(effective_threshold(t, {1, 0}));
}

TEST_CASE("dp6 fibration") {
  const auto d = make_dp6();
  std::vector<Incidence> inc;
  for (const auto& line : standard_minus_one_classes(d.lattice)) inc.push_back({line, 3, "line"});
  const auto t = make_blowup_threefold(make_projection_model(d, inc));
  const auto line = d.lattice.basis_class(1);
  CHECK(st_dot(t, line) == 0);
  CHECK(kt_dot(t, line) == -1);
  CHECK(fibration_numerology(t));
  CHECK(classify_second_ray(t, line, {}, standard_minus_one_classes(d.lattice)).kind == RayKind::kFibration);
}

TEST_CASE("configuration errors") {
  const auto t = sextic_threefold();
  CHECK_THROWS_AS(is_nef_on(t, {}), Error);
  CHECK_THROWS_AS(fano_check(t, {}), Error);
  CHECK_THROWS_AS(st_dot(t, make_plane_lattice().make_class({1})), Error);
}
