#include "doctest.h"

#include "cremona/error.hpp"
#include "cremona/obstruction.hpp"
#include "oracle/brute_force.hpp"
#include "properties.hpp"

using namespace cremona;

namespace {

FeasibilitySystem sextic_system() {
  const SZModel sz = make_sz();
  const auto s = make_f0_sextic();
  return build_obstruction_system(sz, Integer(6) * sz.from_f0(s.polarization), sz.from_plane(1),
                                  sz.from_f0(s.lattice.make_class({4, 8})));
}

FeasibilitySystem system(std::vector<std::vector<long long>> rows, std::vector<long long> constants) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < rows.front().size(); ++i) names.push_back("x" + std::to_string(i + 1));
  std::vector<LinearEquation> eqs;
  for (std::size_t j = 0; j < rows.size(); ++j) {
    LinearEquation eq;
    for (auto v : rows[j]) eq.coeffs.emplace_back(v);
    eq.constant = constants[j];
    eqs.push_back(eq);
  }
  return FeasibilitySystem(names, eqs);
}

}  // namespace

TEST_CASE("restriction system for the sextic scroll") {
  const auto s = sextic_system();
  REQUIRE(s.equations().size() == 3);
  CHECK(s.unknowns() == obstruction_unknowns());
  CHECK(render_equation(s, s.equations()[0]) == "e - s1 + b1 = 2");
  CHECK(render_equation(s, s.equations()[1]) == "e - s2 + b2 = -2");
  CHECK(render_equation(s, s.equations()[2]) == "e - s1 - s2 - a = 2");

  const auto cert = solve_nonneg(s, 50);
  REQUIRE(cert.status() == FeasibilityStatus::kInfeasible);
  CHECK(cert.contradiction() == ContradictionKind::kNegativeNonnegCombination);
  const auto& chain = cert.chain();
  REQUIRE(chain.size() == 5);
  CHECK(render_equation(s, chain[0].result) == "s2 + a + b1 = 0");
  CHECK(chain[0].terms == std::vector<std::pair<std::size_t, Integer>>{{0, 1}, {2, -1}});
  CHECK(render_equation(s, chain[1].result) == "s2 = 0");
  CHECK(render_equation(s, chain[2].result) == "a = 0");
  CHECK(render_equation(s, chain[3].result) == "b1 = 0");
  CHECK(render_equation(s, chain[4].result) == "e + b2 = -2");
  CHECK(render_solved(s, chain[4].result) == "e = -2 - b2");
  CHECK(replay(s, cert).ok);
  CHECK(render_transcript(s, cert).find("[(1) - (3)]") != std::string::npos);

  // Brute force over the same bound agrees.
  CHECK_FALSE(oracle::brute_force(props::to_oracle(s), 50));
}

TEST_CASE("tampered certificates do not replay") {
  const auto s = sextic_system();
  const auto cert = solve_nonneg(s, 50);
  auto chain = cert.chain();
  chain[0].terms[1].second = 1;
  CHECK_THROWS_AS(FeasibilityCertificate::infeasible(s, chain, ContradictionKind::kNegativeNonnegCombination), Error);
  chain = cert.chain();
  chain[4].result.constant = 2;
  CHECK_THROWS_AS(FeasibilityCertificate::infeasible(s, chain, ContradictionKind::kNegativeNonnegCombination), Error);
  CHECK_THROWS_AS(FeasibilityCertificate::feasible(s, make_ints({0, 0, 0, 0, 0, 0})), Error);
}

TEST_CASE("feasible, divisibility and unknown outcomes") {
  const auto feasible = system({{1, 1, 0}, {0, 1, 1}}, {5, 3});
  const auto f = solve_nonneg(feasible, 10);
  REQUIRE(f.status() == FeasibilityStatus::kFeasible);
  CHECK(feasible.satisfied_by(f.witness()));
  CHECK(replay(feasible, f).ok);

  const auto parity = system({{2, -2}}, {3});
  const auto p = solve_nonneg(parity, 10);
  REQUIRE(p.status() == FeasibilityStatus::kInfeasible);
  CHECK(p.contradiction() == ContradictionKind::kDivisibility);
  CHECK(replay(parity, p).ok);

  // x1 - x2 = 20 needs x1 >= 20.
  const auto far = system({{1, -1}}, {20});
  const auto u = solve_nonneg(far, 10);
  CHECK(u.status() == FeasibilityStatus::kUnknownUpToBound);
  CHECK(u.bound() == 10);
  CHECK(solve_nonneg(far, 20).status() == FeasibilityStatus::kFeasible);

  CHECK_THROWS_AS(solve_nonneg(far, -1), Error);
}

TEST_CASE("hidden Farkas combination") {
  // No single line is sign-uniform; 1*(1) + 1*(2) gives x1 + x3 = -1.
  const auto s = system({{1, 1, -1}, {0, -1, 2}}, {2, -3});
  const auto c = solve_nonneg(s, 20);
  REQUIRE(c.status() == FeasibilityStatus::kInfeasible);
  CHECK(replay(s, c).ok);
  CHECK_FALSE(oracle::brute_force(props::to_oracle(s), 40));
}

TEST_CASE("system validation") {
  CHECK_THROWS_AS(FeasibilitySystem({"x", "x"}, {}), Error);
  CHECK_THROWS_AS(FeasibilitySystem({"x", "y"}, {LinearEquation{make_ints({1}), 0}}), Error);
  const auto s = system({{1, 2}}, {4});
  CHECK(s.index_of("x2") == std::size_t{1});
  CHECK_FALSE(s.index_of("z"));
  CHECK(s.satisfied_by(make_ints({2, 1})));
  CHECK_FALSE(s.satisfied_by(make_ints({6, -1})));
}

TEST_CASE("obstruction builder predicates") {
  const SZModel sz = make_sz();
  const auto s = make_f0_sextic();
  const auto good_s = Integer(6) * sz.from_f0(s.polarization);
  const auto good_e = sz.from_f0(s.lattice.make_class({4, 8}));
  auto code = [&](const DivisorClass& a, const DivisorClass& h, const DivisorClass& e) {
    try {
      build_obstruction_system(sz, a, h, e);
    } catch (const Error& err) {
      return err.code();
    }
    return ErrorCode::kIo;
  };
  CHECK(code(sz.lattice().make_class({1, 1, 1}), sz.from_plane(1), good_e) == ErrorCode::kPredicate);
  CHECK(code(good_s, sz.lattice().make_class({1, 0, 1}), good_e) == ErrorCode::kPredicate);
  CHECK(code(good_s, sz.from_plane(1), sz.lattice().make_class({1, 1, 1})) == ErrorCode::kPredicate);
}
