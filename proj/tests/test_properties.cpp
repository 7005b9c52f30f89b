#include "doctest.h"

#include "properties.hpp"

namespace {

void expect(const props::Result& r) {
  INFO(r.name << ": " << r.failures << " failures, first: " << r.first_failure);
  CHECK(r.cases >= r.min_cases);
  CHECK(r.failures == 0);
}

}  // namespace

TEST_CASE("pairing bilinearity and symmetry") { expect(props::pairing_bilinearity_symmetry()); }
TEST_CASE("blow-up isometry") { expect(props::blowup_isometry()); }
TEST_CASE("adjunction parity") { expect(props::adjunction_parity()); }
TEST_CASE("from_f0 isometry") { expect(props::f0_isometry()); }
TEST_CASE("double-point class consistency") { expect(props::gamma_w_consistency()); }
TEST_CASE("solver against brute force") { expect(props::solver_vs_oracle()); }
TEST_CASE("solver permutation invariance") { expect(props::solver_permutation_invariance()); }
