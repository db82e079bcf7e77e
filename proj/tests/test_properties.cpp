#include <doctest.h>

#include "property_checks.hpp"

using namespace fracalc::checks;

namespace {

void expect(const CheckResult& r) {
  INFO(r.name << ": " << r.detail);
  CHECK(r.cases > 0);
  CHECK(r.ok);
}

}  // namespace

TEST_CASE("power rule identity and exact termination") { expect(power_rule_grid()); }
TEST_CASE("integer orders collapse to one derivative") { expect(integer_collapse()); }
TEST_CASE("order zero is the identity") { expect(identity_at_zero()); }
TEST_CASE("negative order is the fractional integral") { expect(duality()); }
TEST_CASE("double-sum form matches the regrouped series") { expect(binomial_form_agreement()); }
TEST_CASE("linearity") { expect(linearity()); }
TEST_CASE("two-fold integral coefficients") { expect(nfold_coefficient_law()); }
TEST_CASE("series, quadrature and GL agree for exp") { expect(cross_method()); }
TEST_CASE("product rule on polynomial pairs") { expect(product_rule()); }
TEST_CASE("semigroup on monomials") { expect(semigroup()); }
