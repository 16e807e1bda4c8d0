#include <gtest/gtest.h>

#include "properties.hpp"

namespace padicq::testing {
namespace {

void expect_property(const PropertyResult& r) {
  EXPECT_GE(r.cases, 200u) << r.name;
  EXPECT_EQ(r.failures, 0u) << r.name << ": " << r.first_failure;
}

TEST(Properties, PadicRingAxioms) { expect_property(padic_ring_axioms(kPropertySeed, kPropertyCases)); }
TEST(Properties, LogHomomorphism) { expect_property(log_homomorphism(kPropertySeed + 1, kPropertyCases)); }
TEST(Properties, TeichmullerMultiplicativity) {
  expect_property(teichmuller_multiplicativity(kPropertySeed + 2, kPropertyCases));
}
TEST(Properties, HurwitzRingAxioms) { expect_property(hurwitz_ring_axioms(kPropertySeed + 3, kPropertyCases)); }
TEST(Properties, HurwitzInversion) { expect_property(hurwitz_inversion(kPropertySeed + 4, kPropertyCases)); }
TEST(Properties, ConvolutionOracle) { expect_property(convolution_oracle(kPropertySeed + 5, kPropertyCases)); }
TEST(Properties, CharacterMultiplicativity) {
  expect_property(character_multiplicativity(kPropertySeed + 6, kPropertyCases));
}
TEST(Properties, CharacterOrthogonality) {
  expect_property(character_orthogonality(kPropertySeed + 7, kPropertyCases));
}

}  // namespace
}  // namespace padicq::testing
