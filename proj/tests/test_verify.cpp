#include <gtest/gtest.h>

#include "padicq/errors.hpp"
#include "padicq/io.hpp"
#include "padicq/verify.hpp"

namespace padicq {
namespace {

nlohmann::json without_timing(const VerificationReport& r) {
  auto j = to_json(r);
  j.erase("timing");
  return j;
}

TEST(VerifyShiftIdentity, PolynomialAndExponential) {
  const PrimeContext ctx(3, 12, mpq_class(4));
  for (const auto& f : {UDFunction::monomial(2), UDFunction::exp_base(4, 3)}) {
    const auto r = verify_theorem1(f, {1, 2, 3}, ctx, 6);
    EXPECT_TRUE(r.passed()) << to_text(r);
    EXPECT_EQ(r.instances.size(), 3u);
  }
  EXPECT_THROW(verify_theorem1(UDFunction::monomial(1), {0}, ctx, 6), DomainError);
}

TEST(VerifyFermionicShiftIdentity, OddShiftsAddTheSpecializedForm) {
  const PrimeContext ctx(5, 12, mpq_class(6));
  const auto r = verify_theorem3(UDFunction::monomial(3), {1, 2, 3}, std::nullopt, ctx, 6);
  EXPECT_TRUE(r.passed()) << to_text(r);
  EXPECT_EQ(r.instances.size(), 5u);
  const auto twisted = verify_theorem3(UDFunction::monomial(2), {1, 2}, quadratic_character(3, ctx), ctx, 6);
  EXPECT_TRUE(twisted.passed()) << to_text(twisted);
  EXPECT_EQ(twisted.params["d"], 3);
}

TEST(VerifyWitt, BothKindsWithAndWithoutCharacter) {
  const PrimeContext ctx(5, 18, mpq_class(6));
  for (IntegralKind kind : {IntegralKind::bosonic, IntegralKind::fermionic}) {
    EXPECT_TRUE(verify_witt(4, kind, std::nullopt, ctx, 6).passed());
    EXPECT_TRUE(verify_witt(4, kind, quadratic_character(3, ctx), ctx, 6).passed());
  }
  const PrimeContext classical(3, 12);
  EXPECT_TRUE(verify_witt(5, IntegralKind::bosonic, quadratic_character(5, classical), classical, 6).passed());
}

TEST(VerifyPrintedTranslation, PrintedFormMissesByThePredictedResidual) {
  const PrimeContext ctx(3, 12, mpq_class(4));
  const auto r = verify_eq2_as_printed(ctx, 6);
  EXPECT_TRUE(r.passed()) << to_text(r);
  ASSERT_EQ(r.instances.size(), 6u);
  for (const auto& inst : r.instances) {
    if (inst.details["form"] == "corrected") {
      EXPECT_TRUE(inst.pass) << inst.label;
    } else if (inst.details["f"] == "poly:0,1") {
      EXPECT_FALSE(inst.pass);
      EXPECT_FALSE(inst.expected_pass);
      EXPECT_GE(inst.details["residual_vs_predicted_valuation"].get<long>(), 6);
    }
  }
}

TEST(Verify, ThresholdFloor) {
  const PrimeContext ctx(3, 12, mpq_class(4));
  EXPECT_THROW(verify_eq2_as_printed(ctx, 3), DomainError);
  EXPECT_THROW(verify_witt(2, IntegralKind::bosonic, std::nullopt, ctx, 2), DomainError);
}

TEST(Verify, ReportsAreDeterministicAcrossWorkerCounts) {
  const PrimeContext ctx(3, 12, mpq_class(4));
  VerifyOptions many;
  many.workers = 4;
  const auto a = verify_witt(4, IntegralKind::fermionic, quadratic_character(5, ctx), ctx, 6);
  const auto b = verify_witt(4, IntegralKind::fermionic, quadratic_character(5, ctx), ctx, 6, many);
  EXPECT_EQ(without_timing(a).dump(), without_timing(b).dump());
}

}  // namespace
}  // namespace padicq
