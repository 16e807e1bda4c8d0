#include <gtest/gtest.h>

#include "oracles.hpp"
#include "padicq/errors.hpp"
#include "padicq/integrator.hpp"

namespace padicq {
namespace {

using RationalFn = std::function<mpq_class(std::uint64_t)>;

mpq_class eval_poly(const std::vector<mpq_class>& c, std::uint64_t j) {
  mpq_class x(mpz_class(static_cast<unsigned long>(j)));
  mpq_class acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

struct Case {
  std::string name;
  UDFunction f;
  RationalFn exact;
  std::uint64_t d;
};

std::vector<Case> cases_for(const PrimeContext& ctx) {
  const unsigned long p = ctx.prime();
  const mpq_class r(1 + static_cast<long>(p));
  const unsigned long chi_mod = p == 3 ? 5 : 3;
  const auto chi = quadratic_character(chi_mod, ctx);
  const std::vector<mpq_class> cubic{1, -2, 0, mpq_class(3, 2)};
  return {
      {"x", UDFunction::monomial(1), [](std::uint64_t j) -> mpq_class { return eval_poly({0, 1}, j); }, 1},
      {"cubic", UDFunction::poly(cubic), [cubic](std::uint64_t j) -> mpq_class { return eval_poly(cubic, j); }, 1},
      {"expbase", UDFunction::exp_base(r, p),
       [r](std::uint64_t j) -> mpq_class {
         mpq_class acc = 1;
         for (std::uint64_t i = 0; i < j; ++i) acc *= r;
         return acc;
       },
       1},
      {"shifted x^2", UDFunction::shifted(UDFunction::monomial(2), 2),
       [](std::uint64_t j) -> mpq_class { return eval_poly({0, 0, 1}, j + 2); }, 1},
      {"chi x", UDFunction::char_poly(chi, {0, 1}),
       [chi_mod](std::uint64_t j) -> mpq_class {
         return mpq_class(oracle::jacobi_euler(static_cast<long>(j), chi_mod)) * eval_poly({0, 1}, j);
       },
       chi_mod},
      {"x over d = 7", UDFunction::monomial(1), [](std::uint64_t j) -> mpq_class { return eval_poly({0, 1}, j); }, 7},
  };
}

TEST(RiemannSum, EqualsExactRationalSum) {
  for (unsigned long p : {3ul, 5ul}) {
    const mpq_class pp(static_cast<long>(p));
    for (const mpq_class& q : {mpq_class(1), mpq_class(1 + pp), mpq_class((1 + pp) / (1 + 2 * pp))}) {
      const PrimeContext ctx(p, 14, q == 1 ? std::nullopt : std::optional<mpq_class>(q));
      for (const auto& c : cases_for(ctx)) {
        for (unsigned level : {1u, 2u, 3u}) {
          for (IntegralKind kind : {IntegralKind::bosonic, IntegralKind::fermionic}) {
            const mpq_class expected =
                oracle::riemann_sum(c.exact, q, kind == IntegralKind::fermionic, p, c.d, level);
            const PAdicNumber got = riemann_sum(c.f, c.d, level, kind, ctx);
            EXPECT_EQ(got, PAdicNumber::from_rational(expected, p, 60))
                << c.name << " p=" << p << " q=" << q << " N=" << level << " " << to_string(kind);
            EXPECT_GE(got.absolute_precision(), 14) << c.name;
          }
        }
      }
    }
  }
}

TEST(RiemannSum, ConstantFunctionHasSumOne) {
  const PrimeContext ctx(7, 10, mpq_class(15));
  for (unsigned level = 0; level <= 4; ++level) {
    EXPECT_EQ(riemann_sum_bosonic(UDFunction::monomial(0), 1, level, ctx), PAdicNumber::one(7, 10));
    EXPECT_EQ(riemann_sum_fermionic(UDFunction::monomial(0), 1, level, ctx), PAdicNumber::one(7, 10));
  }
}

TEST(RiemannSum, WorkerCountDoesNotChangeTheResult) {
  const PrimeContext ctx(5, 12, mpq_class(6));
  const auto f = UDFunction::poly({3, 1, 4, 1});
  for (IntegralKind kind : {IntegralKind::bosonic, IntegralKind::fermionic}) {
    const auto one = riemann_sum(f, 3, 5, kind, ctx, 1);
    for (unsigned w : {2u, 3u, 4u, 8u}) {
      const auto many = riemann_sum(f, 3, 5, kind, ctx, w);
      EXPECT_EQ(many.unit(), one.unit());
      EXPECT_EQ(many.valuation(), one.valuation());
      EXPECT_EQ(many.relative_precision(), one.relative_precision());
    }
  }
}

TEST(RiemannSum, DomainErrors) {
  const PrimeContext ctx(5, 10, mpq_class(6));
  const auto chi = quadratic_character(3, ctx);
  EXPECT_THROW(riemann_sum_fermionic(UDFunction::monomial(1), 2, 2, ctx), DomainError);
  EXPECT_THROW(riemann_sum_bosonic(UDFunction::monomial(1), 5, 2, ctx), DomainError);
  EXPECT_THROW(riemann_sum_bosonic(UDFunction::char_poly(chi, {1}), 2, 2, ctx), DomainError);
  // Denominators divisible by p are allowed; the sum is rescaled.
  EXPECT_EQ(riemann_sum_bosonic(UDFunction::poly({mpq_class(1, 5)}), 1, 2, ctx),
            PAdicNumber::from_rational(mpq_class(1, 5), 5, 20));
  EXPECT_THROW(riemann_sum_bosonic(UDFunction::monomial(1), 0, 2, ctx), DomainError);
  EXPECT_NO_THROW(riemann_sum_bosonic(UDFunction::char_poly(chi, {1}), 6, 2, ctx));
}

TEST(MeasureOfBall, TotalMassIsOne) {
  const PrimeContext ctx(3, 10, mpq_class(4));
  PAdicNumber total = PAdicNumber::exact_zero(3);
  for (std::uint64_t j = 0; j < 27; ++j) total += measure_of_ball(j, 3, ctx);
  EXPECT_EQ(total, PAdicNumber::one(3, 10));
  EXPECT_THROW(measure_of_ball(27, 3, ctx), DomainError);
}

PAdicNumber log_from_oracle(const mpq_class& q, unsigned long p, long k) {
  return PAdicNumber::from_residue(oracle::log_residue(q, p, k), p, k);
}

TEST(Integrate, BosonicIdentityClosedForm) {
  // I_q(x) = 1/log q - q/(q - 1).
  for (unsigned long p : {3ul, 5ul}) {
    const mpq_class q(1 + static_cast<long>(p));
    const PrimeContext ctx(p, 12, q);
    const auto r = integrate(UDFunction::monomial(1), 1, IntegralKind::bosonic, 8, ctx);
    const auto expected = PAdicNumber::one(p, 20) / log_from_oracle(q, p, 22) -
                          PAdicNumber::from_rational(q / (q - 1), p, 20);
    EXPECT_GE(difference_valuation(r.value, expected), 8) << "p=" << p;
    EXPECT_GE(r.certified_valuation, 8);
    EXPECT_EQ(r.trajectory.size(), r.level - IntegrateOptions{}.first_level);
  }
}

TEST(Integrate, FermionicIdentityClosedForm) {
  for (unsigned long p : {3ul, 5ul, 7ul}) {
    const mpq_class q(1 + 2 * static_cast<long>(p));
    const PrimeContext ctx(p, 10, q);
    const auto r = integrate(UDFunction::monomial(1), 1, IntegralKind::fermionic, 8, ctx);
    EXPECT_GE(difference_valuation(r.value, PAdicNumber::from_rational(-q / (1 + q), p, 20)), 8) << "p=" << p;
  }
}

TEST(Integrate, ClassicalMomentsAreBernoulliAndEulerNumbers) {
  const auto bernoulli = oracle::bernoulli(6);
  const auto euler = oracle::frobenius_euler(-1, 6);
  for (unsigned long p : {3ul, 5ul}) {
    const PrimeContext ctx(p, 10);
    for (unsigned n = 0; n <= 6; ++n) {
      const auto b = integrate(UDFunction::monomial(n), 1, IntegralKind::bosonic, 6, ctx);
      EXPECT_GE(difference_valuation(b.value, PAdicNumber::from_rational(bernoulli[n], p, 20)), 6) << n;
      const auto e = integrate(UDFunction::monomial(n), 1, IntegralKind::fermionic, 6, ctx);
      EXPECT_GE(difference_valuation(e.value, PAdicNumber::from_rational(euler[n], p, 20)), 6) << n;
    }
  }
}

TEST(Integrate, ReportsTrajectoryOnFailure) {
  const PrimeContext ctx(3, 12, mpq_class(4));
  IntegrateOptions options;
  options.max_level = 4;
  try {
    integrate(UDFunction::monomial(2), 1, IntegralKind::bosonic, 9, ctx, options);
    FAIL() << "expected ConvergenceError";
  } catch (const ConvergenceError& e) {
    EXPECT_EQ(e.trajectory().size(), 2u);
    EXPECT_TRUE(e.monotone());
  }
  EXPECT_THROW(integrate(UDFunction::monomial(1), 1, IntegralKind::bosonic, 11, ctx), DomainError);
}

TEST(ParseUDFunction, Grammar) {
  const PrimeContext ctx(3, 8, mpq_class(4));
  const auto loader = [&ctx](const std::string&) { return quadratic_character(5, ctx); };
  EXPECT_EQ(evaluate_f(parse_ud_function("poly:1,2/5,3", ctx, loader), 2, ctx),
            PAdicNumber::from_rational(mpq_class(1 + mpq_class(4, 5) + 12), 3, 8));
  EXPECT_EQ(evaluate_f(parse_ud_function("shift:2:poly:0,1", ctx, loader), 0, ctx),
            PAdicNumber::from_rational(mpq_class(2), 3, 8));
  EXPECT_EQ(evaluate_f(parse_ud_function("expbase:4", ctx, loader), 3, ctx),
            PAdicNumber::from_rational(mpq_class(64), 3, 8));
  const auto twisted = parse_ud_function("chpoly:chi.json:0,1", ctx, loader);
  EXPECT_EQ(twisted.modulus(), 5u);
  EXPECT_EQ(evaluate_f(twisted, 2, ctx), PAdicNumber::from_rational(mpq_class(-2), 3, 8));
  for (const char* bad : {"", "poly", "foo:1", "poly:1,x", "expbase:2", "shift:x:poly:1", "shift:2", "chpoly:1"}) {
    EXPECT_THROW(parse_ud_function(bad, ctx, loader), DomainError) << bad;
  }
}

TEST(Derivative, SymbolicRules) {
  const PrimeContext ctx(5, 10, mpq_class(6));
  const auto df = derivative_of(UDFunction::poly({7, 0, 0, 2}), ctx);
  EXPECT_EQ(evaluate_f(df, 3, ctx), PAdicNumber::from_rational(mpq_class(54), 5, 10));
  const auto de = derivative_of(UDFunction::exp_base(6, 5), ctx);
  EXPECT_EQ(evaluate_f(de, 0, ctx), padic_log(PAdicNumber::from_rational(mpq_class(6), 5, 10)));
  const auto ds = derivative_of(UDFunction::shifted(UDFunction::monomial(2), 3), ctx);
  EXPECT_EQ(evaluate_f(ds, 1, ctx), PAdicNumber::from_rational(mpq_class(8), 5, 10));
  EXPECT_THROW(derivative_of(UDFunction::char_poly(quadratic_character(3, ctx), {0, 1}), ctx), DomainError);
}

TEST(TaylorShift, BinomialExpansion) {
  const auto c = taylor_shift({0, 0, 1}, 1);
  ASSERT_EQ(c.size(), 3u);
  EXPECT_EQ(c[0], 1);
  EXPECT_EQ(c[1], 2);
  EXPECT_EQ(c[2], 1);
}

}  // namespace
}  // namespace padicq
