#include <gtest/gtest.h>

#include "oracles.hpp"
#include "padicq/errors.hpp"
#include "padicq/qnumbers.hpp"

namespace padicq {
namespace {

PAdicNumber oracle_log(const mpq_class& q, unsigned long p, long k) {
  return PAdicNumber::from_residue(oracle::log_residue(q, p, k), p, k);
}

PAdicNumber from_split(const oracle::LogSplit& s, std::size_t n, const PAdicNumber& log, unsigned long p, long k) {
  return log * PAdicNumber::from_rational(s.log_part[n], p, k) + PAdicNumber::from_rational(s.rational_part[n], p, k);
}

std::vector<long> table_of(const DirichletCharacter& chi) {
  std::vector<long> t;
  for (unsigned long a = 0; a < chi.modulus(); ++a) {
    const auto& v = chi.evaluate(static_cast<std::int64_t>(a));
    t.push_back(v.is_zero() ? 0 : (v == PAdicNumber::one(chi.prime(), 4) ? 1 : -1));
  }
  return t;
}

TEST(QBernoulli, MatchesRationalSeriesOracle) {
  for (unsigned long p : {3ul, 5ul, 7ul}) {
    for (const mpq_class& q : {mpq_class(1 + static_cast<long>(p)), mpq_class(1 + static_cast<long>(p), 1 + 2 * static_cast<long>(p))}) {
      const long m = 14;
      const PrimeContext ctx(p, m, q);
      const auto table = q_bernoulli(8, ctx);
      ASSERT_EQ(table.entries.size(), 9u);
      const auto split = oracle::q_bernoulli(q, 8);
      const auto log = oracle_log(q, p, m + 30);
      for (std::size_t n = 0; n <= 8; ++n) {
        EXPECT_EQ(table.entries[n], from_split(split, n, log, p, m + 30)) << "p=" << p << " q=" << q << " n=" << n;
        EXPECT_GE(table.precisions()[n], m) << n;
      }
    }
  }
}

TEST(QBernoulli, ConstantTermAndFirstMoment) {
  const mpq_class q(4);
  const PrimeContext ctx(3, 12, q);
  const auto table = q_bernoulli(1, ctx);
  const auto log = oracle_log(q, 3, 30);
  const auto q_minus_one = PAdicNumber::from_rational(q - 1, 3, 30);
  EXPECT_EQ(table.entries[0], log / q_minus_one);
  // c_q B_1 = 1/log q - q/(q - 1).
  const auto cq = q_minus_one / log;
  EXPECT_EQ(cq * table.entries[1], PAdicNumber::one(3, 30) / log - PAdicNumber::from_rational(q / (q - 1), 3, 30));
  EXPECT_THROW(q_bernoulli(3, PrimeContext(3, 12)), DomainError);
}

TEST(ClassicalBernoulli, AkiyamaTanigawa) {
  const auto ours = classical_bernoulli(20);
  const auto theirs = oracle::bernoulli(20);
  for (std::size_t n = 0; n <= 20; ++n) EXPECT_EQ(ours[n], theirs[n]) << n;
  EXPECT_EQ(ours[1], mpq_class(-1, 2));
  EXPECT_EQ(ours[12], mpq_class(-691, 2730));
  const auto table = classical_bernoulli_table(6, PrimeContext(5, 8));
  EXPECT_EQ(table.exact.size(), 7u);
}

TEST(GeneralizedQBernoulli, TrivialCharacterReducesToQBernoulli) {
  const PrimeContext ctx(5, 12, mpq_class(6));
  const auto a = q_bernoulli(6, ctx);
  const auto b = generalized_q_bernoulli(trivial_character(ctx), 6, ctx);
  for (std::size_t n = 0; n <= 6; ++n) EXPECT_EQ(a.entries[n], b.entries[n]) << n;
}

TEST(GeneralizedQBernoulli, MatchesRationalSeriesOracle) {
  for (auto [p, d] : {std::pair{3ul, 5ul}, std::pair{5ul, 3ul}, std::pair{7ul, 15ul}}) {
    const mpq_class q(1 + static_cast<long>(p));
    const long m = 12;
    const PrimeContext ctx(p, m, q);
    const auto chi = quadratic_character(d, ctx);
    const auto table = generalized_q_bernoulli(chi, 6, ctx);
    const auto split = oracle::generalized_q_bernoulli(table_of(chi), q, 6);
    const auto log = oracle_log(q, p, m + 30);
    for (std::size_t n = 0; n <= 6; ++n) {
      EXPECT_EQ(table.entries[n], from_split(split, n, log, p, m + 30)) << "p=" << p << " d=" << d << " n=" << n;
    }
  }
}

TEST(GeneralizedQBernoulli, QuadraticModThreeConstantTerm) {
  // B_{0,q,chi} = -q log q / [3]_q.
  const mpq_class q(6);
  const PrimeContext ctx(5, 12, q);
  const auto table = generalized_q_bernoulli(quadratic_character(3, ctx), 0, ctx);
  const auto expected = -PAdicNumber::from_rational(q, 5, 30) * oracle_log(q, 5, 30) /
                        PAdicNumber::from_rational(1 + q + q * q, 5, 30);
  EXPECT_EQ(table.entries[0], expected);
}

TEST(FrobeniusEuler, MatchesRationalSeriesOracle) {
  for (unsigned long p : {3ul, 5ul}) {
    const PrimeContext ctx(p, 12);
    for (const mpq_class& u : {mpq_class(-1), mpq_class(-1, 4), mpq_class(2, 7), mpq_class(-1, 6)}) {
      const auto table = frobenius_euler(u, 7, ctx);
      const auto expected = oracle::frobenius_euler(u, 7);
      for (std::size_t n = 0; n <= 7; ++n) {
        EXPECT_EQ(table.entries[n], PAdicNumber::from_rational(expected[n], p, 40)) << "u=" << u << " n=" << n;
      }
    }
  }
  EXPECT_THROW(frobenius_euler(mpq_class(1), 3, PrimeContext(3, 5)), DomainError);
}

TEST(FrobeniusEuler, FirstValue) {
  // H_1(u) = 1/(u - 1); at u = -1/q this is -q/(1 + q).
  const mpq_class q(6);
  const PrimeContext ctx(5, 10, q);
  const auto table = frobenius_euler(mpq_class(-1 / q), 1, ctx);
  EXPECT_EQ(table.entries[1], PAdicNumber::from_rational(-q / (1 + q), 5, 30));
}

TEST(GeneralizedFrobeniusEuler, MatchesRationalSeriesOracle) {
  for (auto [p, d] : {std::pair{3ul, 5ul}, std::pair{5ul, 3ul}, std::pair{3ul, 1ul}}) {
    const mpq_class q(1 + static_cast<long>(p));
    const PrimeContext ctx(p, 12, q);
    const auto chi = d == 1 ? trivial_character(ctx) : quadratic_character(d, ctx);
    const auto table = generalized_frobenius_euler(chi, 6, ctx);
    const auto expected = oracle::generalized_frobenius_euler(table_of(chi), q, 6);
    for (std::size_t n = 0; n <= 6; ++n) {
      EXPECT_EQ(table.entries[n], PAdicNumber::from_rational(expected[n], p, 40)) << "d=" << d << " n=" << n;
    }
  }
  const PrimeContext ctx(5, 8, mpq_class(6));
  const auto even = from_table(4, {IntValue{0}, IntValue{1}, IntValue{0}, IntValue{-1}}, ctx);
  EXPECT_THROW(generalized_frobenius_euler(even, 3, ctx), DomainError);
}

TEST(Moments, ClassicalCases) {
  const PrimeContext ctx(5, 10);
  const auto bosonic = moments(6, IntegralKind::bosonic, std::nullopt, ctx);
  const auto fermionic = moments(6, IntegralKind::fermionic, std::nullopt, ctx);
  const auto b = oracle::bernoulli(6);
  const auto e = oracle::frobenius_euler(-1, 6);
  for (std::size_t n = 0; n <= 6; ++n) {
    EXPECT_EQ(bosonic[n], PAdicNumber::from_rational(b[n], 5, 30)) << n;
    EXPECT_EQ(fermionic[n], PAdicNumber::from_rational(e[n], 5, 30)) << n;
  }
  EXPECT_EQ(moment(3, IntegralKind::fermionic, std::nullopt, ctx), fermionic[3]);
}

TEST(Moments, ZerothBosonicMomentIsOne) {
  const PrimeContext ctx(3, 10, mpq_class(4));
  EXPECT_EQ(moment(0, IntegralKind::bosonic, std::nullopt, ctx), PAdicNumber::one(3, 10));
  EXPECT_EQ(moment(0, IntegralKind::fermionic, std::nullopt, ctx), PAdicNumber::one(3, 10));
}

}  // namespace
}  // namespace padicq
