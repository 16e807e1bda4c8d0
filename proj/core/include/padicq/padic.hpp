#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include <gmpxx.h>

#include "padicq/errors.hpp"
#include "padicq/prime_context.hpp"

namespace padicq {

/// Truncated p-adic number p^v * u + O(p^(v+r)) with p not dividing u.
///
/// Zeros come in two flavours. The exact zero has infinite valuation and is
/// absorbing under multiplication. An inexact zero O(p^k) is what full
/// cancellation leaves behind; its valuation() reports k, which is a lower
/// bound on the true valuation.
class PAdicNumber {
 public:
  /// Exact zero with an unspecified prime; adopts the prime of any operand.
  PAdicNumber() = default;

  static PAdicNumber exact_zero(unsigned long p);
  /// O(p^absolute_precision).
  static PAdicNumber zero(unsigned long p, long absolute_precision);
  static PAdicNumber one(unsigned long p, long absolute_precision);

  /// a to absolute precision ctx.precision(). Exact values never lose
  /// information: if v_p(a) >= M one significant digit is still kept.
  static PAdicNumber from_rational(const mpq_class& a, const PrimeContext& ctx);
  static PAdicNumber from_rational(const mpq_class& a, unsigned long p, long absolute_precision);
  /// The class of a modulo p^absolute_precision (a is only known to that precision).
  static PAdicNumber from_residue(const mpz_class& a, unsigned long p, long absolute_precision);

  unsigned long prime() const noexcept { return p_; }
  /// v_p; kInfiniteValuation for the exact zero, k for O(p^k).
  long valuation() const noexcept { return valuation_; }
  /// 0 for zeros.
  long relative_precision() const noexcept { return rel_precision_; }
  long absolute_precision() const noexcept;
  const mpz_class& unit() const noexcept { return unit_; }

  bool is_zero() const noexcept { return unit_ == 0; }
  bool is_exact_zero() const noexcept { return unit_ == 0 && valuation_ == kInfiniteValuation; }

  PAdicNumber operator-() const;
  PAdicNumber& operator+=(const PAdicNumber& y);
  PAdicNumber& operator-=(const PAdicNumber& y);
  PAdicNumber& operator*=(const PAdicNumber& y);
  PAdicNumber& operator/=(const PAdicNumber& y);

  /// Multiplies by an exact integer; relative precision is unchanged.
  PAdicNumber scaled(const mpz_class& k) const;
  PAdicNumber pow(std::uint64_t e) const;
  PAdicNumber inverse() const;

  /// Drops digits so that the absolute precision is at most k.
  PAdicNumber reduced(long k) const;

  /// Integer representative in [0, p^k); requires v >= 0 and k <= absolute precision.
  mpz_class residue(long k) const;
  /// The exact rational p^v * u (zero for zeros).
  mpq_class lift() const;

  /// "u * p^v + O(p^(v+r))"; "0" for the exact zero; "O(p^k)" for inexact zeros.
  std::string to_string() const;

  /// Equal iff valuations match and units agree mod p^min(r1, r2). An
  /// inexact zero O(p^k) equals anything of valuation >= k.
  friend bool operator==(const PAdicNumber& x, const PAdicNumber& y);

 private:
  PAdicNumber(unsigned long p, long v, long r, mpz_class u)
      : p_(p), valuation_(v), rel_precision_(r), unit_(std::move(u)) {}
  /// Builds p^base * s + O(p^absolute) from an arbitrary integer s.
  static PAdicNumber normalize(unsigned long p, long base, mpz_class s, long absolute);

  unsigned long p_ = 0;
  long valuation_ = kInfiniteValuation;
  long rel_precision_ = 0;
  mpz_class unit_ = 0;
};

PAdicNumber operator+(PAdicNumber x, const PAdicNumber& y);
PAdicNumber operator-(PAdicNumber x, const PAdicNumber& y);
PAdicNumber operator*(PAdicNumber x, const PAdicNumber& y);
PAdicNumber operator/(PAdicNumber x, const PAdicNumber& y);

std::ostream& operator<<(std::ostream& os, const PAdicNumber& x);

enum class ArithKind { add, sub, mul, div };
PAdicNumber arith(const PAdicNumber& x, const PAdicNumber& y, ArithKind kind);

inline long valuation(const PAdicNumber& x) noexcept { return x.valuation(); }

/// v_p(x - y), capped by the common absolute precision.
long difference_valuation(const PAdicNumber& x, const PAdicNumber& y);

/// [x]_base = 1 + base + ... + base^(x-1), for an exact rational base.
/// Internal precision is raised until the result carries ctx.precision()
/// relative digits.
PAdicNumber q_bracket(std::uint64_t x, const mpq_class& base, const PrimeContext& ctx);
/// Closed form (1 - base^x) / (1 - base) with ordinary precision propagation.
PAdicNumber q_bracket(std::uint64_t x, const PAdicNumber& base);

/// Logarithm on 1-units, correct to the absolute precision of x.
PAdicNumber padic_log(const PAdicNumber& x);

/// (p-1)-th root of unity congruent to a mod p, to precision k.
mpz_class teichmuller_residue(const mpz_class& a, unsigned long p, long k);
PAdicNumber teichmuller(const mpz_class& a, const PrimeContext& ctx);

/// log q to absolute precision `absolute` (exact zero when q = 1).
PAdicNumber log_q(const PrimeContext& ctx, long absolute);
/// c_q = (q - 1) / log q to absolute precision `absolute`; 1 when q = 1.
PAdicNumber c_q(const PrimeContext& ctx, long absolute);

}  // namespace padicq
