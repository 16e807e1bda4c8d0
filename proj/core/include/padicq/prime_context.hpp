#pragma once

#include <cstdint>
#include <limits>
#include <optional>

#include <gmpxx.h>

namespace padicq {

/// Valuation of an exact zero.
inline constexpr long kInfiniteValuation = std::numeric_limits<long>::max();

bool is_prime(std::uint64_t n);

/// v_p(n); kInfiniteValuation for n = 0.
long valuation(const mpz_class& n, unsigned long p);
/// v_p(a/b) = v_p(a) - v_p(b); kInfiniteValuation for 0.
long valuation(const mpq_class& x, unsigned long p);

/// p^k as an exact integer, k >= 0.
mpz_class prime_power(unsigned long p, long k);

/// Fixed odd prime p, working absolute precision M, and the parameter q.
///
/// q is an exact rational with v_p(q - 1) >= 1, or the distinguished value
/// q = 1 (classical Volkenborn case). Passing the rational 1 selects q = 1.
class PrimeContext {
 public:
  PrimeContext(unsigned long p, long precision, std::optional<mpq_class> q = std::nullopt);

  unsigned long prime() const noexcept { return p_; }
  long precision() const noexcept { return precision_; }

  bool q_is_one() const noexcept { return !q_.has_value(); }
  /// q as an exact rational (1 in the classical case).
  mpq_class q() const { return q_ ? *q_ : mpq_class(1); }
  /// v_p(q - 1); kInfiniteValuation when q = 1.
  long q_minus_one_valuation() const noexcept { return q_valuation_; }

  PrimeContext with_precision(long precision) const;
  PrimeContext with_q(std::optional<mpq_class> q) const;

 private:
  unsigned long p_;
  long precision_;
  std::optional<mpq_class> q_;
  long q_valuation_ = kInfiniteValuation;
};

}  // namespace padicq
