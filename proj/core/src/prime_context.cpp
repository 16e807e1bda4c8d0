#include "padicq/prime_context.hpp"

#include <string>

#include "padicq/errors.hpp"

namespace padicq {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  mpz_class z;
  mpz_import(z.get_mpz_t(), 1, 1, sizeof(n), 0, 0, &n);
  // GMP's BPSW test is deterministic below 2^64.
  return mpz_probab_prime_p(z.get_mpz_t(), 25) > 0;
}

long valuation(const mpz_class& n, unsigned long p) {
  if (n == 0) return kInfiniteValuation;
  long v = 0;
  mpz_class m = n;
  while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
    mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
    ++v;
  }
  return v;
}

long valuation(const mpq_class& x, unsigned long p) {
  if (x == 0) return kInfiniteValuation;
  return valuation(x.get_num(), p) - valuation(x.get_den(), p);
}

mpz_class prime_power(unsigned long p, long k) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), p, static_cast<unsigned long>(k < 0 ? 0 : k));
  return r;
}

PrimeContext::PrimeContext(unsigned long p, long precision, std::optional<mpq_class> q)
    : p_(p), precision_(precision) {
  if (p < 3 || !is_prime(p)) {
    throw DomainError("p must be an odd prime, got " + std::to_string(p));
  }
  if (precision < 1) {
    throw DomainError("working precision must be positive, got " + std::to_string(precision));
  }
  if (q) {
    q->canonicalize();
    if (*q == 1) {
      q.reset();
    }
  }
  if (q) {
    if (valuation(q->get_den(), p) != 0) {
      throw DomainError("q must not have p in its denominator: q = " + q->get_str());
    }
    const long w = valuation(mpq_class(*q - 1), p);
    if (w < 1) {
      throw DomainError("q must satisfy v_p(q - 1) >= 1: q = " + q->get_str() +
                        ", p = " + std::to_string(p));
    }
    q_valuation_ = w;
  }
  q_ = std::move(q);
}

PrimeContext PrimeContext::with_precision(long precision) const {
  return PrimeContext(p_, precision, q_);
}

PrimeContext PrimeContext::with_q(std::optional<mpq_class> q) const {
  return PrimeContext(p_, precision_, std::move(q));
}

}  // namespace padicq
