#include "padicq/padic.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace padicq {

namespace {

mpz_class mod_pos(const mpz_class& a, const mpz_class& m) {
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

mpz_class inverse_mod(const mpz_class& a, const mpz_class& m) {
  mpz_class r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0) {
    throw DomainError("no inverse of " + a.get_str() + " modulo " + m.get_str());
  }
  return r;
}

/// Strips all factors of p from n in place and returns how many were removed.
long strip(mpz_class& n, unsigned long p) {
  long v = 0;
  while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
    mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
    ++v;
  }
  return v;
}

unsigned long common_prime(const PAdicNumber& x, const PAdicNumber& y) {
  if (x.prime() == 0) return y.prime();
  if (y.prime() == 0 || x.prime() == y.prime()) return x.prime();
  throw DomainError("mismatched primes " + std::to_string(x.prime()) + " and " +
                    std::to_string(y.prime()));
}

long floor_log(unsigned long p, long k) {
  long e = 0;
  for (long t = k; t >= static_cast<long>(p); t /= static_cast<long>(p)) ++e;
  return e;
}

}  // namespace

PAdicNumber PAdicNumber::exact_zero(unsigned long p) { return PAdicNumber(p, kInfiniteValuation, 0, 0); }

PAdicNumber PAdicNumber::zero(unsigned long p, long absolute_precision) {
  return PAdicNumber(p, absolute_precision, 0, 0);
}

PAdicNumber PAdicNumber::one(unsigned long p, long absolute_precision) {
  if (absolute_precision < 1) {
    throw DomainError("precision of 1 must be positive");
  }
  return PAdicNumber(p, 0, absolute_precision, 1);
}

PAdicNumber PAdicNumber::normalize(unsigned long p, long base, mpz_class s, long absolute) {
  if (absolute <= base) return zero(p, absolute);
  s = mod_pos(s, prime_power(p, absolute - base));
  if (s == 0) return zero(p, absolute);
  const long k = strip(s, p);
  return PAdicNumber(p, base + k, absolute - base - k, std::move(s));
}

PAdicNumber PAdicNumber::from_rational(const mpq_class& a, const PrimeContext& ctx) {
  return from_rational(a, ctx.prime(), ctx.precision());
}

PAdicNumber PAdicNumber::from_rational(const mpq_class& a, unsigned long p, long absolute_precision) {
  if (a == 0) return exact_zero(p);
  mpz_class num = a.get_num();
  mpz_class den = a.get_den();
  const long v = strip(num, p) - strip(den, p);
  const long r = std::max(absolute_precision - v, 1L);
  const mpz_class m = prime_power(p, r);
  mpz_class u = mod_pos(num * inverse_mod(den, m), m);
  return PAdicNumber(p, v, r, std::move(u));
}

PAdicNumber PAdicNumber::from_residue(const mpz_class& a, unsigned long p, long absolute_precision) {
  return normalize(p, 0, a, absolute_precision);
}

long PAdicNumber::absolute_precision() const noexcept {
  if (is_zero()) return valuation_;
  return valuation_ + rel_precision_;
}

PAdicNumber PAdicNumber::operator-() const {
  if (is_zero()) return *this;
  return PAdicNumber(p_, valuation_, rel_precision_, prime_power(p_, rel_precision_) - unit_);
}

PAdicNumber& PAdicNumber::operator+=(const PAdicNumber& y) {
  const unsigned long p = common_prime(*this, y);
  if (y.is_exact_zero()) return *this;
  if (is_exact_zero()) {
    *this = y;
    return *this;
  }
  const long a = std::min(absolute_precision(), y.absolute_precision());
  const bool use_x = !is_zero() && valuation_ < a;
  const bool use_y = !y.is_zero() && y.valuation_ < a;
  if (!use_x && !use_y) {
    *this = zero(p, a);
    return *this;
  }
  long base = a;
  if (use_x) base = std::min(base, valuation_);
  if (use_y) base = std::min(base, y.valuation_);
  mpz_class s = 0;
  if (use_x) s += unit_ * prime_power(p, valuation_ - base);
  if (use_y) s += y.unit_ * prime_power(p, y.valuation_ - base);
  *this = normalize(p, base, std::move(s), a);
  return *this;
}

PAdicNumber& PAdicNumber::operator-=(const PAdicNumber& y) { return *this += -y; }

PAdicNumber& PAdicNumber::operator*=(const PAdicNumber& y) {
  const unsigned long p = common_prime(*this, y);
  if (is_exact_zero() || y.is_exact_zero()) {
    *this = exact_zero(p);
    return *this;
  }
  if (is_zero() || y.is_zero()) {
    *this = zero(p, std::min(valuation_ + y.absolute_precision(), y.valuation_ + absolute_precision()));
    return *this;
  }
  const long r = std::min(rel_precision_, y.rel_precision_);
  const mpz_class m = prime_power(p, r);
  *this = PAdicNumber(p, valuation_ + y.valuation_, r, mod_pos(unit_ * y.unit_, m));
  return *this;
}

PAdicNumber& PAdicNumber::operator/=(const PAdicNumber& y) {
  const unsigned long p = common_prime(*this, y);
  if (y.is_exact_zero()) throw DivisionByZero("division by exact zero");
  if (y.is_zero()) {
    throw PrecisionExhausted("division by " + y.to_string() + ": divisor has no significant digits");
  }
  if (is_exact_zero()) {
    *this = exact_zero(p);
    return *this;
  }
  if (is_zero()) {
    *this = zero(p, valuation_ - y.valuation_);
    return *this;
  }
  const long r = std::min(rel_precision_, y.rel_precision_);
  const mpz_class m = prime_power(p, r);
  *this = PAdicNumber(p, valuation_ - y.valuation_, r, mod_pos(unit_ * inverse_mod(y.unit_, m), m));
  return *this;
}

PAdicNumber operator+(PAdicNumber x, const PAdicNumber& y) { return x += y; }
PAdicNumber operator-(PAdicNumber x, const PAdicNumber& y) { return x -= y; }
PAdicNumber operator*(PAdicNumber x, const PAdicNumber& y) { return x *= y; }
PAdicNumber operator/(PAdicNumber x, const PAdicNumber& y) { return x /= y; }

PAdicNumber arith(const PAdicNumber& x, const PAdicNumber& y, ArithKind kind) {
  switch (kind) {
    case ArithKind::add: return x + y;
    case ArithKind::sub: return x - y;
    case ArithKind::mul: return x * y;
    case ArithKind::div: return x / y;
  }
  throw DomainError("unknown arithmetic kind");
}

PAdicNumber PAdicNumber::scaled(const mpz_class& k) const {
  if (k == 0 || is_exact_zero()) return exact_zero(p_);
  mpz_class c = k;
  const long vk = strip(c, p_);
  if (is_zero()) return zero(p_, valuation_ + vk);
  const mpz_class m = prime_power(p_, rel_precision_);
  return PAdicNumber(p_, valuation_ + vk, rel_precision_, mod_pos(unit_ * c, m));
}

PAdicNumber PAdicNumber::pow(std::uint64_t e) const {
  if (is_zero()) {
    if (e == 0) throw DomainError("0^0 of a p-adic zero is undefined here");
    if (is_exact_zero()) return *this;
    return zero(p_, valuation_ * static_cast<long>(e));
  }
  if (e == 0) return one(p_, rel_precision_);
  const mpz_class m = prime_power(p_, rel_precision_);
  mpz_class u;
  mpz_powm_ui(u.get_mpz_t(), unit_.get_mpz_t(), e, m.get_mpz_t());
  return PAdicNumber(p_, valuation_ * static_cast<long>(e), rel_precision_, std::move(u));
}

PAdicNumber PAdicNumber::inverse() const { return one(p_, std::max(rel_precision_, 1L)) / *this; }

PAdicNumber PAdicNumber::reduced(long k) const {
  if (is_exact_zero()) return *this;
  if (absolute_precision() <= k) return *this;
  if (is_zero() || valuation_ >= k) return zero(p_, k);
  const long r = k - valuation_;
  return PAdicNumber(p_, valuation_, r, mod_pos(unit_, prime_power(p_, r)));
}

mpz_class PAdicNumber::residue(long k) const {
  if (is_zero()) return 0;
  if (valuation_ < 0) {
    throw DomainError("residue of a non-integral p-adic number " + to_string());
  }
  if (k > absolute_precision()) {
    throw PrecisionExhausted("residue mod p^" + std::to_string(k) + " requested from " + to_string());
  }
  return mod_pos(unit_ * prime_power(p_, valuation_), prime_power(p_, k));
}

mpq_class PAdicNumber::lift() const {
  if (is_zero()) return 0;
  if (valuation_ >= 0) return mpq_class(unit_ * prime_power(p_, valuation_));
  mpq_class r(unit_, prime_power(p_, -valuation_));
  r.canonicalize();
  return r;
}

std::string PAdicNumber::to_string() const {
  std::ostringstream os;
  if (is_exact_zero()) {
    os << "0";
  } else if (is_zero()) {
    os << "O(" << p_ << "^" << valuation_ << ")";
  } else {
    os << unit_.get_str() << " * " << p_ << "^" << valuation_ << " + O(" << p_ << "^"
       << valuation_ + rel_precision_ << ")";
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const PAdicNumber& x) { return os << x.to_string(); }

bool operator==(const PAdicNumber& x, const PAdicNumber& y) {
  if (x.prime() != 0 && y.prime() != 0 && x.prime() != y.prime()) return false;
  if (x.is_zero() && y.is_zero()) return true;
  if (x.is_zero()) return !x.is_exact_zero() && y.valuation() >= x.valuation();
  if (y.is_zero()) return !y.is_exact_zero() && x.valuation() >= y.valuation();
  if (x.valuation() != y.valuation()) return false;
  const long r = std::min(x.relative_precision(), y.relative_precision());
  return mpz_congruent_p(x.unit().get_mpz_t(), y.unit().get_mpz_t(),
                         prime_power(x.prime(), r).get_mpz_t()) != 0;
}

long difference_valuation(const PAdicNumber& x, const PAdicNumber& y) { return (x - y).valuation(); }

PAdicNumber q_bracket(std::uint64_t x, const mpq_class& base, const PrimeContext& ctx) {
  const unsigned long p = ctx.prime();
  const long m = ctx.precision();
  if (x == 0) return PAdicNumber::exact_zero(p);
  if (base == 1) {
    const mpz_class n(static_cast<unsigned long>(x));
    return PAdicNumber::from_rational(mpq_class(n), p, m + valuation(n, p));
  }
  if (base == -1) return x % 2 == 1 ? PAdicNumber::one(p, m) : PAdicNumber::exact_zero(p);

  long extra = 2 + std::max(0L, valuation(mpq_class(base - 1), p));
  for (int attempt = 0; attempt < 64; ++attempt) {
    const long r = m + extra;
    const PAdicNumber b = PAdicNumber::from_rational(base, p, r);
    const PAdicNumber one = PAdicNumber::one(p, r);
    const PAdicNumber den = one - b;
    const PAdicNumber num = one - b.pow(x);
    if (!den.is_zero() && !num.is_zero()) {
      const PAdicNumber result = num / den;
      if (result.relative_precision() >= m) return result.reduced(result.valuation() + m);
      extra += m - result.relative_precision() + 2;
    } else {
      extra *= 2;
    }
  }
  throw PrecisionExhausted("q_bracket: could not resolve [" + std::to_string(x) + "]_" + base.get_str());
}

PAdicNumber q_bracket(std::uint64_t x, const PAdicNumber& base) {
  const unsigned long p = base.prime();
  if (x == 0) return PAdicNumber::exact_zero(p);
  const long a = base.absolute_precision();
  if (base.is_zero()) return PAdicNumber::one(p, a == kInfiniteValuation ? 1 : std::max(a, 1L));
  const PAdicNumber one = PAdicNumber::one(p, std::max(a, 1L));
  const PAdicNumber den = one - base;
  if (den.is_zero()) {
    // base = 1 to the known precision: fall back to the geometric sum.
    PAdicNumber sum = PAdicNumber::exact_zero(p);
    PAdicNumber power = one;
    for (std::uint64_t i = 0; i < x; ++i) {
      sum += power;
      power *= base;
    }
    return sum;
  }
  return (one - base.pow(x)) / den;
}

PAdicNumber padic_log(const PAdicNumber& x) {
  const unsigned long p = x.prime();
  if (x.is_zero() || x.valuation() != 0) {
    throw DomainError("padic_log: argument is not a 1-unit: " + x.to_string());
  }
  const long a = x.absolute_precision();
  const PAdicNumber y = x - PAdicNumber::one(p, a);
  if (y.is_zero()) return PAdicNumber::zero(p, a);
  const long w = y.valuation();
  if (w < 1) {
    throw DomainError("padic_log: argument is not a 1-unit: " + x.to_string());
  }

  // Terms y^k/k have valuation >= k*w - floor(log_p k); stop once that reaches a.
  long last = 0;
  for (long k = 1; k * w - floor_log(p, k) < a; ++k) last = k;
  const long e = last > 0 ? floor_log(p, last) : 0;
  const mpz_class big = prime_power(p, a + e);
  const mpz_class target = prime_power(p, a);
  const mpz_class yi = y.residue(a);

  mpz_class power = 1;
  mpz_class sum = 0;
  for (long k = 1; k <= last; ++k) {
    power = mod_pos(power * yi, big);
    mpz_class kk = k;
    const long vk = strip(kk, p);
    mpz_class term;
    mpz_divexact(term.get_mpz_t(), power.get_mpz_t(), prime_power(p, vk).get_mpz_t());
    term = mod_pos(term * inverse_mod(kk, target), target);
    if (k % 2 == 1) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return PAdicNumber::from_residue(sum, p, a);
}

mpz_class teichmuller_residue(const mpz_class& a, unsigned long p, long k) {
  if (mpz_divisible_ui_p(a.get_mpz_t(), p)) {
    throw DomainError("teichmuller: p divides " + a.get_str());
  }
  const mpz_class m = prime_power(p, k);
  mpz_class x = mod_pos(a, m);
  for (;;) {
    mpz_class next;
    mpz_powm_ui(next.get_mpz_t(), x.get_mpz_t(), p, m.get_mpz_t());
    if (next == x) return x;
    x = std::move(next);
  }
}

PAdicNumber teichmuller(const mpz_class& a, const PrimeContext& ctx) {
  return PAdicNumber::from_residue(teichmuller_residue(a, ctx.prime(), ctx.precision()), ctx.prime(),
                                   ctx.precision());
}

PAdicNumber log_q(const PrimeContext& ctx, long absolute) {
  if (ctx.q_is_one()) return PAdicNumber::exact_zero(ctx.prime());
  return padic_log(PAdicNumber::from_rational(ctx.q(), ctx.prime(), absolute));
}

PAdicNumber c_q(const PrimeContext& ctx, long absolute) {
  if (ctx.q_is_one()) return PAdicNumber::one(ctx.prime(), absolute);
  const long w = ctx.q_minus_one_valuation();
  const PAdicNumber num = PAdicNumber::from_rational(ctx.q() - 1, ctx.prime(), absolute + w);
  return num / log_q(ctx, absolute + w);
}

}  // namespace padicq
