#pragma once

// Independent reference computations over Q. Nothing here includes the library:
// these are the values the library is checked against.

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include <gmpxx.h>

namespace oracle {

/// Ordinary power series sum a_n t^n, truncated.
using QSeries = std::vector<mpq_class>;

QSeries exp_series(const mpq_class& a, std::size_t degree);
QSeries mul(const QSeries& a, const QSeries& b);
/// a / b; b[0] != 0. Long division, one coefficient at a time.
QSeries div(const QSeries& a, const QSeries& b);
QSeries add(const QSeries& a, const QSeries& b);
QSeries scale(const QSeries& a, const mpq_class& c);
/// t * a, keeping the degree.
QSeries shift_t(const QSeries& a);
/// n! a_n: the divided-power coefficients of the same series.
std::vector<mpq_class> to_egf(const QSeries& a);
QSeries from_egf(const std::vector<mpq_class>& c);

/// B_0..B_n by the Akiyama-Tanigawa triangle, B_1 = -1/2.
std::vector<mpq_class> bernoulli(std::size_t n_max);

/// Coefficients of t^n/n! in (log q + t)/(q e^t - 1), split as
/// B_n = log q * a[n] + b[n] with a, b rational.
struct LogSplit {
  std::vector<mpq_class> log_part;
  std::vector<mpq_class> rational_part;
};
LogSplit q_bernoulli(const mpq_class& q, std::size_t n_max);
/// Same for sum_a chi(a) q^a (t + log q) e^{at} / (q^d e^{dt} - 1), d = chi.size().
LogSplit generalized_q_bernoulli(const std::vector<long>& chi, const mpq_class& q, std::size_t n_max);
/// (1 - u)/(e^t - u).
std::vector<mpq_class> frobenius_euler(const mpq_class& u, std::size_t n_max);
/// (1 + q) sum_l (-1)^l q^l chi(l) e^{lt} / (q^d e^{dt} + 1).
std::vector<mpq_class> generalized_frobenius_euler(const std::vector<long>& chi, const mpq_class& q,
                                                   std::size_t n_max);

/// (1/[d p^N]_{w}) sum_{j < d p^N} w^j f(j) with w = q (bosonic) or -q
/// (fermionic), computed exactly.
mpq_class riemann_sum(const std::function<mpq_class(std::uint64_t)>& f, const mpq_class& q, bool fermionic,
                      unsigned long p, std::uint64_t d, unsigned level);

long valuation(const mpq_class& x, unsigned long p);
mpz_class power(unsigned long p, long k);
/// x mod p^k for p-integral x.
mpz_class residue(const mpq_class& x, unsigned long p, long k);

/// log x mod p^k from the defining series, x = 1 mod p.
mpz_class log_residue(const mpq_class& x, unsigned long p, long k);

/// The (p-1)-th root of unity congruent to a, by Newton's method on x^(p-1) - 1.
mpz_class teichmuller_newton(const mpz_class& a, unsigned long p, long k);
/// The same by exhaustive search over the lifts of a mod p (small p^k only).
mpz_class teichmuller_search(const mpz_class& a, unsigned long p, long k);

/// Jacobi symbol (a | n) for odd squarefree n via Euler's criterion on each
/// prime factor.
int jacobi_euler(long a, unsigned long n);

}  // namespace oracle
