#include "padicq/hurwitz_series.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace padicq {

namespace {

/// Rows 0..degree of Pascal's triangle.
std::vector<std::vector<mpz_class>> pascal(std::size_t degree) {
  std::vector<std::vector<mpz_class>> rows(degree + 1);
  for (std::size_t n = 0; n <= degree; ++n) {
    rows[n].resize(n + 1);
    rows[n][0] = 1;
    rows[n][n] = 1;
    for (std::size_t k = 1; k < n; ++k) rows[n][k] = rows[n - 1][k - 1] + rows[n - 1][k];
  }
  return rows;
}

unsigned long check_primes(const HurwitzSeries& f, const HurwitzSeries& g) {
  if (f.prime() != g.prime()) {
    throw DomainError("mismatched primes " + std::to_string(f.prime()) + " and " +
                      std::to_string(g.prime()));
  }
  return f.prime();
}

}  // namespace

HurwitzSeries::HurwitzSeries(unsigned long p, std::vector<PAdicNumber> coeffs)
    : p_(p), coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw DomainError("a Hurwitz series needs at least one coefficient");
  for (const auto& c : coeffs_) {
    if (c.prime() != 0 && c.prime() != p_) throw DomainError("coefficient prime does not match series");
  }
}

HurwitzSeries HurwitzSeries::constant(const PAdicNumber& c, std::size_t degree) {
  std::vector<PAdicNumber> coeffs(degree + 1, PAdicNumber::exact_zero(c.prime()));
  coeffs[0] = c;
  return HurwitzSeries(c.prime(), std::move(coeffs));
}

HurwitzSeries HurwitzSeries::zero(unsigned long p, std::size_t degree) {
  return HurwitzSeries(p, std::vector<PAdicNumber>(degree + 1, PAdicNumber::exact_zero(p)));
}

HurwitzSeries HurwitzSeries::truncated(std::size_t degree) const {
  if (degree >= this->degree()) return *this;
  return HurwitzSeries(p_, std::vector<PAdicNumber>(coeffs_.begin(), coeffs_.begin() + degree + 1));
}

HurwitzSeries operator+(const HurwitzSeries& f, const HurwitzSeries& g) {
  const unsigned long p = check_primes(f, g);
  const std::size_t d = std::min(f.degree(), g.degree());
  std::vector<PAdicNumber> out(d + 1);
  for (std::size_t n = 0; n <= d; ++n) out[n] = f[n] + g[n];
  return HurwitzSeries(p, std::move(out));
}

HurwitzSeries operator-(const HurwitzSeries& f, const HurwitzSeries& g) {
  const unsigned long p = check_primes(f, g);
  const std::size_t d = std::min(f.degree(), g.degree());
  std::vector<PAdicNumber> out(d + 1);
  for (std::size_t n = 0; n <= d; ++n) out[n] = f[n] - g[n];
  return HurwitzSeries(p, std::move(out));
}

HurwitzSeries operator*(const PAdicNumber& a, const HurwitzSeries& f) {
  std::vector<PAdicNumber> out(f.degree() + 1);
  for (std::size_t n = 0; n <= f.degree(); ++n) out[n] = a * f[n];
  return HurwitzSeries(f.prime(), std::move(out));
}

HurwitzSeries binomial_convolve(const HurwitzSeries& f, const HurwitzSeries& g) {
  const unsigned long p = check_primes(f, g);
  const std::size_t d = std::min(f.degree(), g.degree());
  const auto binom = pascal(d);
  std::vector<PAdicNumber> out(d + 1, PAdicNumber::exact_zero(p));
  for (std::size_t n = 0; n <= d; ++n) {
    PAdicNumber acc = PAdicNumber::exact_zero(p);
    for (std::size_t k = 0; k <= n; ++k) {
      if (f[k].is_exact_zero() || g[n - k].is_exact_zero()) continue;
      acc += (f[k] * g[n - k]).scaled(binom[n][k]);
    }
    out[n] = std::move(acc);
  }
  return HurwitzSeries(p, std::move(out));
}

HurwitzSeries invert(const HurwitzSeries& f) {
  const unsigned long p = f.prime();
  const std::size_t d = f.degree();
  const PAdicNumber& c0 = f[0];
  if (c0.is_exact_zero()) throw DivisionByZero("invert: constant term is exactly zero");
  if (c0.is_zero()) {
    throw PrecisionExhausted("invert: constant term " + c0.to_string() + " has no significant digits");
  }
  const auto binom = pascal(d);
  const PAdicNumber inv0 = c0.inverse();
  std::vector<PAdicNumber> g(d + 1, PAdicNumber::exact_zero(p));
  g[0] = inv0;
  for (std::size_t n = 1; n <= d; ++n) {
    PAdicNumber acc = PAdicNumber::exact_zero(p);
    for (std::size_t k = 1; k <= n; ++k) {
      if (f[k].is_exact_zero() || g[n - k].is_exact_zero()) continue;
      acc += (f[k] * g[n - k]).scaled(binom[n][k]);
    }
    g[n] = -(inv0 * acc);
  }
  return HurwitzSeries(p, std::move(g));
}

HurwitzSeries exp_linear(const PAdicNumber& a, std::size_t degree, long precision) {
  const unsigned long p = a.prime();
  std::vector<PAdicNumber> out(degree + 1, PAdicNumber::exact_zero(p));
  out[0] = PAdicNumber::one(p, precision);
  if (!a.is_exact_zero()) {
    for (std::size_t n = 1; n <= degree; ++n) out[n] = out[n - 1] * a;
  }
  return HurwitzSeries(p, std::move(out));
}

HurwitzSeries mul_by_t(const HurwitzSeries& f) {
  const unsigned long p = f.prime();
  std::vector<PAdicNumber> out(f.degree() + 1, PAdicNumber::exact_zero(p));
  for (std::size_t n = 1; n <= f.degree(); ++n) out[n] = f[n - 1].scaled(static_cast<unsigned long>(n));
  return HurwitzSeries(p, std::move(out));
}

HurwitzSeries linear_combo(const std::vector<std::pair<PAdicNumber, HurwitzSeries>>& terms) {
  if (terms.empty()) throw DomainError("linear_combo of no series");
  HurwitzSeries acc = terms.front().first * terms.front().second;
  for (std::size_t i = 1; i < terms.size(); ++i) acc = acc + terms[i].first * terms[i].second;
  return acc;
}

const PAdicNumber& coefficient(const HurwitzSeries& f, std::size_t n) {
  if (n > f.degree()) {
    throw std::out_of_range("coefficient index " + std::to_string(n) + " exceeds degree " +
                            std::to_string(f.degree()));
  }
  return f[n];
}

}  // namespace padicq
