#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "padicq/padic.hpp"

namespace padicq {

/// Truncated power series sum_{n <= D} c_n t^n / n! (divided-power form).
///
/// Products are binomial convolutions, so no factorial is ever divided out.
/// Each coefficient carries its own precision.
class HurwitzSeries {
 public:
  HurwitzSeries(unsigned long p, std::vector<PAdicNumber> coeffs);

  /// (c, 0, 0, ..., 0) of degree bound D.
  static HurwitzSeries constant(const PAdicNumber& c, std::size_t degree);
  static HurwitzSeries zero(unsigned long p, std::size_t degree);

  unsigned long prime() const noexcept { return p_; }
  std::size_t degree() const noexcept { return coeffs_.size() - 1; }
  const std::vector<PAdicNumber>& coefficients() const noexcept { return coeffs_; }
  const PAdicNumber& operator[](std::size_t n) const { return coeffs_[n]; }

  /// Keeps c_0..c_degree.
  HurwitzSeries truncated(std::size_t degree) const;

  friend HurwitzSeries operator+(const HurwitzSeries& f, const HurwitzSeries& g);
  friend HurwitzSeries operator-(const HurwitzSeries& f, const HurwitzSeries& g);
  friend HurwitzSeries operator*(const PAdicNumber& a, const HurwitzSeries& f);

 private:
  unsigned long p_;
  std::vector<PAdicNumber> coeffs_;
};

/// (fg)_n = sum_k C(n,k) f_k g_{n-k}; the result has the smaller degree bound.
HurwitzSeries binomial_convolve(const HurwitzSeries& f, const HurwitzSeries& g);

/// Multiplicative inverse up to degree D. The constant term must be nonzero;
/// a constant term of positive valuation w costs roughly (n+1)w digits at c_n.
HurwitzSeries invert(const HurwitzSeries& f);

/// e^{a t}: c_n = a^n, with c_0 = 1 + O(p^precision).
HurwitzSeries exp_linear(const PAdicNumber& a, std::size_t degree, long precision);

/// t * f: c_n = n f_{n-1}; the old top coefficient is dropped.
HurwitzSeries mul_by_t(const HurwitzSeries& f);

/// sum of scalar * series, coefficientwise.
HurwitzSeries linear_combo(const std::vector<std::pair<PAdicNumber, HurwitzSeries>>& terms);

/// c_n; throws std::out_of_range for n > D.
const PAdicNumber& coefficient(const HurwitzSeries& f, std::size_t n);

}  // namespace padicq
