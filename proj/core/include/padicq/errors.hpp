#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace padicq {

/// Invalid argument: wrong prime, non-unit where a unit is needed, bad character, ...
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Division by an exact zero.
class DivisionByZero : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A result would carry no significant p-adic digits (e.g. dividing by O(p^k)).
class PrecisionExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The Riemann-sum loop did not reach the requested agreement within its level cap.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, std::vector<long> trajectory, bool monotone)
      : std::runtime_error(what), trajectory_(std::move(trajectory)), monotone_(monotone) {}

  /// v_p(S_N - S_{N-1}) for each level compared.
  const std::vector<long>& trajectory() const noexcept { return trajectory_; }
  bool monotone() const noexcept { return monotone_; }

 private:
  std::vector<long> trajectory_;
  bool monotone_;
};

}  // namespace padicq
