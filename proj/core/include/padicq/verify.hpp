#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "padicq/integrator.hpp"
#include "padicq/qnumbers.hpp"

namespace padicq {

/// One compared pair: an integral-side value against its closed-form or
/// series-side counterpart.
struct CheckInstance {
  std::string label;
  PAdicNumber lhs;
  PAdicNumber rhs;
  long diff_valuation = 0;
  long threshold = 0;
  bool pass = false;
  /// Whether the instance is supposed to meet the threshold. Only the
  /// printed translation check has instances expected to fail.
  bool expected_pass = true;
  nlohmann::json details = nlohmann::json::object();
};

struct VerificationReport {
  std::string check;
  nlohmann::json params = nlohmann::json::object();
  std::vector<CheckInstance> instances;
  double wall_seconds = 0.0;

  /// Every instance behaved as expected.
  bool passed() const;
};

struct VerifyOptions {
  unsigned workers = 1;
  unsigned max_level = 12;
};

/// Digits beyond the threshold carried by the Riemann sums inside a check.
inline constexpr long kIntegrationHeadroom = 4;
/// Smallest threshold the checks accept; agreement below this is vacuous.
inline constexpr long kMinimumThreshold = 4;

/// q^n I_q(f_n) - I_q(f) against c_q (sum f'(i) q^i + log q sum f(i) q^i).
VerificationReport verify_theorem1(const UDFunction& f, const std::vector<unsigned>& n_list, const PrimeContext& ctx,
                                   long threshold, const VerifyOptions& options = {});

/// q^n I_{-q}(f_n) - (-1)^n I_{-q}(f) against [2]_q sum (-1)^{n-1-l} q^l f(l),
/// plus the q^n I_{-q}(f_n) + I_{-q}(f) form for odd n. If chi is given, f
/// must be a plain polynomial and is twisted by chi.
VerificationReport verify_theorem3(const UDFunction& f, const std::vector<unsigned>& n_list,
                                   const std::optional<DirichletCharacter>& chi, const PrimeContext& ctx,
                                   long threshold, const VerifyOptions& options = {});

/// Series-side moments against Riemann-sum integrals of chi(x) x^n, n <= n_max.
VerificationReport verify_witt(std::size_t n_max, IntegralKind kind, const std::optional<DirichletCharacter>& chi,
                               const PrimeContext& ctx, long threshold, const VerifyOptions& options = {});

/// The translation identity as printed,
///   I_q(f_1) = I_q(f)/q + c_q f'(0) + (q-1) f(0),
/// next to the form that follows from the Riemann sums,
///   q I_q(f_1) - I_q(f) = c_q f'(0) + (q-1) f(0),
/// for f in {1, x, x^2}. The printed form is expected to miss by
/// (1 - 1/q)(c_q f'(0) + (q-1) f(0)).
VerificationReport verify_eq2_as_printed(const PrimeContext& ctx, long threshold, const VerifyOptions& options = {});

}  // namespace padicq
