#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "padicq/padic.hpp"
#include "padicq/ud_function.hpp"

namespace padicq {

enum class IntegralKind { bosonic, fermionic };

std::string to_string(IntegralKind kind);
IntegralKind parse_integral_kind(const std::string& text);

/// mu_q(j + p^N Z_p) = q^j / [p^N]_q.
PAdicNumber measure_of_ball(std::uint64_t j, unsigned level, const PrimeContext& ctx);

/// (1/[d p^N]_q) sum_{j < d p^N} q^j f(j), to absolute precision ctx.precision().
///
/// The index range may be split across `workers` threads; the partial sums are
/// combined by exact modular addition, so the result does not depend on the
/// worker count.
PAdicNumber riemann_sum_bosonic(const UDFunction& f, std::uint64_t d, unsigned level, const PrimeContext& ctx,
                                unsigned workers = 1);

/// (1/[d p^N]_{-q}) sum_{j < d p^N} (-q)^j f(j); d must be odd.
PAdicNumber riemann_sum_fermionic(const UDFunction& f, std::uint64_t d, unsigned level, const PrimeContext& ctx,
                                  unsigned workers = 1);

PAdicNumber riemann_sum(const UDFunction& f, std::uint64_t d, unsigned level, IntegralKind kind,
                        const PrimeContext& ctx, unsigned workers = 1);

struct IntegralResult {
  PAdicNumber value;
  unsigned level = 0;
  /// Consecutive levels agreed modulo p^certified_valuation.
  long certified_valuation = 0;
  IntegralKind kind = IntegralKind::bosonic;
  /// v_p(S_N - S_{N-1}) for each level compared, in order.
  std::vector<long> trajectory;
};

struct IntegrateOptions {
  unsigned first_level = 2;
  unsigned max_level = 12;
  unsigned workers = 1;
  /// Levels whose index range d p^N would exceed this are not attempted.
  std::uint64_t max_terms = std::uint64_t{1} << 27;
};

/// Digits of headroom integrate() requires between the target and ctx.precision().
inline constexpr long kIntegrateSafetyMargin = 2;

/// Runs levels N = first, first+1, ... until v_p(S_N - S_{N-1}) >= target.
/// Throws ConvergenceError (carrying the valuation trajectory) otherwise.
IntegralResult integrate(const UDFunction& f, std::uint64_t d, IntegralKind kind, long target_valuation,
                         const PrimeContext& ctx, const IntegrateOptions& options = {});

}  // namespace padicq
