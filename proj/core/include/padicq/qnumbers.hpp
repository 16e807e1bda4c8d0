#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "padicq/characters.hpp"
#include "padicq/hurwitz_series.hpp"
#include "padicq/integrator.hpp"

namespace padicq {

enum class TableKind { q_bernoulli, q_bernoulli_chi, frobenius_euler, frobenius_euler_chi, classical };

std::string to_string(TableKind kind);

/// Entries 0..n_max of one special-number sequence, each the coefficient of
/// t^n/n! in the kind's generating function.
struct NumberTable {
  TableKind kind = TableKind::q_bernoulli;
  std::map<std::string, std::string> params;
  std::vector<PAdicNumber> entries;
  /// Exact values, filled only for the classical kind.
  std::vector<mpq_class> exact;

  /// Absolute precision of each entry.
  std::vector<long> precisions() const;
};

/// Degree guard added on top of n_max for every generating-function computation.
inline constexpr std::size_t kSeriesDegreeGuard = 2;

/// B_{n,q}: coefficients of (log q + t) / (q e^t - 1). Requires q != 1.
NumberTable q_bernoulli(std::size_t n_max, const PrimeContext& ctx);

/// Classical Bernoulli numbers from t / (e^t - 1), exactly.
std::vector<mpq_class> classical_bernoulli(std::size_t n_max);
NumberTable classical_bernoulli_table(std::size_t n_max, const PrimeContext& ctx);

/// B_{n,q,chi}: coefficients of
/// sum_a chi(a) q^a (t e^{at} + log q e^{at}) / (q^d e^{dt} - 1). Requires q != 1.
NumberTable generalized_q_bernoulli(const DirichletCharacter& chi, std::size_t n_max, const PrimeContext& ctx);

/// H_n(u): coefficients of (1 - u) / (e^t - u). Requires u != 1.
NumberTable frobenius_euler(const mpq_class& u, std::size_t n_max, const PrimeContext& ctx);
NumberTable frobenius_euler(const PAdicNumber& u, std::size_t n_max, const PrimeContext& ctx);

/// H_{n,chi}(-q^{-1}): coefficients of
/// [2]_q sum_l (-1)^l q^l chi(l) e^{lt} / (q^d e^{dt} + 1). Requires odd d.
NumberTable generalized_frobenius_euler(const DirichletCharacter& chi, std::size_t n_max, const PrimeContext& ctx);

/// Series-side moments int chi(x) x^n for n = 0..n_max:
/// c_q B_{n,q(,chi)} (bosonic) or H_{n(,chi)}(-q^{-1}) (fermionic). At q = 1
/// the bosonic moments are the classical (generalized) Bernoulli numbers.
std::vector<PAdicNumber> moments(std::size_t n_max, IntegralKind kind, const std::optional<DirichletCharacter>& chi,
                                 const PrimeContext& ctx);
PAdicNumber moment(std::size_t n, IntegralKind kind, const std::optional<DirichletCharacter>& chi,
                   const PrimeContext& ctx);

}  // namespace padicq
