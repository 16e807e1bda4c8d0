#include "padicq/qnumbers.hpp"

#include <algorithm>

namespace padicq {

namespace {

struct Series {
  HurwitzSeries values;
  long working_precision;
};

std::map<std::string, std::string> base_params(const PrimeContext& ctx, std::size_t n_max) {
  return {{"p", std::to_string(ctx.prime())},
          {"q", ctx.q().get_str()},
          {"prec", std::to_string(ctx.precision())},
          {"n_max", std::to_string(n_max)}};
}

NumberTable make_table(TableKind kind, std::map<std::string, std::string> params, const HurwitzSeries& s,
                       std::size_t n_max, long precision) {
  NumberTable t;
  t.kind = kind;
  t.params = std::move(params);
  for (std::size_t n = 0; n <= n_max; ++n) t.entries.push_back(s[n].reduced(precision));
  return t;
}

void require_q_not_one(const PrimeContext& ctx, const char* what) {
  if (ctx.q_is_one()) {
    throw DomainError(std::string(what) + " needs q != 1; use the classical numbers for q = 1");
  }
}

DirichletCharacter character_for(const DirichletCharacter& chi, const PrimeContext& ctx, long precision) {
  if (chi.prime() != ctx.prime()) {
    throw DomainError("character was built for p = " + std::to_string(chi.prime()) + ", context has p = " +
                      std::to_string(ctx.prime()));
  }
  return chi.at_precision(precision);
}

PAdicNumber integer(long a, unsigned long p, long precision) {
  return PAdicNumber::from_rational(mpq_class(a), p, precision);
}

/// Precision that leaves ctx.precision() digits after inverting a series
/// whose constant term has valuation w.
long inversion_precision(const PrimeContext& ctx, std::size_t degree, long w) {
  return ctx.precision() + static_cast<long>(degree + 1) * std::max(w, 0L) + 5;
}

Series q_bernoulli_series(std::size_t n_max, const PrimeContext& ctx) {
  require_q_not_one(ctx, "q_bernoulli");
  const unsigned long p = ctx.prime();
  const std::size_t deg = n_max + kSeriesDegreeGuard;
  const long mw = inversion_precision(ctx, deg, ctx.q_minus_one_valuation());
  const PAdicNumber one = PAdicNumber::one(p, mw);
  const PAdicNumber q = PAdicNumber::from_rational(ctx.q(), p, mw);

  std::vector<PAdicNumber> num(deg + 1, PAdicNumber::exact_zero(p));
  num[0] = log_q(ctx, mw);
  num[1] = one;
  const HurwitzSeries numerator(p, std::move(num));
  const HurwitzSeries denominator =
      linear_combo({{q, exp_linear(one, deg, mw)}, {-one, HurwitzSeries::constant(one, deg)}});
  return {binomial_convolve(numerator, invert(denominator)), mw};
}

Series generalized_q_bernoulli_series(const DirichletCharacter& chi_in, std::size_t n_max, const PrimeContext& ctx) {
  require_q_not_one(ctx, "generalized_q_bernoulli");
  const unsigned long p = ctx.prime();
  const std::size_t deg = n_max + kSeriesDegreeGuard;
  const long mw = inversion_precision(ctx, deg, ctx.q_minus_one_valuation());
  const DirichletCharacter chi = character_for(chi_in, ctx, mw);
  const long d = static_cast<long>(chi.modulus());
  const PAdicNumber one = PAdicNumber::one(p, mw);
  const PAdicNumber q = PAdicNumber::from_rational(ctx.q(), p, mw);
  const PAdicNumber log = log_q(ctx, mw);

  HurwitzSeries numerator = HurwitzSeries::zero(p, deg);
  for (long a = 0; a < d; ++a) {
    const PAdicNumber& ca = chi.evaluate(a);
    if (ca.is_zero()) continue;
    const HurwitzSeries ea = exp_linear(integer(a, p, mw), deg, mw);
    numerator = numerator + (ca * q.pow(static_cast<std::uint64_t>(a))) * (mul_by_t(ea) + log * ea);
  }
  const HurwitzSeries denominator = linear_combo(
      {{q.pow(static_cast<std::uint64_t>(d)), exp_linear(integer(d, p, mw), deg, mw)},
       {-one, HurwitzSeries::constant(one, deg)}});
  return {binomial_convolve(numerator, invert(denominator)), mw};
}

Series frobenius_euler_series(const PAdicNumber& u, std::size_t n_max, long mw) {
  const unsigned long p = u.prime();
  const std::size_t deg = n_max + kSeriesDegreeGuard;
  const PAdicNumber one = PAdicNumber::one(p, mw);
  if ((one - u).is_exact_zero()) throw DomainError("frobenius_euler needs u != 1");
  const HurwitzSeries denominator =
      linear_combo({{one, exp_linear(one, deg, mw)}, {-u, HurwitzSeries::constant(one, deg)}});
  return {(one - u) * invert(denominator), mw};
}

Series generalized_frobenius_euler_series(const DirichletCharacter& chi_in, std::size_t n_max,
                                          const PrimeContext& ctx) {
  const unsigned long p = ctx.prime();
  if (chi_in.modulus() % 2 == 0) {
    throw DomainError("generalized Frobenius-Euler numbers need odd d, got " + std::to_string(chi_in.modulus()));
  }
  const std::size_t deg = n_max + kSeriesDegreeGuard;
  const long mw = ctx.precision() + 5;
  const DirichletCharacter chi = character_for(chi_in, ctx, mw);
  const long d = static_cast<long>(chi.modulus());
  const PAdicNumber one = PAdicNumber::one(p, mw);
  const PAdicNumber q = PAdicNumber::from_rational(ctx.q(), p, mw);
  const PAdicNumber two_q = one + q;

  HurwitzSeries numerator = HurwitzSeries::zero(p, deg);
  for (long l = 0; l < d; ++l) {
    const PAdicNumber& cl = chi.evaluate(l);
    if (cl.is_zero()) continue;
    PAdicNumber coeff = two_q * q.pow(static_cast<std::uint64_t>(l)) * cl;
    if (l % 2 == 1) coeff = -coeff;
    numerator = numerator + coeff * exp_linear(integer(l, p, mw), deg, mw);
  }
  const HurwitzSeries denominator =
      linear_combo({{q.pow(static_cast<std::uint64_t>(d)), exp_linear(integer(d, p, mw), deg, mw)},
                    {one, HurwitzSeries::constant(one, deg)}});
  return {binomial_convolve(numerator, invert(denominator)), mw};
}

/// B_{n,chi} = coefficients of sum_a chi(a) e^{at} / ((e^{dt} - 1)/t), the q = 1 limit.
Series classical_generalized_bernoulli_series(const DirichletCharacter& chi_in, std::size_t n_max,
                                              const PrimeContext& ctx) {
  const unsigned long p = ctx.prime();
  const std::size_t deg = n_max + kSeriesDegreeGuard;
  const long mw = ctx.precision() + static_cast<long>(deg) + 5;
  const DirichletCharacter chi = character_for(chi_in, ctx, mw);
  const long d = static_cast<long>(chi.modulus());

  HurwitzSeries numerator = HurwitzSeries::zero(p, deg);
  for (long a = 0; a < d; ++a) {
    const PAdicNumber& ca = chi.evaluate(a);
    if (ca.is_zero()) continue;
    numerator = numerator + ca * exp_linear(integer(a, p, mw), deg, mw);
  }
  // (e^{dt} - 1)/t has divided-power coefficients d^{n+1}/(n+1).
  std::vector<PAdicNumber> den;
  mpz_class dn = d;
  for (std::size_t n = 0; n <= deg; ++n) {
    mpq_class c(dn, mpz_class(static_cast<unsigned long>(n + 1)));
    c.canonicalize();
    den.push_back(PAdicNumber::from_rational(c, p, mw));
    dn *= d;
  }
  return {binomial_convolve(numerator, invert(HurwitzSeries(p, std::move(den)))), mw};
}

}  // namespace

std::string to_string(TableKind kind) {
  switch (kind) {
    case TableKind::q_bernoulli: return "q_bernoulli";
    case TableKind::q_bernoulli_chi: return "q_bernoulli_chi";
    case TableKind::frobenius_euler: return "frobenius_euler";
    case TableKind::frobenius_euler_chi: return "frobenius_euler_chi";
    case TableKind::classical: return "classical";
  }
  return "unknown";
}

std::vector<long> NumberTable::precisions() const {
  std::vector<long> out;
  out.reserve(entries.size());
  for (const auto& e : entries) out.push_back(e.absolute_precision());
  return out;
}

NumberTable q_bernoulli(std::size_t n_max, const PrimeContext& ctx) {
  const Series s = q_bernoulli_series(n_max, ctx);
  return make_table(TableKind::q_bernoulli, base_params(ctx, n_max), s.values, n_max, ctx.precision());
}

std::vector<mpq_class> classical_bernoulli(std::size_t n_max) {
  // Invert (e^t - 1)/t = sum t^n/(n+1)! in divided-power form.
  std::vector<mpq_class> c(n_max + 1);
  for (std::size_t n = 0; n <= n_max; ++n) c[n] = mpq_class(1, static_cast<unsigned long>(n + 1));
  std::vector<mpq_class> b(n_max + 1, mpq_class(0));
  std::vector<mpz_class> row{1};
  b[0] = 1;
  for (std::size_t n = 1; n <= n_max; ++n) {
    std::vector<mpz_class> next(n + 1, 1);
    for (std::size_t k = 1; k < n; ++k) next[k] = row[k - 1] + row[k];
    row = std::move(next);
    mpq_class acc = 0;
    for (std::size_t k = 1; k <= n; ++k) acc += mpq_class(row[k]) * c[k] * b[n - k];
    b[n] = -acc;
    b[n].canonicalize();
  }
  return b;
}

NumberTable classical_bernoulli_table(std::size_t n_max, const PrimeContext& ctx) {
  NumberTable t;
  t.kind = TableKind::classical;
  t.params = base_params(ctx, n_max);
  t.params["q"] = "1";
  t.exact = classical_bernoulli(n_max);
  for (const auto& b : t.exact) t.entries.push_back(PAdicNumber::from_rational(b, ctx));
  return t;
}

NumberTable generalized_q_bernoulli(const DirichletCharacter& chi, std::size_t n_max, const PrimeContext& ctx) {
  const Series s = generalized_q_bernoulli_series(chi, n_max, ctx);
  auto params = base_params(ctx, n_max);
  params["modulus"] = std::to_string(chi.modulus());
  return make_table(TableKind::q_bernoulli_chi, std::move(params), s.values, n_max, ctx.precision());
}

NumberTable frobenius_euler(const mpq_class& u, std::size_t n_max, const PrimeContext& ctx) {
  if (u == 1) throw DomainError("frobenius_euler needs u != 1");
  const std::size_t deg = n_max + kSeriesDegreeGuard;
  const long w = valuation(mpq_class(1 - u), ctx.prime());
  const long mw = inversion_precision(ctx, deg, w);
  const Series s = frobenius_euler_series(PAdicNumber::from_rational(u, ctx.prime(), mw), n_max, mw);
  auto params = base_params(ctx, n_max);
  params["u"] = u.get_str();
  return make_table(TableKind::frobenius_euler, std::move(params), s.values, n_max, ctx.precision());
}

NumberTable frobenius_euler(const PAdicNumber& u, std::size_t n_max, const PrimeContext& ctx) {
  const Series s = frobenius_euler_series(u, n_max, std::max(u.absolute_precision(), 1L));
  auto params = base_params(ctx, n_max);
  params["u"] = u.to_string();
  return make_table(TableKind::frobenius_euler, std::move(params), s.values, n_max, ctx.precision());
}

NumberTable generalized_frobenius_euler(const DirichletCharacter& chi, std::size_t n_max, const PrimeContext& ctx) {
  const Series s = generalized_frobenius_euler_series(chi, n_max, ctx);
  auto params = base_params(ctx, n_max);
  params["modulus"] = std::to_string(chi.modulus());
  return make_table(TableKind::frobenius_euler_chi, std::move(params), s.values, n_max, ctx.precision());
}

std::vector<PAdicNumber> moments(std::size_t n_max, IntegralKind kind, const std::optional<DirichletCharacter>& chi,
                                 const PrimeContext& ctx) {
  const long m = ctx.precision();
  std::vector<PAdicNumber> out;
  out.reserve(n_max + 1);

  if (kind == IntegralKind::fermionic) {
    const NumberTable t = chi ? generalized_frobenius_euler(*chi, n_max, ctx)
                              : frobenius_euler(mpq_class(-1 / ctx.q()), n_max, ctx);
    return t.entries;
  }
  if (ctx.q_is_one()) {
    if (!chi) {
      for (const auto& b : classical_bernoulli(n_max)) out.push_back(PAdicNumber::from_rational(b, ctx));
      return out;
    }
    const Series s = classical_generalized_bernoulli_series(*chi, n_max, ctx);
    for (std::size_t n = 0; n <= n_max; ++n) out.push_back(s.values[n].reduced(m));
    return out;
  }

  const Series s = chi ? generalized_q_bernoulli_series(*chi, n_max, ctx) : q_bernoulli_series(n_max, ctx);
  const PAdicNumber c = c_q(ctx, s.working_precision);
  for (std::size_t n = 0; n <= n_max; ++n) out.push_back((c * s.values[n]).reduced(m));
  return out;
}

PAdicNumber moment(std::size_t n, IntegralKind kind, const std::optional<DirichletCharacter>& chi,
                   const PrimeContext& ctx) {
  return moments(n, kind, chi, ctx)[n];
}

}  // namespace padicq
