#include "padicq/verify.hpp"

#include <chrono>

namespace padicq {

namespace {

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void check_threshold(long threshold) {
  if (threshold < kMinimumThreshold) {
    throw DomainError("threshold " + std::to_string(threshold) + " is below the minimum of " +
                      std::to_string(kMinimumThreshold));
  }
}

nlohmann::json context_params(const PrimeContext& ctx, long threshold) {
  return {{"p", ctx.prime()}, {"q", ctx.q().get_str()}, {"prec", ctx.precision()}, {"threshold", threshold}};
}

CheckInstance compare(std::string label, PAdicNumber lhs, PAdicNumber rhs, long threshold) {
  CheckInstance inst;
  inst.label = std::move(label);
  inst.diff_valuation = difference_valuation(lhs, rhs);
  inst.lhs = std::move(lhs);
  inst.rhs = std::move(rhs);
  inst.threshold = threshold;
  inst.pass = inst.diff_valuation >= threshold;
  return inst;
}

nlohmann::json integral_details(const IntegralResult& r) {
  return {{"level", r.level}, {"certified_valuation", r.certified_valuation}};
}

IntegrateOptions integrate_options(const VerifyOptions& options) {
  IntegrateOptions o;
  o.workers = options.workers;
  o.max_level = options.max_level;
  return o;
}

/// Context for the Riemann sums: the threshold plus headroom is all the
/// certification can use.
PrimeContext integration_context(const PrimeContext& ctx, long threshold) {
  return ctx.with_precision(threshold + kIntegrationHeadroom);
}

}  // namespace

bool VerificationReport::passed() const {
  for (const auto& inst : instances) {
    if (inst.pass != inst.expected_pass) return false;
  }
  return !instances.empty();
}

VerificationReport verify_theorem1(const UDFunction& f, const std::vector<unsigned>& n_list, const PrimeContext& ctx,
                                   long threshold, const VerifyOptions& options) {
  check_threshold(threshold);
  const Stopwatch clock;
  const PrimeContext ictx = integration_context(ctx, threshold);
  const long prec = ictx.precision();
  const unsigned long p = ctx.prime();
  const auto iopts = integrate_options(options);

  VerificationReport report;
  report.check = "theorem1";
  report.params = context_params(ctx, threshold);
  report.params["f"] = f.to_string();
  report.params["n"] = n_list;

  const UDFunction df = derivative_of(f, ictx);
  const IntegralResult base = integrate(f, 1, IntegralKind::bosonic, threshold, ictx, iopts);
  const PAdicNumber q = PAdicNumber::from_rational(ctx.q(), p, prec + 2);
  const PAdicNumber cq = c_q(ctx, prec + 2);
  const PAdicNumber log = log_q(ctx, prec + 2);

  for (unsigned n : n_list) {
    if (n == 0) throw DomainError("shifts must be positive");
    const IntegralResult shifted = integrate(UDFunction::shifted(f, n), 1, IntegralKind::bosonic, threshold, ictx, iopts);
    const PAdicNumber lhs = q.pow(n) * shifted.value - base.value;

    PAdicNumber deriv_sum = PAdicNumber::exact_zero(p);
    PAdicNumber value_sum = PAdicNumber::exact_zero(p);
    for (unsigned i = 0; i < n; ++i) {
      const PAdicNumber qi = q.pow(i);
      deriv_sum += evaluate_f(df, i, ictx) * qi;
      value_sum += evaluate_f(f, i, ictx) * qi;
    }
    const PAdicNumber rhs = cq * (deriv_sum + log * value_sum);

    CheckInstance inst = compare("n=" + std::to_string(n), lhs, rhs, threshold);
    inst.details = {{"n", n}, {"integral_f", integral_details(base)}, {"integral_f_n", integral_details(shifted)}};
    report.instances.push_back(std::move(inst));
  }
  report.wall_seconds = clock.seconds();
  return report;
}

VerificationReport verify_theorem3(const UDFunction& f_in, const std::vector<unsigned>& n_list,
                                   const std::optional<DirichletCharacter>& chi, const PrimeContext& ctx,
                                   long threshold, const VerifyOptions& options) {
  check_threshold(threshold);
  const Stopwatch clock;
  const PrimeContext ictx = integration_context(ctx, threshold);
  const long prec = ictx.precision();
  const unsigned long p = ctx.prime();
  const auto iopts = integrate_options(options);

  UDFunction f = f_in;
  if (chi) {
    const auto* poly = std::get_if<Poly>(&f_in.node());
    if (!poly) throw DomainError("a character twist needs a plain polynomial f");
    f = UDFunction::char_poly(*chi, poly->coeffs);
  }
  const std::uint64_t d = f.modulus();
  if (d % 2 == 0) throw DomainError("fermionic checks need odd d, got " + std::to_string(d));

  VerificationReport report;
  report.check = "theorem3";
  report.params = context_params(ctx, threshold);
  report.params["f"] = f.to_string();
  report.params["d"] = d;
  report.params["n"] = n_list;

  const IntegralResult base = integrate(f, d, IntegralKind::fermionic, threshold, ictx, iopts);
  const PAdicNumber q = PAdicNumber::from_rational(ctx.q(), p, prec + 2);
  const PAdicNumber two_q = PAdicNumber::one(p, prec + 2) + q;

  for (unsigned n : n_list) {
    if (n == 0) throw DomainError("shifts must be positive");
    const IntegralResult shifted =
        integrate(UDFunction::shifted(f, n), d, IntegralKind::fermionic, threshold, ictx, iopts);
    const PAdicNumber qn_shifted = q.pow(n) * shifted.value;
    const nlohmann::json details = {
        {"n", n}, {"integral_f", integral_details(base)}, {"integral_f_n", integral_details(shifted)}};

    PAdicNumber general_sum = PAdicNumber::exact_zero(p);
    PAdicNumber alternating_sum = PAdicNumber::exact_zero(p);
    for (unsigned l = 0; l < n; ++l) {
      const PAdicNumber term = q.pow(l) * evaluate_f(f, l, ictx);
      general_sum += (n - 1 - l) % 2 == 0 ? term : -term;
      alternating_sum += l % 2 == 0 ? term : -term;
    }
    const PAdicNumber sign_base = n % 2 == 0 ? base.value : -base.value;
    CheckInstance general =
        compare("general n=" + std::to_string(n), qn_shifted - sign_base, two_q * general_sum, threshold);
    general.details = details;
    report.instances.push_back(std::move(general));

    if (n % 2 == 1) {
      CheckInstance odd =
          compare("odd n=" + std::to_string(n), qn_shifted + base.value, two_q * alternating_sum, threshold);
      odd.details = details;
      report.instances.push_back(std::move(odd));
    }
  }
  report.wall_seconds = clock.seconds();
  return report;
}

VerificationReport verify_witt(std::size_t n_max, IntegralKind kind, const std::optional<DirichletCharacter>& chi,
                               const PrimeContext& ctx, long threshold, const VerifyOptions& options) {
  check_threshold(threshold);
  const Stopwatch clock;
  const PrimeContext ictx = integration_context(ctx, threshold);
  const auto iopts = integrate_options(options);
  const std::uint64_t d = chi ? chi->modulus() : 1;

  VerificationReport report;
  report.check = "witt";
  report.params = context_params(ctx, threshold);
  report.params["kind"] = to_string(kind);
  report.params["n_max"] = n_max;
  report.params["d"] = d;

  const std::vector<PAdicNumber> series_side = moments(n_max, kind, chi, ctx);
  for (std::size_t n = 0; n <= n_max; ++n) {
    const UDFunction xn = UDFunction::monomial(static_cast<unsigned>(n));
    const UDFunction f = chi ? UDFunction::char_poly(*chi, std::get<Poly>(xn.node()).coeffs) : xn;
    const IntegralResult integral = integrate(f, d, kind, threshold, ictx, iopts);
    CheckInstance inst = compare("n=" + std::to_string(n), integral.value, series_side[n], threshold);
    inst.details = {{"n", n}, {"integral", integral_details(integral)}};
    report.instances.push_back(std::move(inst));
  }
  report.wall_seconds = clock.seconds();
  return report;
}

VerificationReport verify_eq2_as_printed(const PrimeContext& ctx, long threshold, const VerifyOptions& options) {
  check_threshold(threshold);
  const Stopwatch clock;
  const PrimeContext ictx = integration_context(ctx, threshold);
  const long prec = ictx.precision();
  const unsigned long p = ctx.prime();
  const auto iopts = integrate_options(options);

  VerificationReport report;
  report.check = "eq2";
  report.params = context_params(ctx, threshold);

  const PAdicNumber one = PAdicNumber::one(p, prec + 2);
  const PAdicNumber q = PAdicNumber::from_rational(ctx.q(), p, prec + 2);
  const PAdicNumber cq = c_q(ctx, prec + 2);

  for (unsigned degree = 0; degree <= 2; ++degree) {
    const UDFunction f = UDFunction::monomial(degree);
    const std::string name = f.to_string();
    const IntegralResult i0 = integrate(f, 1, IntegralKind::bosonic, threshold, ictx, iopts);
    const IntegralResult i1 = integrate(UDFunction::shifted(f, 1), 1, IntegralKind::bosonic, threshold, ictx, iopts);
    const PAdicNumber f0 = evaluate_f(f, 0, ictx);
    const PAdicNumber df0 = evaluate_f(derivative_of(f, ictx), 0, ictx);
    const PAdicNumber correction = cq * df0 + (q - one) * f0;

    CheckInstance corrected = compare("corrected " + name, q * i1.value - i0.value, correction, threshold);
    corrected.details = {{"form", "corrected"}, {"f", name}};
    report.instances.push_back(std::move(corrected));

    const PAdicNumber printed_rhs = i0.value / q + correction;
    const PAdicNumber residual = printed_rhs - i1.value;
    const PAdicNumber predicted = (one - one / q) * correction;
    CheckInstance printed = compare("printed " + name, i1.value, printed_rhs, threshold);
    printed.expected_pass = predicted.valuation() >= threshold;
    printed.details = {{"form", "printed"},
                       {"f", name},
                       {"residual", residual.to_string()},
                       {"predicted_residual", predicted.to_string()},
                       {"residual_vs_predicted_valuation", difference_valuation(residual, predicted)}};
    report.instances.push_back(std::move(printed));
  }
  report.wall_seconds = clock.seconds();
  return report;
}

}  // namespace padicq
