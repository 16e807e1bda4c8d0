#include "cli.hpp"

#include <algorithm>
#include <optional>

#include <CLI11.hpp>

#include "padicq/errors.hpp"
#include "padicq/io.hpp"
#include "padicq/verify.hpp"

namespace padicq::cli {

namespace {

struct Options {
  unsigned long p = 0;
  std::string q = "1";
  long prec = 20;
  std::size_t nmax = 6;
  std::string format = "text";
  std::string char_file;
  unsigned long d = 0;
  std::string f;
  std::string kind = "bosonic";
  std::optional<unsigned> level;
  std::vector<unsigned> n_list{1, 2, 3};
  long threshold = 6;
  unsigned workers = 1;
  unsigned max_level = 12;
  std::string u;
  std::string x;
  std::string a;
};

mpq_class parse_rational(const std::string& text, const char* what) {
  mpq_class r;
  if (text.empty() || r.set_str(text, 10) != 0) {
    throw DomainError(std::string(what) + " must be an integer or a fraction a/b, got '" + text + "'");
  }
  if (r.get_den() == 0) throw DomainError(std::string(what) + " has a zero denominator");
  r.canonicalize();
  return r;
}

PrimeContext make_context(const Options& o, long precision) {
  if (o.p == 0) throw DomainError("--p is required");
  const mpq_class q = parse_rational(o.q, "--q");
  return PrimeContext(o.p, precision, q == 1 ? std::nullopt : std::optional<mpq_class>(q));
}

PrimeContext make_context(const Options& o) { return make_context(o, o.prec); }

std::optional<DirichletCharacter> character_option(const Options& o, const PrimeContext& ctx) {
  if (!o.char_file.empty()) return load_character_file(o.char_file, ctx);
  if (o.d > 1) return quadratic_character(o.d, ctx);
  return std::nullopt;
}

UDFunction parse_function(const Options& o, const PrimeContext& ctx) {
  if (o.f.empty()) throw DomainError("--f is required (poly:c0,c1,... | chpoly:<file>:c0,... | expbase:a/b | shift:n:<f>)");
  const CharacterLoader loader = [&ctx](const std::string& path) { return load_character_file(path, ctx); };
  return parse_ud_function(o.f, ctx, loader);
}

void emit(const Options& o, std::ostream& out, const nlohmann::json& j, const std::string& text) {
  if (o.format == "json") {
    out << j.dump(2) << '\n';
  } else {
    out << text;
  }
}

void emit_table(const Options& o, std::ostream& out, const NumberTable& t) { emit(o, out, to_json(t), to_text(t)); }

int emit_report(const Options& o, std::ostream& out, const VerificationReport& r) {
  emit(o, out, to_json(r), to_text(r));
  return r.passed() ? kOk : kCheckFailed;
}

VerifyOptions verify_options(const Options& o) {
  VerifyOptions v;
  v.workers = o.workers;
  v.max_level = o.max_level;
  return v;
}

/// Precision for a check: the working precision, but never less than what the
/// Riemann sums of the check need.
PrimeContext verify_context(const Options& o) {
  return make_context(o, std::max(o.prec, o.threshold + kIntegrationHeadroom));
}

int cmd_bernoulli(const Options& o, std::ostream& out) {
  const PrimeContext ctx = make_context(o);
  emit_table(o, out, ctx.q_is_one() ? classical_bernoulli_table(o.nmax, ctx) : q_bernoulli(o.nmax, ctx));
  return kOk;
}

int cmd_gen_bernoulli(const Options& o, std::ostream& out) {
  const PrimeContext ctx = make_context(o);
  if (ctx.q_is_one()) throw DomainError("gen-bernoulli needs q != 1");
  const auto chi = character_option(o, ctx);
  emit_table(o, out, generalized_q_bernoulli(chi ? *chi : trivial_character(ctx), o.nmax, ctx));
  return kOk;
}

int cmd_euler(const Options& o, std::ostream& out) {
  const PrimeContext ctx = make_context(o);
  const mpq_class u = o.u.empty() ? mpq_class(mpq_class(-1) / ctx.q()) : parse_rational(o.u, "--u");
  emit_table(o, out, frobenius_euler(u, o.nmax, ctx));
  return kOk;
}

int cmd_gen_euler(const Options& o, std::ostream& out) {
  const PrimeContext ctx = make_context(o);
  const auto chi = character_option(o, ctx);
  emit_table(o, out, generalized_frobenius_euler(chi ? *chi : trivial_character(ctx), o.nmax, ctx));
  return kOk;
}

int cmd_integrate(const Options& o, std::ostream& out) {
  const PrimeContext ctx = make_context(o, o.prec + kIntegrationHeadroom);
  const UDFunction f = parse_function(o, ctx);
  const IntegralKind kind = parse_integral_kind(o.kind);
  const std::uint64_t d = o.d == 0 ? f.modulus() : o.d;

  nlohmann::json j = {{"f", f.to_string()},
                      {"kind", to_string(kind)},
                      {"d", d},
                      {"p", ctx.prime()},
                      {"q", ctx.q().get_str()},
                      {"prec", o.prec}};
  std::string text;
  if (o.level) {
    const PAdicNumber value = riemann_sum(f, d, *o.level, kind, ctx, o.workers).reduced(o.prec);
    j["level"] = *o.level;
    j["value"] = to_json(value);
    text = "S_" + std::to_string(*o.level) + " = " + value.to_string() + '\n';
  } else {
    IntegrateOptions io;
    io.workers = o.workers;
    io.max_level = o.max_level;
    const IntegralResult r = integrate(f, d, kind, o.prec, ctx, io);
    const PAdicNumber value = r.value.reduced(o.prec);
    j["level"] = r.level;
    j["certified_valuation"] = r.certified_valuation;
    j["trajectory"] = r.trajectory;
    j["value"] = to_json(value);
    text = "integral = " + value.to_string() + "\n  level " + std::to_string(r.level) + ", consecutive sums agree to v >= " +
           std::to_string(r.certified_valuation) + '\n';
  }
  emit(o, out, j, text);
  return kOk;
}

int cmd_log(const Options& o, std::ostream& out) {
  const PrimeContext ctx = make_context(o);
  const mpq_class x = parse_rational(o.x, "--x");
  const PAdicNumber value = padic_log(PAdicNumber::from_rational(x, ctx));
  emit(o, out, {{"x", x.get_str()}, {"p", ctx.prime()}, {"value", to_json(value)}},
       "log(" + x.get_str() + ") = " + value.to_string() + '\n');
  return kOk;
}

int cmd_teichmuller(const Options& o, std::ostream& out) {
  const PrimeContext ctx = make_context(o);
  mpz_class a;
  if (o.a.empty() || a.set_str(o.a, 10) != 0) throw DomainError("--a must be an integer, got '" + o.a + "'");
  const PAdicNumber value = teichmuller(a, ctx);
  emit(o, out, {{"a", a.get_str()}, {"p", ctx.prime()}, {"value", to_json(value)}},
       "omega(" + a.get_str() + ") = " + value.to_string() + '\n');
  return kOk;
}

int cmd_verify_theorem1(const Options& o, std::ostream& out) {
  const PrimeContext ctx = verify_context(o);
  return emit_report(o, out, verify_theorem1(parse_function(o, ctx), o.n_list, ctx, o.threshold, verify_options(o)));
}

int cmd_verify_theorem3(const Options& o, std::ostream& out) {
  const PrimeContext ctx = verify_context(o);
  return emit_report(o, out,
                     verify_theorem3(parse_function(o, ctx), o.n_list, character_option(o, ctx), ctx, o.threshold,
                                     verify_options(o)));
}

int cmd_verify_witt(const Options& o, std::ostream& out) {
  const PrimeContext ctx = verify_context(o);
  return emit_report(o, out,
                     verify_witt(o.nmax, parse_integral_kind(o.kind), character_option(o, ctx), ctx, o.threshold,
                                 verify_options(o)));
}

int cmd_verify_eq2(const Options& o, std::ostream& out) {
  const PrimeContext ctx = verify_context(o);
  return emit_report(o, out, verify_eq2_as_printed(ctx, o.threshold, verify_options(o)));
}

void add_context_flags(CLI::App* app, Options& o) {
  app->add_option("--p", o.p, "odd prime")->required();
  app->add_option("--q", o.q, "q as a/b with v_p(q-1) >= 1, or 1 for the classical case");
  app->add_option("--prec", o.prec, "absolute working precision in p-adic digits")->check(CLI::PositiveNumber);
  app->add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json"}));
}

void add_character_flags(CLI::App* app, Options& o) {
  auto* file = app->add_option("--char", o.char_file, "character table file (JSON)");
  app->add_option("--d", o.d, "use the quadratic character of this odd squarefree modulus")->excludes(file);
}

void add_run_flags(CLI::App* app, Options& o) {
  app->add_option("--workers", o.workers, "threads for the Riemann sums")->check(CLI::PositiveNumber);
  app->add_option("--max-level", o.max_level, "largest level N tried");
}

void add_verify_flags(CLI::App* app, Options& o) {
  add_context_flags(app, o);
  add_run_flags(app, o);
  app->add_option("--threshold", o.threshold, "required valuation of each difference (at least 4)");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact p-adic q-Volkenborn and fermionic integrals", "padicq"};
  app.require_subcommand(1);
  int (*handler)(const Options&, std::ostream&) = nullptr;
  auto on = [&handler](CLI::App* sub, int (*fn)(const Options&, std::ostream&)) {
    sub->callback([&handler, fn] { handler = fn; });
  };

  auto* bernoulli = app.add_subcommand("bernoulli", "q-Bernoulli numbers (classical at q = 1)");
  add_context_flags(bernoulli, o);
  bernoulli->add_option("--nmax", o.nmax, "largest index");
  on(bernoulli, cmd_bernoulli);

  auto* gen_bernoulli = app.add_subcommand("gen-bernoulli", "generalized q-Bernoulli numbers attached to a character");
  add_context_flags(gen_bernoulli, o);
  add_character_flags(gen_bernoulli, o);
  gen_bernoulli->add_option("--nmax", o.nmax, "largest index");
  on(gen_bernoulli, cmd_gen_bernoulli);

  auto* euler = app.add_subcommand("euler", "Frobenius-Euler numbers H_n(u), u = -1/q by default");
  add_context_flags(euler, o);
  euler->add_option("--nmax", o.nmax, "largest index");
  euler->add_option("--u", o.u, "u as a/b, u != 1");
  on(euler, cmd_euler);

  auto* gen_euler = app.add_subcommand("gen-euler", "generalized Frobenius-Euler numbers H_{n,chi}(-1/q)");
  add_context_flags(gen_euler, o);
  add_character_flags(gen_euler, o);
  gen_euler->add_option("--nmax", o.nmax, "largest index");
  on(gen_euler, cmd_gen_euler);

  auto* integ = app.add_subcommand("integrate", "integral of f by Riemann sums");
  add_context_flags(integ, o);
  add_run_flags(integ, o);
  integ->add_option("--f", o.f, "function: poly:c0,c1,... | chpoly:<file>:c0,... | expbase:a/b | shift:n:<f>")
      ->required();
  integ->add_option("--kind", o.kind, "bosonic or fermionic")->check(CLI::IsMember({"bosonic", "fermionic"}));
  integ->add_option("--d", o.d, "sum over residues mod d p^N (defaults to the modulus of f)");
  integ->add_option("--N", o.level, "evaluate the single Riemann sum at this level");
  on(integ, cmd_integrate);

  auto* log = app.add_subcommand("log", "p-adic logarithm of a rational 1-unit");
  add_context_flags(log, o);
  log->add_option("--x", o.x, "x as a/b")->required();
  on(log, cmd_log);

  auto* teich = app.add_subcommand("teichmuller", "Teichmuller representative of an integer");
  add_context_flags(teich, o);
  teich->add_option("--a", o.a, "integer prime to p")->required();
  on(teich, cmd_teichmuller);

  auto* verify = app.add_subcommand("verify", "compare Riemann sums with closed forms and series");
  verify->require_subcommand(1);

  auto* theorem1 = verify->add_subcommand("theorem1", "shift identity for the q-integral");
  add_verify_flags(theorem1, o);
  theorem1->add_option("--f", o.f, "function (untwisted)")->required();
  theorem1->add_option("--n", o.n_list, "shifts")->delimiter(',');
  on(theorem1, cmd_verify_theorem1);

  auto* theorem3 = verify->add_subcommand("theorem3", "shift identity for the fermionic integral");
  add_verify_flags(theorem3, o);
  add_character_flags(theorem3, o);
  theorem3->add_option("--f", o.f, "function")->required();
  theorem3->add_option("--n", o.n_list, "shifts")->delimiter(',');
  on(theorem3, cmd_verify_theorem3);

  auto* witt = verify->add_subcommand("witt", "moments against q-Bernoulli or Frobenius-Euler numbers");
  add_verify_flags(witt, o);
  add_character_flags(witt, o);
  witt->add_option("--nmax", o.nmax, "largest moment");
  witt->add_option("--kind", o.kind, "bosonic or fermionic")->check(CLI::IsMember({"bosonic", "fermionic"}));
  on(witt, cmd_verify_witt);

  auto* eq2 = verify->add_subcommand("eq2", "translation identity as printed against the corrected form");
  add_verify_flags(eq2, o);
  on(eq2, cmd_verify_eq2);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    return handler(o, out);
  } catch (const ConvergenceError& e) {
    err << "error: " << e.what() << '\n';
    return kPrecision;
  } catch (const PrecisionExhausted& e) {
    err << "error: " << e.what() << '\n';
    return kPrecision;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace padicq::cli
