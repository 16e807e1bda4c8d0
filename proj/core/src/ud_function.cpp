#include "padicq/ud_function.hpp"

#include <sstream>

namespace padicq {

namespace {

mpq_class parse_rational(std::string_view s) {
  const std::string text(s);
  if (text.empty()) throw DomainError("empty rational literal");
  mpq_class r;
  if (r.set_str(text, 10) != 0) throw DomainError("bad rational literal '" + text + "'");
  if (r.get_den() == 0) throw DomainError("zero denominator in '" + text + "'");
  r.canonicalize();
  return r;
}

std::vector<mpq_class> parse_coeffs(std::string_view s) {
  std::vector<mpq_class> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = s.find(',', start);
    out.push_back(parse_rational(s.substr(start, comma == std::string_view::npos ? s.npos : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string coeff_list(const std::vector<mpq_class>& coeffs) {
  std::string out;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (i) out += ",";
    out += coeffs[i].get_str();
  }
  return out;
}

PAdicNumber poly_value(const std::vector<mpq_class>& coeffs, std::uint64_t j, const PrimeContext& ctx) {
  const mpq_class x(static_cast<unsigned long>(j));
  mpq_class acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return PAdicNumber::from_rational(acc, ctx);
}

}  // namespace

UDFunction UDFunction::poly(std::vector<mpq_class> coeffs) {
  if (coeffs.empty()) coeffs.push_back(0);
  return UDFunction(Poly{std::move(coeffs)});
}

UDFunction UDFunction::monomial(unsigned n) {
  std::vector<mpq_class> c(n + 1, mpq_class(0));
  c[n] = 1;
  return poly(std::move(c));
}

UDFunction UDFunction::char_poly(DirichletCharacter chi, std::vector<mpq_class> coeffs) {
  if (coeffs.empty()) coeffs.push_back(0);
  return UDFunction(CharPoly{std::move(chi), std::move(coeffs)});
}

UDFunction UDFunction::exp_base(mpq_class r, unsigned long p) {
  r.canonicalize();
  if (r == 0 || valuation(mpq_class(r - 1), p) < 1) {
    throw DomainError("expbase needs v_p(r - 1) >= 1, got r = " + r.get_str());
  }
  return UDFunction(ExpBase{std::move(r)});
}

UDFunction UDFunction::shifted(const UDFunction& inner, std::uint64_t n) {
  return UDFunction(Shifted{std::make_shared<const UDFunction>(inner), n});
}

UDFunction UDFunction::scaled(PAdicNumber factor, const UDFunction& inner) {
  return UDFunction(Scaled{std::move(factor), std::make_shared<const UDFunction>(inner)});
}

unsigned long UDFunction::modulus() const {
  struct Visitor {
    unsigned long operator()(const Poly&) const { return 1; }
    unsigned long operator()(const CharPoly& c) const { return c.chi.modulus(); }
    unsigned long operator()(const ExpBase&) const { return 1; }
    unsigned long operator()(const Shifted& s) const { return s.inner->modulus(); }
    unsigned long operator()(const Scaled& s) const { return s.inner->modulus(); }
  };
  return std::visit(Visitor{}, node_);
}

bool UDFunction::has_character() const {
  struct Visitor {
    bool operator()(const Poly&) const { return false; }
    bool operator()(const CharPoly&) const { return true; }
    bool operator()(const ExpBase&) const { return false; }
    bool operator()(const Shifted& s) const { return s.inner->has_character(); }
    bool operator()(const Scaled& s) const { return s.inner->has_character(); }
  };
  return std::visit(Visitor{}, node_);
}

std::string UDFunction::to_string() const {
  struct Visitor {
    std::string operator()(const Poly& f) const { return "poly:" + coeff_list(f.coeffs); }
    std::string operator()(const CharPoly& f) const {
      return "chpoly:<mod " + std::to_string(f.chi.modulus()) + ">:" + coeff_list(f.coeffs);
    }
    std::string operator()(const ExpBase& f) const { return "expbase:" + f.base.get_str(); }
    std::string operator()(const Shifted& f) const {
      return "shift:" + std::to_string(f.shift) + ":" + f.inner->to_string();
    }
    std::string operator()(const Scaled& f) const {
      return "scale:(" + f.factor.to_string() + "):" + f.inner->to_string();
    }
  };
  return std::visit(Visitor{}, node_);
}

PAdicNumber evaluate_f(const UDFunction& f, std::uint64_t j, const PrimeContext& ctx) {
  struct Visitor {
    std::uint64_t j;
    const PrimeContext& ctx;
    PAdicNumber operator()(const Poly& g) const { return poly_value(g.coeffs, j, ctx); }
    PAdicNumber operator()(const CharPoly& g) const {
      const DirichletCharacter chi =
          g.chi.precision() >= ctx.precision() ? g.chi : g.chi.at_precision(ctx.precision());
      return chi.evaluate(static_cast<std::int64_t>(j % chi.modulus())) * poly_value(g.coeffs, j, ctx);
    }
    PAdicNumber operator()(const ExpBase& g) const {
      return PAdicNumber::from_rational(g.base, ctx).pow(j);
    }
    PAdicNumber operator()(const Shifted& g) const { return evaluate_f(*g.inner, j + g.shift, ctx); }
    PAdicNumber operator()(const Scaled& g) const { return g.factor * evaluate_f(*g.inner, j, ctx); }
  };
  return std::visit(Visitor{j, ctx}, f.node());
}

UDFunction derivative_of(const UDFunction& f, const PrimeContext& ctx) {
  struct Visitor {
    const PrimeContext& ctx;
    UDFunction operator()(const Poly& g) const {
      std::vector<mpq_class> d;
      for (std::size_t i = 1; i < g.coeffs.size(); ++i) {
        d.push_back(g.coeffs[i] * mpq_class(static_cast<unsigned long>(i)));
      }
      return UDFunction::poly(std::move(d));
    }
    UDFunction operator()(const CharPoly&) const {
      throw DomainError("derivative of a character-twisted function is not defined on Z_p");
    }
    UDFunction operator()(const ExpBase& g) const {
      const PAdicNumber log_r = padic_log(PAdicNumber::from_rational(g.base, ctx));
      return UDFunction::scaled(log_r, UDFunction::exp_base(g.base, ctx.prime()));
    }
    UDFunction operator()(const Shifted& g) const {
      return UDFunction::shifted(derivative_of(*g.inner, ctx), g.shift);
    }
    UDFunction operator()(const Scaled& g) const {
      return UDFunction::scaled(g.factor, derivative_of(*g.inner, ctx));
    }
  };
  return std::visit(Visitor{ctx}, f.node());
}

std::vector<mpq_class> taylor_shift(const std::vector<mpq_class>& coeffs, std::uint64_t shift) {
  if (shift == 0) return coeffs;
  const std::size_t n = coeffs.size();
  std::vector<mpq_class> out(n, mpq_class(0));
  const mpz_class s(static_cast<unsigned long>(shift));
  // (x + s)^i = sum_k C(i, k) s^(i-k) x^k
  for (std::size_t i = 0; i < n; ++i) {
    if (coeffs[i] == 0) continue;
    mpz_class binom = 1;
    for (std::size_t k = 0; k <= i; ++k) {
      mpz_class spow;
      mpz_pow_ui(spow.get_mpz_t(), s.get_mpz_t(), i - k);
      out[k] += coeffs[i] * mpq_class(binom * spow);
      binom = binom * static_cast<unsigned long>(i - k) / static_cast<unsigned long>(k + 1);
    }
  }
  return out;
}

UDFunction parse_ud_function(std::string_view text, const PrimeContext& ctx,
                             const CharacterLoader& load_character) {
  const std::size_t colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw DomainError("function '" + std::string(text) + "' lacks a 'kind:' prefix");
  }
  const std::string_view kind = text.substr(0, colon);
  const std::string_view rest = text.substr(colon + 1);
  if (kind == "poly") return UDFunction::poly(parse_coeffs(rest));
  if (kind == "expbase") return UDFunction::exp_base(parse_rational(rest), ctx.prime());
  if (kind == "chpoly") {
    const std::size_t sep = rest.rfind(':');
    if (sep == std::string_view::npos) throw DomainError("chpoly needs <charfile>:<coefficients>");
    if (!load_character) throw DomainError("chpoly given but no character loader available");
    return UDFunction::char_poly(load_character(std::string(rest.substr(0, sep))), parse_coeffs(rest.substr(sep + 1)));
  }
  if (kind == "shift") {
    const std::size_t sep = rest.find(':');
    if (sep == std::string_view::npos) throw DomainError("shift needs <n>:<inner>");
    const std::string n_text(rest.substr(0, sep));
    std::size_t used = 0;
    unsigned long long n = 0;
    try {
      n = std::stoull(n_text, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != n_text.size() || n_text.empty() || n_text[0] == '-') {
      throw DomainError("bad shift amount '" + n_text + "'");
    }
    return UDFunction::shifted(parse_ud_function(rest.substr(sep + 1), ctx, load_character), n);
  }
  throw DomainError("unknown function kind '" + std::string(kind) + "'");
}

}  // namespace padicq
