#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "padicq/characters.hpp"
#include "padicq/padic.hpp"

namespace padicq {

class UDFunction;

/// sum_i coeffs[i] x^i.
struct Poly {
  std::vector<mpq_class> coeffs;
};
/// chi(x) * sum_i coeffs[i] x^i.
struct CharPoly {
  DirichletCharacter chi;
  std::vector<mpq_class> coeffs;
};
/// r^x for a rational 1-unit r.
struct ExpBase {
  mpq_class base;
};
/// x -> inner(x + shift).
struct Shifted {
  std::shared_ptr<const UDFunction> inner;
  std::uint64_t shift;
};
/// x -> factor * inner(x).
struct Scaled {
  PAdicNumber factor;
  std::shared_ptr<const UDFunction> inner;
};

/// Symbolic uniformly differentiable function on Z_p.
class UDFunction {
 public:
  using Node = std::variant<Poly, CharPoly, ExpBase, Shifted, Scaled>;

  static UDFunction poly(std::vector<mpq_class> coeffs);
  /// x^n.
  static UDFunction monomial(unsigned n);
  static UDFunction char_poly(DirichletCharacter chi, std::vector<mpq_class> coeffs);
  /// Requires v_p(r - 1) >= 1.
  static UDFunction exp_base(mpq_class r, unsigned long p);
  static UDFunction shifted(const UDFunction& inner, std::uint64_t n);
  static UDFunction scaled(PAdicNumber factor, const UDFunction& inner);

  const Node& node() const noexcept { return node_; }

  /// Modulus of the character inside, or 1.
  unsigned long modulus() const;
  bool is_twisted() const { return modulus() != 1 || has_character(); }
  bool has_character() const;

  std::string to_string() const;

 private:
  explicit UDFunction(Node node) : node_(std::move(node)) {}
  Node node_;
};

/// f(j) to absolute precision ctx.precision().
PAdicNumber evaluate_f(const UDFunction& f, std::uint64_t j, const PrimeContext& ctx);

/// Symbolic derivative; throws DomainError for character twists.
UDFunction derivative_of(const UDFunction& f, const PrimeContext& ctx);

/// p-integral coefficients after a Taylor shift: g(x) = f(x + shift).
std::vector<mpq_class> taylor_shift(const std::vector<mpq_class>& coeffs, std::uint64_t shift);

using CharacterLoader = std::function<DirichletCharacter(const std::string& path)>;

/// Parses "poly:c0,c1,..." | "chpoly:<charfile>:c0,..." | "expbase:a/b" | "shift:<n>:<inner>".
UDFunction parse_ud_function(std::string_view text, const PrimeContext& ctx, const CharacterLoader& load_character);

}  // namespace padicq
