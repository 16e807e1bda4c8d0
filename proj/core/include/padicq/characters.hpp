#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "padicq/padic.hpp"

namespace padicq {

/// A table entry of a character: an integer, or teichmuller(base)^exponent.
struct IntValue {
  long value;
};
struct TeichPower {
  long base;
  unsigned long exponent;
};
using CharacterValue = std::variant<IntValue, TeichPower>;

/// Dirichlet character of modulus d with gcd(d, p) = 1 and values in Z_p.
///
/// The value specs are kept alongside the evaluated table so the character can
/// be re-evaluated at any precision (Riemann sums need more digits than the
/// working precision).
class DirichletCharacter {
 public:
  unsigned long modulus() const noexcept { return modulus_; }
  unsigned long prime() const noexcept { return p_; }
  long precision() const noexcept { return precision_; }
  /// Least m with chi^m trivial on units; divides p - 1.
  unsigned long order() const noexcept { return order_; }
  bool is_trivial() const noexcept { return order_ == 1; }

  const std::vector<CharacterValue>& specs() const noexcept { return specs_; }
  const std::vector<PAdicNumber>& values() const noexcept { return values_; }

  /// chi(x mod d).
  const PAdicNumber& evaluate(std::int64_t x) const;
  /// chi(0..d-1) as integers modulo p^k.
  std::vector<mpz_class> residues(long k) const;

  DirichletCharacter at_precision(long precision) const;

 private:
  friend DirichletCharacter from_table(unsigned long, std::vector<CharacterValue>, const PrimeContext&);

  DirichletCharacter() = default;

  unsigned long modulus_ = 1;
  unsigned long p_ = 0;
  long precision_ = 0;
  unsigned long order_ = 1;
  std::vector<CharacterValue> specs_;
  std::vector<PAdicNumber> values_;
};

/// Validates a full table chi(0..d-1). Rejects tables that are not
/// multiplicative, are nonzero off the units, vanish on a unit, or take a
/// value that is not a root of unity of order dividing p - 1.
DirichletCharacter from_table(unsigned long d, std::vector<CharacterValue> entries, const PrimeContext& ctx);

/// chi(a) = Jacobi symbol (a | d); d odd, squarefree, prime to p.
DirichletCharacter quadratic_character(unsigned long d, const PrimeContext& ctx);

/// Order-m character of prime modulus d: the least primitive root mod d maps
/// to teichmuller(h)^((p-1)/m), h the least primitive root mod p.
DirichletCharacter cyclic_character(unsigned long d, unsigned long m, const PrimeContext& ctx);

/// The character of modulus 1.
DirichletCharacter trivial_character(const PrimeContext& ctx);

int jacobi_symbol(long a, unsigned long n);

/// Least primitive root modulo the prime n.
unsigned long least_primitive_root(unsigned long n);

}  // namespace padicq
