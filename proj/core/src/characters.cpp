#include "padicq/characters.hpp"

#include <numeric>
#include <string>

#include "montgomery.hpp"

namespace padicq {

namespace {

std::vector<unsigned long> prime_factors(unsigned long n) {
  std::vector<unsigned long> out;
  for (unsigned long f = 2; f * f <= n; ++f) {
    if (n % f == 0) {
      out.push_back(f);
      while (n % f == 0) n /= f;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

bool is_squarefree(unsigned long n) {
  for (unsigned long f = 2; f * f <= n; ++f) {
    if (n % (f * f) == 0) return false;
  }
  return true;
}

mpz_class spec_residue(const CharacterValue& spec, unsigned long p, long k) {
  const mpz_class m = prime_power(p, k);
  if (const auto* iv = std::get_if<IntValue>(&spec)) {
    mpz_class r;
    mpz_fdiv_r(r.get_mpz_t(), mpz_class(iv->value).get_mpz_t(), m.get_mpz_t());
    return r;
  }
  const auto& tp = std::get<TeichPower>(spec);
  const mpz_class t = teichmuller_residue(tp.base, p, k);
  mpz_class r;
  mpz_powm_ui(r.get_mpz_t(), t.get_mpz_t(), tp.exponent, m.get_mpz_t());
  return r;
}

std::string spec_string(const CharacterValue& spec) {
  if (const auto* iv = std::get_if<IntValue>(&spec)) return std::to_string(iv->value);
  const auto& tp = std::get<TeichPower>(spec);
  return "teich(" + std::to_string(tp.base) + ")^" + std::to_string(tp.exponent);
}

}  // namespace

const PAdicNumber& DirichletCharacter::evaluate(std::int64_t x) const {
  const auto d = static_cast<std::int64_t>(modulus_);
  std::int64_t r = x % d;
  if (r < 0) r += d;
  return values_[static_cast<std::size_t>(r)];
}

std::vector<mpz_class> DirichletCharacter::residues(long k) const {
  std::vector<mpz_class> out;
  out.reserve(specs_.size());
  for (const auto& s : specs_) out.push_back(spec_residue(s, p_, k));
  return out;
}

DirichletCharacter DirichletCharacter::at_precision(long precision) const {
  return from_table(modulus_, specs_, PrimeContext(p_, precision));
}

DirichletCharacter from_table(unsigned long d, std::vector<CharacterValue> entries, const PrimeContext& ctx) {
  const unsigned long p = ctx.prime();
  const long k = ctx.precision();
  if (d == 0) throw DomainError("character modulus must be positive");
  if (std::gcd(d, p) != 1) {
    throw DomainError("character modulus " + std::to_string(d) + " is not prime to p = " + std::to_string(p));
  }
  if (entries.size() != d) {
    throw DomainError("character table for modulus " + std::to_string(d) + " needs " + std::to_string(d) +
                      " entries, got " + std::to_string(entries.size()));
  }
  for (const auto& e : entries) {
    if (const auto* tp = std::get_if<TeichPower>(&e); tp && tp->base % static_cast<long>(p) == 0) {
      throw DomainError("teichmuller base " + std::to_string(tp->base) + " is divisible by p");
    }
  }

  std::vector<mpz_class> res;
  res.reserve(d);
  for (const auto& e : entries) res.push_back(spec_residue(e, p, k));
  const mpz_class m = prime_power(p, k);

  for (unsigned long a = 0; a < d; ++a) {
    const bool unit = std::gcd(a, d) == 1;
    const bool zero = res[a] == 0;
    if (!unit && !zero) {
      throw DomainError("chi(" + std::to_string(a) + ") = " + spec_string(entries[a]) +
                        " must vanish since gcd(" + std::to_string(a) + ", " + std::to_string(d) + ") > 1");
    }
    if (unit && mpz_divisible_ui_p(res[a].get_mpz_t(), p)) {
      throw DomainError("chi(" + std::to_string(a) + ") = " + spec_string(entries[a]) + " is not a p-adic unit");
    }
  }
  for (unsigned long a = 0; a < d; ++a) {
    for (unsigned long b = a; b < d; ++b) {
      const unsigned long ab = static_cast<unsigned long>((static_cast<detail::u128>(a) * b) % d);
      mpz_class prod = res[a] * res[b];
      if (mpz_congruent_p(prod.get_mpz_t(), res[ab].get_mpz_t(), m.get_mpz_t()) == 0) {
        throw DomainError("not multiplicative: chi(" + std::to_string(a) + ")*chi(" + std::to_string(b) +
                          ") = " + spec_string(entries[a]) + "*" + spec_string(entries[b]) + " != chi(" +
                          std::to_string(ab) + ") = " + spec_string(entries[ab]));
      }
    }
  }

  // Every unit value must be a (p-1)-th root of unity; the order is the
  // least divisor m of p - 1 killing all of them.
  auto killed_by = [&](unsigned long e) {
    for (unsigned long a = 0; a < d; ++a) {
      if (std::gcd(a, d) != 1) continue;
      mpz_class r;
      mpz_powm_ui(r.get_mpz_t(), res[a].get_mpz_t(), e, m.get_mpz_t());
      if (r != 1) return false;
    }
    return true;
  };
  if (!killed_by(p - 1)) {
    throw DomainError("character values must be roots of unity of order dividing p - 1 = " +
                      std::to_string(p - 1));
  }
  unsigned long order = p - 1;
  for (unsigned long e = 1; e < p - 1; ++e) {
    if ((p - 1) % e == 0 && killed_by(e)) {
      order = e;
      break;
    }
  }

  DirichletCharacter chi;
  chi.modulus_ = d;
  chi.p_ = p;
  chi.precision_ = k;
  chi.order_ = order;
  chi.values_.reserve(d);
  for (unsigned long a = 0; a < d; ++a) {
    chi.values_.push_back(res[a] == 0 ? PAdicNumber::exact_zero(p) : PAdicNumber::from_residue(res[a], p, k));
  }
  chi.specs_ = std::move(entries);
  return chi;
}

int jacobi_symbol(long a, unsigned long n) {
  if (n % 2 == 0) throw DomainError("Jacobi symbol needs an odd modulus");
  return mpz_jacobi(mpz_class(a).get_mpz_t(), mpz_class(n).get_mpz_t());
}

unsigned long least_primitive_root(unsigned long n) {
  if (!is_prime(n)) throw DomainError(std::to_string(n) + " is not prime");
  if (n == 2) return 1;
  const auto factors = prime_factors(n - 1);
  for (unsigned long g = 2; g < n; ++g) {
    bool generator = true;
    for (unsigned long f : factors) {
      mpz_class r;
      mpz_powm_ui(r.get_mpz_t(), mpz_class(g).get_mpz_t(), (n - 1) / f, mpz_class(n).get_mpz_t());
      if (r == 1) {
        generator = false;
        break;
      }
    }
    if (generator) return g;
  }
  throw DomainError("no primitive root found modulo " + std::to_string(n));
}

DirichletCharacter quadratic_character(unsigned long d, const PrimeContext& ctx) {
  if (d == 0 || d % 2 == 0 || !is_squarefree(d)) {
    throw DomainError("quadratic character needs an odd squarefree modulus, got " + std::to_string(d));
  }
  std::vector<CharacterValue> table;
  table.reserve(d);
  for (unsigned long a = 0; a < d; ++a) {
    table.push_back(IntValue{d == 1 ? 1 : jacobi_symbol(static_cast<long>(a), d)});
  }
  return from_table(d, std::move(table), ctx);
}

DirichletCharacter cyclic_character(unsigned long d, unsigned long m, const PrimeContext& ctx) {
  const unsigned long p = ctx.prime();
  if (!is_prime(d)) throw DomainError("cyclic character needs a prime modulus, got " + std::to_string(d));
  if (d == p) throw DomainError("cyclic character modulus must differ from p");
  if (m == 0 || (d - 1) % m != 0) {
    throw DomainError("order m = " + std::to_string(m) + " does not divide d - 1 = " + std::to_string(d - 1));
  }
  if ((p - 1) % m != 0) {
    throw DomainError("order m = " + std::to_string(m) + " does not divide p - 1 = " + std::to_string(p - 1));
  }
  const unsigned long g = least_primitive_root(d);
  const unsigned long h = least_primitive_root(p);
  const unsigned long step = (p - 1) / m;

  std::vector<CharacterValue> table(d, IntValue{0});
  unsigned long x = 1;
  for (unsigned long k = 0; k < d - 1; ++k) {
    const unsigned long e = (k % m) * step;
    table[x] = e == 0 ? CharacterValue{IntValue{1}} : CharacterValue{TeichPower{static_cast<long>(h), e}};
    x = x * g % d;
  }
  return from_table(d, std::move(table), ctx);
}

DirichletCharacter trivial_character(const PrimeContext& ctx) { return from_table(1, {IntValue{1}}, ctx); }

}  // namespace padicq
