#pragma once

#include <cstdint>

#include <gmpxx.h>

namespace padicq::detail {

__extension__ typedef unsigned __int128 u128;

/// Arithmetic modulo an odd n < 2^64 in Montgomery form (R = 2^64).
class Montgomery64 {
 public:
  using Elem = std::uint64_t;

  explicit Montgomery64(std::uint64_t n) : n_(n) {
    // Newton iteration for n^{-1} mod 2^64; each step doubles the correct bits.
    std::uint64_t inv = n;
    for (int i = 0; i < 6; ++i) inv *= 2 - n * inv;
    ninv_ = inv;
    const std::uint64_t r1 = (0 - n) % n;
    r2_ = static_cast<std::uint64_t>(static_cast<u128>(r1) * r1 % n);
    one_ = r1;
  }

  std::uint64_t modulus() const noexcept { return n_; }
  Elem one() const noexcept { return one_; }
  Elem zero() const noexcept { return 0; }

  Elem reduce(u128 t) const noexcept {
    const auto lo = static_cast<std::uint64_t>(t);
    const auto hi = static_cast<std::uint64_t>(t >> 64);
    const std::uint64_t m = lo * ninv_;
    const auto mn_hi = static_cast<std::uint64_t>((static_cast<u128>(m) * n_) >> 64);
    return hi >= mn_hi ? hi - mn_hi : hi - mn_hi + n_;
  }

  Elem mul(Elem a, Elem b) const noexcept { return reduce(static_cast<u128>(a) * b); }
  Elem add(Elem a, Elem b) const noexcept {
    const Elem s = a + b;
    return (s < a || s >= n_) ? s - n_ : s;
  }

  Elem from_mpz(const mpz_class& x) const {
    mpz_class r;
    mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), mpz_class(static_cast<unsigned long>(n_)).get_mpz_t());
    return mul(static_cast<std::uint64_t>(r.get_ui()), r2_);
  }
  mpz_class to_mpz(Elem a) const { return mpz_class(static_cast<unsigned long>(reduce(a))); }

 private:
  std::uint64_t n_;
  std::uint64_t ninv_;
  std::uint64_t r2_;
  std::uint64_t one_;
};

/// Fallback for moduli of any size.
class MpzRing {
 public:
  using Elem = mpz_class;

  explicit MpzRing(mpz_class n) : n_(std::move(n)) {}

  const mpz_class& modulus() const noexcept { return n_; }
  Elem one() const { return 1; }
  Elem zero() const { return 0; }

  Elem mul(const Elem& a, const Elem& b) const {
    mpz_class r = a * b;
    mpz_fdiv_r(r.get_mpz_t(), r.get_mpz_t(), n_.get_mpz_t());
    return r;
  }
  Elem add(const Elem& a, const Elem& b) const {
    mpz_class s = a + b;
    if (s >= n_) s -= n_;
    return s;
  }
  Elem from_mpz(const mpz_class& x) const {
    mpz_class r;
    mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), n_.get_mpz_t());
    return r;
  }
  mpz_class to_mpz(const Elem& a) const { return a; }

 private:
  mpz_class n_;
};

}  // namespace padicq::detail
