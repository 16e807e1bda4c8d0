#include "padicq/integrator.hpp"

#include <numeric>
#include <optional>
#include <thread>

#include "montgomery.hpp"

namespace padicq {

namespace {

/// f flattened to factor * h(x) with h one of: polynomial, character times
/// polynomial, or r^(x + shift).
struct SumPlan {
  std::optional<PAdicNumber> factor;
  std::vector<mpq_class> coeffs{mpq_class(1)};
  std::optional<DirichletCharacter> chi;
  std::uint64_t char_offset = 0;
  std::optional<mpq_class> exp_base;
  std::uint64_t exp_shift = 0;
};

void flatten(const UDFunction& f, std::uint64_t shift, SumPlan& plan) {
  struct Visitor {
    std::uint64_t shift;
    SumPlan& plan;
    void operator()(const Poly& g) const { plan.coeffs = taylor_shift(g.coeffs, shift); }
    void operator()(const CharPoly& g) const {
      plan.coeffs = taylor_shift(g.coeffs, shift);
      plan.chi = g.chi;
      plan.char_offset = shift % g.chi.modulus();
    }
    void operator()(const ExpBase& g) const {
      plan.exp_base = g.base;
      plan.exp_shift = shift;
    }
    void operator()(const Shifted& g) const { flatten(*g.inner, shift + g.shift, plan); }
    void operator()(const Scaled& g) const {
      plan.factor = plan.factor ? *plan.factor * g.factor : g.factor;
      flatten(*g.inner, shift, plan);
    }
  };
  std::visit(Visitor{shift, plan}, f.node());
}

mpz_class rational_residue(const mpq_class& a, const mpz_class& m) {
  mpz_class inv;
  if (mpz_invert(inv.get_mpz_t(), a.get_den_mpz_t(), m.get_mpz_t()) == 0) {
    throw DomainError("coefficient " + a.get_str() + " is not p-integral");
  }
  mpz_class r = a.get_num() * inv;
  mpz_fdiv_r(r.get_mpz_t(), r.get_mpz_t(), m.get_mpz_t());
  return r;
}

/// Everything the summation loop needs, as residues modulo p^K.
struct KernelInput {
  mpz_class weight;               // q, -q, or that times the exponential base
  std::vector<mpz_class> coeffs;  // p-integral polynomial
  std::vector<mpz_class> chi;     // empty when untwisted
  std::uint64_t char_offset = 0;
};

/// sum_{lo <= j < hi} weight^j * chi(j + offset) * g(j) in the ring.
template <class Ring>
typename Ring::Elem sum_range(const Ring& ring, const KernelInput& in, std::uint64_t lo, std::uint64_t hi) {
  using Elem = typename Ring::Elem;
  const std::size_t deg = in.coeffs.size() - 1;

  std::vector<Elem> coeffs;
  coeffs.reserve(in.coeffs.size());
  for (const auto& c : in.coeffs) coeffs.push_back(ring.from_mpz(c));

  // Forward-difference table of g at lo, lo+1, ..., lo+deg.
  std::vector<Elem> diff(deg + 1);
  for (std::size_t i = 0; i <= deg; ++i) {
    const Elem x = ring.from_mpz(mpz_class(static_cast<unsigned long>(lo + i)));
    Elem acc = coeffs[deg];
    for (std::size_t k = deg; k-- > 0;) acc = ring.add(ring.mul(acc, x), coeffs[k]);
    diff[i] = acc;
  }
  const Elem minus_one = ring.from_mpz(mpz_class(-1));
  for (std::size_t order = 1; order <= deg; ++order) {
    for (std::size_t i = deg; i >= order; --i) diff[i] = ring.add(diff[i], ring.mul(minus_one, diff[i - 1]));
  }

  const Elem weight = ring.from_mpz(in.weight);
  Elem power = ring.one();
  {
    // weight^lo by square-and-multiply.
    Elem base = weight;
    for (std::uint64_t e = lo; e; e >>= 1) {
      if (e & 1) power = ring.mul(power, base);
      base = ring.mul(base, base);
    }
  }

  Elem acc = ring.zero();
  if (in.chi.empty()) {
    for (std::uint64_t j = lo; j < hi; ++j) {
      acc = ring.add(acc, ring.mul(power, diff[0]));
      power = ring.mul(power, weight);
      for (std::size_t k = 0; k < deg; ++k) diff[k] = ring.add(diff[k], diff[k + 1]);
    }
  } else {
    std::vector<Elem> chi;
    chi.reserve(in.chi.size());
    for (const auto& c : in.chi) chi.push_back(ring.from_mpz(c));
    const std::uint64_t d = chi.size();
    std::uint64_t idx = (lo + in.char_offset) % d;
    for (std::uint64_t j = lo; j < hi; ++j) {
      acc = ring.add(acc, ring.mul(ring.mul(power, diff[0]), chi[idx]));
      power = ring.mul(power, weight);
      for (std::size_t k = 0; k < deg; ++k) diff[k] = ring.add(diff[k], diff[k + 1]);
      if (++idx == d) idx = 0;
    }
  }
  return acc;
}

template <class Ring>
mpz_class parallel_sum(const Ring& ring, const KernelInput& in, std::uint64_t count, unsigned workers) {
  if (workers <= 1 || count < 2 * workers) return ring.to_mpz(sum_range(ring, in, 0, count));
  std::vector<mpz_class> partial(workers);
  std::vector<std::thread> threads;
  threads.reserve(workers);
  const std::uint64_t chunk = count / workers;
  for (unsigned w = 0; w < workers; ++w) {
    const std::uint64_t lo = w * chunk;
    const std::uint64_t hi = w + 1 == workers ? count : lo + chunk;
    threads.emplace_back([&, w, lo, hi] { partial[w] = ring.to_mpz(sum_range(ring, in, lo, hi)); });
  }
  for (auto& t : threads) t.join();
  mpz_class total = 0;
  for (const auto& s : partial) total += s;
  return total;
}

std::uint64_t index_count(std::uint64_t d, unsigned level, unsigned long p) {
  detail::u128 count = d;
  for (unsigned i = 0; i < level; ++i) {
    count *= p;
    if (count > (static_cast<detail::u128>(1) << 62)) {
      throw DomainError("index range d * p^N overflows at N = " + std::to_string(level));
    }
  }
  return static_cast<std::uint64_t>(count);
}

void check_modulus(const UDFunction& f, std::uint64_t d, IntegralKind kind, unsigned long p) {
  if (d == 0) throw DomainError("d must be positive");
  if (std::gcd(d, static_cast<std::uint64_t>(p)) != 1) {
    throw DomainError("d = " + std::to_string(d) + " is not prime to p = " + std::to_string(p));
  }
  if (d % f.modulus() != 0) {
    throw DomainError("d = " + std::to_string(d) + " is not a multiple of the character modulus " +
                      std::to_string(f.modulus()));
  }
  if (kind == IntegralKind::fermionic && d % 2 == 0) {
    throw DomainError("fermionic sums need odd d, got " + std::to_string(d));
  }
}

}  // namespace

std::string to_string(IntegralKind kind) { return kind == IntegralKind::bosonic ? "bosonic" : "fermionic"; }

IntegralKind parse_integral_kind(const std::string& text) {
  if (text == "bosonic") return IntegralKind::bosonic;
  if (text == "fermionic") return IntegralKind::fermionic;
  throw DomainError("integral kind must be 'bosonic' or 'fermionic', got '" + text + "'");
}

PAdicNumber measure_of_ball(std::uint64_t j, unsigned level, const PrimeContext& ctx) {
  const std::uint64_t pn = index_count(1, level, ctx.prime());
  if (j >= pn) throw DomainError("ball index j must satisfy 0 <= j < p^N");
  const long n = static_cast<long>(level);
  const PrimeContext wide = ctx.with_precision(ctx.precision() + n);
  const PAdicNumber qj = PAdicNumber::from_rational(ctx.q(), wide).pow(j);
  return (qj / q_bracket(pn, ctx.q(), wide)).reduced(ctx.precision() - n);
}

PAdicNumber riemann_sum(const UDFunction& f, std::uint64_t d, unsigned level, IntegralKind kind,
                        const PrimeContext& ctx, unsigned workers) {
  const unsigned long p = ctx.prime();
  check_modulus(f, d, kind, p);
  const std::uint64_t count = index_count(d, level, p);

  SumPlan plan;
  flatten(f, 0, plan);

  long denom_exp = 0;
  for (const auto& c : plan.coeffs) {
    if (c != 0) denom_exp = std::max(denom_exp, -valuation(c, p));
  }
  // The bosonic normalizer has valuation N; the fermionic one is a unit.
  const long loss = kind == IntegralKind::bosonic ? static_cast<long>(level) : 0;
  const long k = ctx.precision() + loss + denom_exp;
  const mpz_class m = prime_power(p, k);

  const mpq_class omega = kind == IntegralKind::bosonic ? ctx.q() : mpq_class(-ctx.q());
  KernelInput in;
  in.weight = rational_residue(omega, m);
  const mpz_class scale = prime_power(p, denom_exp);
  for (const auto& c : plan.coeffs) in.coeffs.push_back(rational_residue(c * mpq_class(scale), m));
  if (plan.chi) {
    in.chi = plan.chi->residues(k);
    in.char_offset = plan.char_offset;
  }
  mpz_class post = 1;
  if (plan.exp_base) {
    const mpz_class r = rational_residue(*plan.exp_base, m);
    in.weight = in.weight * r % m;
    mpz_powm_ui(post.get_mpz_t(), r.get_mpz_t(), plan.exp_shift, m.get_mpz_t());
  }

  mpz_class total;
  if (mpz_sizeinbase(m.get_mpz_t(), 2) <= 64) {
    const detail::Montgomery64 ring(m.get_ui());
    total = parallel_sum(ring, in, count, workers);
  } else {
    const detail::MpzRing ring(m);
    total = parallel_sum(ring, in, count, workers);
  }
  total = total * post;

  PAdicNumber sum = PAdicNumber::from_residue(total, p, k);
  if (denom_exp > 0) sum /= PAdicNumber::from_rational(mpq_class(scale), p, k + denom_exp);
  sum /= q_bracket(count, omega, ctx.with_precision(k));
  if (plan.factor) sum *= *plan.factor;
  return sum;
}

PAdicNumber riemann_sum_bosonic(const UDFunction& f, std::uint64_t d, unsigned level, const PrimeContext& ctx,
                                unsigned workers) {
  return riemann_sum(f, d, level, IntegralKind::bosonic, ctx, workers);
}

PAdicNumber riemann_sum_fermionic(const UDFunction& f, std::uint64_t d, unsigned level, const PrimeContext& ctx,
                                  unsigned workers) {
  return riemann_sum(f, d, level, IntegralKind::fermionic, ctx, workers);
}

IntegralResult integrate(const UDFunction& f, std::uint64_t d, IntegralKind kind, long target_valuation,
                         const PrimeContext& ctx, const IntegrateOptions& options) {
  if (target_valuation > ctx.precision() - kIntegrateSafetyMargin) {
    throw DomainError("target valuation " + std::to_string(target_valuation) + " exceeds working precision " +
                      std::to_string(ctx.precision()) + " minus safety margin " +
                      std::to_string(kIntegrateSafetyMargin));
  }
  check_modulus(f, d, kind, ctx.prime());

  IntegralResult result;
  result.kind = kind;
  std::optional<PAdicNumber> previous;
  bool monotone = true;
  for (unsigned level = options.first_level; level <= options.max_level; ++level) {
    std::uint64_t count = 0;
    try {
      count = index_count(d, level, ctx.prime());
    } catch (const DomainError&) {
      break;
    }
    if (count > options.max_terms) break;

    PAdicNumber current = riemann_sum(f, d, level, kind, ctx, options.workers);
    if (previous) {
      const long v = difference_valuation(current, *previous);
      if (!result.trajectory.empty() && v < result.trajectory.back()) monotone = false;
      result.trajectory.push_back(v);
      if (v >= target_valuation) {
        result.certified_valuation = std::min(v, current.absolute_precision());
        result.level = level;
        result.value = std::move(current);
        return result;
      }
    }
    previous = std::move(current);
  }

  std::string trail;
  for (long v : result.trajectory) trail += (trail.empty() ? "" : ", ") + std::to_string(v);
  throw ConvergenceError("integral of " + f.to_string() + " did not reach valuation " +
                             std::to_string(target_valuation) + " by level " + std::to_string(options.max_level) +
                             "; level-difference valuations [" + trail + "] (" +
                             (monotone ? "monotone" : "not monotone") + ")",
                         result.trajectory, monotone);
}

}  // namespace padicq
