#pragma once

// p-adic questions about exact integers: valuations, ideal membership,
// factorials and binomials, the Morita Gamma function at positive integers,
// and Wilson primes.
//
// Nothing here stores a truncated p-adic expansion. Every quantity is an
// exact integer, so "x is in m Z_p" reduces to v_p(x) >= v_p(m).

#include "cyclopadic/integer.hpp"

#include <compare>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace cyclopadic {

/// A p-adic valuation: a natural number or +infinity (the valuation of 0).
class Valuation {
 public:
  constexpr Valuation() = default;
  constexpr Valuation(std::uint64_t v) : v_(v) {  // NOLINT(implicit)
    if (v == kInf) throw std::out_of_range("valuation overflow");
  }

  static constexpr Valuation infinity() {
    Valuation out;
    out.v_ = kInf;
    return out;
  }

  constexpr bool is_infinite() const { return v_ == kInf; }

  std::uint64_t value() const {
    if (is_infinite()) throw std::logic_error("value() of infinite valuation");
    return v_;
  }

  constexpr auto operator<=>(const Valuation&) const = default;

  /// Valuation of a product.
  friend constexpr Valuation operator+(Valuation a, Valuation b) {
    if (a.is_infinite() || b.is_infinite()) return infinity();
    Valuation out;
    out.v_ = a.v_ + b.v_;
    return out;
  }

  std::string str() const { return is_infinite() ? "inf" : std::to_string(v_); }

 private:
  static constexpr std::uint64_t kInf = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t v_ = 0;
};

namespace detail {

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = mulmod(r, b, m);
    b = mulmod(b, b, m);
    e >>= 1;
  }
  return r;
}

// Product of the integers j in [lo, hi] with p not dividing j, by a balanced
// split so the operands stay comparable in size.
inline Integer coprime_range_product(std::uint64_t lo, std::uint64_t hi, std::uint64_t p) {
  if (lo > hi) return 1;
  if (hi - lo < 16) {
    Integer acc = 1;
    for (std::uint64_t j = lo; j <= hi; ++j) {
      if (j % p != 0) acc *= static_cast<unsigned long>(j);
    }
    return acc;
  }
  const std::uint64_t mid = lo + (hi - lo) / 2;
  return coprime_range_product(lo, mid, p) * coprime_range_product(mid + 1, hi, p);
}

}  // namespace detail

/// Deterministic primality test for 64-bit inputs (Miller-Rabin with the
/// first twelve prime bases, which is exact below 3.3e24).
inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = detail::powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = detail::mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

/// A prime p. Immutable once constructed.
class PadicContext {
 public:
  explicit PadicContext(std::uint64_t p) : p_(p), p_big_(static_cast<unsigned long>(p)) {
    if (!is_prime(p)) throw std::invalid_argument("not a prime: " + std::to_string(p));
  }

  std::uint64_t p() const { return p_; }
  const Integer& p_integer() const { return p_big_; }

 private:
  std::uint64_t p_;
  Integer p_big_;
};

/// Largest e with p^e | x; infinity for x = 0.
inline Valuation vp(const Integer& x, const PadicContext& ctx) {
  if (is_zero(x)) return Valuation::infinity();
  Integer rest;
  const auto e = mpz_remove(rest.get_mpz_t(), x.get_mpz_t(), ctx.p_integer().get_mpz_t());
  return Valuation(static_cast<std::uint64_t>(e));
}

inline Valuation vp(long x, const PadicContext& ctx) { return vp(Integer(x), ctx); }

/// x in m Z_p, i.e. v_p(x) >= v_p(m). The prime-to-p part of m is a unit and
/// plays no role.
inline bool in_mZp(const Integer& x, const Integer& m, const PadicContext& ctx) {
  if (is_zero(m)) throw std::invalid_argument("in_mZp: modulus must be nonzero");
  return vp(x, ctx) >= vp(m, ctx);
}

inline Integer factorial(std::uint64_t n) {
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

/// C(n, k) by the multiplicative formula with exact division at every step;
/// zero when k > n.
inline Integer binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  Integer acc = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    acc *= static_cast<unsigned long>(n - k + i);
    mpz_divexact_ui(acc.get_mpz_t(), acc.get_mpz_t(), static_cast<unsigned long>(i));
  }
  return acc;
}

/// Morita Gamma at a positive integer: (-1)^n times the product of the
/// integers 1 <= j < n not divisible by p.
inline Integer morita_gamma(std::uint64_t n, const PadicContext& ctx) {
  if (n < 1) throw std::invalid_argument("morita_gamma: argument must be >= 1");
  Integer prod = detail::coprime_range_product(1, n - 1, ctx.p());
  return sign_power(n) < 0 ? Integer(-prod) : prod;
}

/// Gamma_p(hi + 1) / Gamma_p(lo + 1) for lo <= hi, which is the exact integer
/// (-1)^(hi - lo) times the product of the p-coprime j in (lo, hi].
inline Integer morita_gamma_ratio(std::uint64_t hi, std::uint64_t lo, const PadicContext& ctx) {
  if (lo > hi) throw std::invalid_argument("morita_gamma_ratio: need lo <= hi");
  Integer prod = detail::coprime_range_product(lo + 1, hi, ctx.p());
  return sign_power(hi - lo) < 0 ? Integer(-prod) : prod;
}

/// Outcome of a single valuation check. `difference` is the quantity whose
/// valuation was measured.
struct CheckResult {
  bool passed = false;
  Integer difference;
  Valuation observed;
  Valuation required;
};

/// (mp)! == (-1)^(pm+1) Gamma_p(pm+1) m! p^m, as an exact integer identity.
/// The result carries lhs - rhs, which must be zero.
inline CheckResult check_gamma_factorial_identity(std::uint64_t m, const PadicContext& ctx) {
  const std::uint64_t p = ctx.p();
  const Integer lhs = factorial(m * p);
  Integer rhs = morita_gamma(p * m + 1, ctx) * factorial(m) * pow_ui(ctx.p_integer(), m);
  if (sign_power(p * m + 1) < 0) rhs = -rhs;
  CheckResult out;
  out.difference = lhs - rhs;
  out.observed = vp(out.difference, ctx);
  out.required = Valuation::infinity();
  out.passed = out.observed.is_infinite();
  return out;
}

/// Gamma_p(pm+1) + 1 in (pm/2) Z_p, read as v_p(Gamma_p(pm+1) + 1) >=
/// v_p(pm) - v_p(2). For odd p the 2 is a unit. For p = 2 the reading is
/// unverified and callers are expected to report without asserting.
inline CheckResult check_gamma_congruence(std::uint64_t m, const PadicContext& ctx) {
  if (m < 1) throw std::invalid_argument("check_gamma_congruence: m must be >= 1");
  const std::uint64_t pm = ctx.p() * m;
  CheckResult out;
  out.difference = morita_gamma(pm + 1, ctx) + 1;
  out.observed = vp(out.difference, ctx);
  const std::uint64_t need = vp(Integer(static_cast<unsigned long>(pm)), ctx).value();
  const std::uint64_t two = ctx.p() == 2 ? 1 : 0;
  out.required = Valuation(need >= two ? need - two : 0);
  out.passed = out.observed >= out.required;
  return out;
}

struct BinomialLiftResult {
  CheckResult lift;      // C(np, pm) - C(n, m) in np Z_p
  CheckResult multiple;  // pm C(n, m) in np Z_p
  bool passed() const { return lift.passed && multiple.passed; }
};

inline BinomialLiftResult check_binomial_lift(std::uint64_t n, std::uint64_t m, const PadicContext& ctx) {
  if (n < 1) throw std::invalid_argument("check_binomial_lift: n must be >= 1");
  const std::uint64_t p = ctx.p();
  const Integer modulus = Integer(static_cast<unsigned long>(n)) * ctx.p_integer();
  const Valuation need = vp(modulus, ctx);
  const Integer cnm = binomial(n, m);

  BinomialLiftResult out;
  out.lift.difference = binomial(n * p, p * m) - cnm;
  out.lift.observed = vp(out.lift.difference, ctx);
  out.lift.required = need;
  out.lift.passed = out.lift.observed >= need;

  out.multiple.difference = Integer(static_cast<unsigned long>(p * m)) * cnm;
  out.multiple.observed = vp(out.multiple.difference, ctx);
  out.multiple.required = need;
  out.multiple.passed = out.multiple.observed >= need;
  return out;
}

/// True iff (p-1)! == -1 (mod p^2).
inline bool wilson_quotient_test(const PadicContext& ctx) {
  if (ctx.p() == 2) throw std::invalid_argument("wilson_quotient_test: p must be odd");
  const Integer p2 = ctx.p_integer() * ctx.p_integer();
  Integer r = (factorial(ctx.p() - 1) + 1) % p2;
  return is_zero(r);
}

}  // namespace cyclopadic
