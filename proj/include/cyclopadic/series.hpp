#pragma once

// Truncated formal power series in t with exact coefficients. A series of
// order N carries c_0..c_N and every operation is exact through degree N.
//
// The coefficient type may itself be a polynomial (RationalUniPoly,
// RationalMultiPoly); it needs ring operations, construction from int, and
// multiplication by a Rational scalar.

#include "cyclopadic/integer.hpp"
#include "cyclopadic/multipoly.hpp"
#include "cyclopadic/unipoly.hpp"

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace cyclopadic {

template <class Coeff>
class TruncatedSeries {
 public:
  using coefficient_type = Coeff;

  explicit TruncatedSeries(std::size_t order) : c_(order + 1, Coeff(0)) {}

  TruncatedSeries(std::size_t order, std::vector<Coeff> coeffs) : c_(std::move(coeffs)) {
    c_.resize(order + 1, Coeff(0));
  }

  /// The series t.
  static TruncatedSeries t(std::size_t order) {
    TruncatedSeries out(order);
    if (order >= 1) out.c_[1] = Coeff(1);
    return out;
  }

  static TruncatedSeries constant(std::size_t order, const Coeff& c) {
    TruncatedSeries out(order);
    out.c_[0] = c;
    return out;
  }

  std::size_t order() const { return c_.size() - 1; }
  const Coeff& operator[](std::size_t k) const { return c_.at(k); }
  Coeff& operator[](std::size_t k) { return c_.at(k); }
  const std::vector<Coeff>& coeffs() const { return c_; }

  TruncatedSeries& operator+=(const TruncatedSeries& o) {
    shrink_to(o.order());
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
    return *this;
  }

  TruncatedSeries& operator-=(const TruncatedSeries& o) {
    shrink_to(o.order());
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
    return *this;
  }

  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }

  friend TruncatedSeries operator*(const Rational& s, TruncatedSeries a) {
    for (auto& c : a.c_) c = s * c;
    return a;
  }

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

  /// Applies f to every coefficient, e.g. to lift scalars into polynomials.
  template <class F>
  auto map(F&& f) const {
    using Out = decltype(f(c_[0]));
    std::vector<Out> v;
    v.reserve(c_.size());
    for (const auto& c : c_) v.push_back(f(c));
    return TruncatedSeries<Out>(order(), std::move(v));
  }

 private:
  void shrink_to(std::size_t order) {
    if (order < this->order()) c_.resize(order + 1);
  }

  std::vector<Coeff> c_;
};

/// Cauchy product, truncated at the smaller of the two orders.
template <class Coeff>
TruncatedSeries<Coeff> series_mul(const TruncatedSeries<Coeff>& a, const TruncatedSeries<Coeff>& b) {
  const std::size_t n = std::min(a.order(), b.order());
  TruncatedSeries<Coeff> out(n);
  for (std::size_t i = 0; i <= n; ++i) {
    if (is_zero(a[i])) continue;
    for (std::size_t j = 0; i + j <= n; ++j) {
      if (is_zero(b[j])) continue;
      out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

/// exp(s) for s with zero constant term, from E' = s' E:
/// n E_n = sum_{k=1..n} k s_k E_{n-k}.
template <class Coeff>
TruncatedSeries<Coeff> series_exp(const TruncatedSeries<Coeff>& s) {
  if (!is_zero(s[0])) throw std::invalid_argument("series_exp: constant term must be 0");
  const std::size_t n = s.order();
  TruncatedSeries<Coeff> e(n);
  e[0] = Coeff(1);
  for (std::size_t m = 1; m <= n; ++m) {
    Coeff acc(0);
    for (std::size_t k = 1; k <= m; ++k) {
      if (is_zero(s[k])) continue;
      acc += Rational(static_cast<long>(k)) * (s[k] * e[m - k]);
    }
    e[m] = Rational(1, static_cast<unsigned long>(m)) * acc;
  }
  return e;
}

/// s^(-1/2) for s with constant term 1, via the binomial series
/// sum_k C(-1/2, k) (s - 1)^k.
template <class Coeff>
TruncatedSeries<Coeff> series_inv_sqrt(const TruncatedSeries<Coeff>& s) {
  if (!(s[0] == Coeff(1))) throw std::invalid_argument("series_inv_sqrt: constant term must be 1");
  const std::size_t n = s.order();
  TruncatedSeries<Coeff> u = s;
  u[0] = Coeff(0);
  TruncatedSeries<Coeff> out = TruncatedSeries<Coeff>::constant(n, Coeff(1));
  TruncatedSeries<Coeff> u_pow = TruncatedSeries<Coeff>::constant(n, Coeff(1));
  Rational binom = 1;  // C(-1/2, k)
  for (std::size_t k = 1; k <= n; ++k) {
    binom *= Rational(-1, 2) - Rational(static_cast<long>(k) - 1);
    binom /= Rational(static_cast<long>(k));
    u_pow = series_mul(u_pow, u);
    out += binom * u_pow;
  }
  return out;
}

/// arctan(s) = sum_k (-1)^k s^(2k+1) / (2k+1) for s with zero constant term.
template <class Coeff>
TruncatedSeries<Coeff> series_arctan(const TruncatedSeries<Coeff>& s) {
  if (!is_zero(s[0])) throw std::invalid_argument("series_arctan: constant term must be 0");
  const std::size_t n = s.order();
  const TruncatedSeries<Coeff> s2 = series_mul(s, s);
  TruncatedSeries<Coeff> odd_pow = s;  // s^(2k+1)
  TruncatedSeries<Coeff> out(n);
  for (std::size_t k = 0; 2 * k + 1 <= n; ++k) {
    const long sign = (k % 2 == 0) ? 1 : -1;
    out += Rational(sign, static_cast<unsigned long>(2 * k + 1)) * odd_pow;
    odd_pow = series_mul(odd_pow, s2);
  }
  return out;
}

/// n! times the coefficient of t^n.
template <class Coeff>
Coeff egf_coefficient(const TruncatedSeries<Coeff>& s, std::size_t n) {
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(f) * s[n];
}

}  // namespace cyclopadic
