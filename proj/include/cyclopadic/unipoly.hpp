#pragma once

// Dense univariate polynomials in X. Index i of the coefficient vector holds
// the coefficient of X^i; the leading stored coefficient is never zero.

#include "cyclopadic/integer.hpp"

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <utility>
#include <vector>

namespace cyclopadic {

template <class Coeff>
class BasicUniPoly {
 public:
  using coefficient_type = Coeff;

  BasicUniPoly() = default;
  BasicUniPoly(int c) : c_{Coeff(c)} { trim(); }  // NOLINT(implicit)
  explicit BasicUniPoly(const Coeff& c) : c_{c} { trim(); }
  explicit BasicUniPoly(std::vector<Coeff> coeffs) : c_(std::move(coeffs)) { trim(); }
  BasicUniPoly(std::initializer_list<Coeff> coeffs) : c_(coeffs) { trim(); }

  /// c * X^k
  static BasicUniPoly monomial(std::size_t k, const Coeff& c) {
    std::vector<Coeff> v(k + 1, Coeff(0));
    v[k] = c;
    return BasicUniPoly(std::move(v));
  }

  static BasicUniPoly x() { return monomial(1, Coeff(1)); }

  bool is_zero() const { return c_.empty(); }

  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }

  Coeff coefficient(std::size_t k) const { return k < c_.size() ? c_[k] : Coeff(0); }
  Coeff leading() const { return c_.empty() ? Coeff(0) : c_.back(); }
  const std::vector<Coeff>& coeffs() const { return c_; }

  /// P(-X)
  BasicUniPoly negate_variable() const {
    BasicUniPoly out = *this;
    for (std::size_t k = 1; k < out.c_.size(); k += 2) out.c_[k] = -out.c_[k];
    return out;
  }

  BasicUniPoly& operator+=(const BasicUniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Coeff(0));
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
  }

  BasicUniPoly& operator-=(const BasicUniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Coeff(0));
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
  }

  BasicUniPoly& operator*=(const Coeff& s) {
    for (auto& c : c_) c *= s;
    trim();
    return *this;
  }

  friend BasicUniPoly operator+(BasicUniPoly a, const BasicUniPoly& b) { return a += b; }
  friend BasicUniPoly operator-(BasicUniPoly a, const BasicUniPoly& b) { return a -= b; }
  friend BasicUniPoly operator-(BasicUniPoly a) {
    for (auto& c : a.c_) c = -c;
    return a;
  }
  friend BasicUniPoly operator*(BasicUniPoly a, const Coeff& s) { return a *= s; }
  friend BasicUniPoly operator*(const Coeff& s, BasicUniPoly a) { return a *= s; }

  friend BasicUniPoly operator*(const BasicUniPoly& a, const BasicUniPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Coeff> out(a.c_.size() + b.c_.size() - 1, Coeff(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (cyclopadic::is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    }
    return BasicUniPoly(std::move(out));
  }

  BasicUniPoly& operator*=(const BasicUniPoly& o) { return *this = *this * o; }

  friend bool operator==(const BasicUniPoly& a, const BasicUniPoly& b) { return a.c_ == b.c_; }

  friend std::ostream& operator<<(std::ostream& os, const BasicUniPoly& p) {
    if (p.is_zero()) return os << "0";
    bool first = true;
    for (std::size_t k = p.c_.size(); k-- > 0;) {
      if (cyclopadic::is_zero(p.c_[k])) continue;
      if (!first) os << " + ";
      first = false;
      os << p.c_[k];
      if (k == 1) os << "*X";
      if (k > 1) os << "*X^" << k;
    }
    return os;
  }

 private:
  void trim() {
    while (!c_.empty() && cyclopadic::is_zero(c_.back())) c_.pop_back();
  }

  std::vector<Coeff> c_;
};

using UniPoly = BasicUniPoly<Integer>;
using RationalUniPoly = BasicUniPoly<Rational>;

template <class Coeff>
bool is_zero(const BasicUniPoly<Coeff>& p) {
  return p.is_zero();
}

template <class Coeff>
BasicUniPoly<Coeff> pow(BasicUniPoly<Coeff> base, std::uint64_t n) {
  BasicUniPoly<Coeff> acc(1);
  while (n) {
    if (n & 1) acc *= base;
    n >>= 1;
    if (n) base *= base;
  }
  return acc;
}

inline RationalUniPoly to_rational(const UniPoly& p) {
  std::vector<Rational> v;
  v.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) v.emplace_back(c);
  return RationalUniPoly(std::move(v));
}

inline UniPoly to_integer(const RationalUniPoly& p, const char* what) {
  std::vector<Integer> v;
  v.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) v.push_back(require_integral(c, what));
  return UniPoly(std::move(v));
}

}  // namespace cyclopadic
