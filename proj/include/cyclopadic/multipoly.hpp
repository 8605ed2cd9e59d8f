#pragma once

// Sparse multivariate polynomials in X_1, X_2, ... over an exact coefficient
// ring (Integer or Rational). Terms are kept in a map ordered by descending
// graded reverse-lexicographic order so iteration, and therefore every
// serialized form, is deterministic.

#include "cyclopadic/integer.hpp"

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cyclopadic {

/// Exponent vector; entry i is the exponent of X_{i+1}. Canonical form has no
/// trailing zeros, so X_1 and X_1 * X_2^0 compare equal.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<std::uint32_t> exps) : e_(std::move(exps)) { trim(); }
  Monomial(std::initializer_list<std::uint32_t> exps) : e_(exps) { trim(); }

  /// X_var^power, with var counted from 1.
  static Monomial variable(std::size_t var, std::uint32_t power = 1) {
    if (var == 0) throw std::invalid_argument("variables are numbered from 1");
    std::vector<std::uint32_t> e(var, 0);
    e[var - 1] = power;
    return Monomial(std::move(e));
  }

  /// Exponent of X_var (1-based); zero past the stored length.
  std::uint32_t exponent(std::size_t var) const {
    return (var >= 1 && var <= e_.size()) ? e_[var - 1] : 0;
  }

  /// Index of the highest variable that occurs, 0 for the constant monomial.
  std::size_t nvars() const { return e_.size(); }

  std::uint64_t degree() const {
    return std::accumulate(e_.begin(), e_.end(), std::uint64_t{0});
  }

  const std::vector<std::uint32_t>& exponents() const { return e_; }

  /// Exponents padded with zeros to `width` entries.
  std::vector<std::uint32_t> padded(std::size_t width) const {
    std::vector<std::uint32_t> out = e_;
    if (out.size() < width) out.resize(width, 0);
    return out;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    std::vector<std::uint32_t> out(std::max(a.e_.size(), b.e_.size()), 0);
    for (std::size_t i = 0; i < a.e_.size(); ++i) out[i] += a.e_[i];
    for (std::size_t i = 0; i < b.e_.size(); ++i) out[i] += b.e_[i];
    return Monomial(std::move(out));
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;

  std::string str() const {
    std::string out;
    for (std::size_t i = 0; i < e_.size(); ++i) {
      if (e_[i] == 0) continue;
      if (!out.empty()) out += '*';
      out += "X" + std::to_string(i + 1);
      if (e_[i] > 1) out += "^" + std::to_string(e_[i]);
    }
    return out.empty() ? "1" : out;
  }

 private:
  void trim() {
    while (!e_.empty() && e_.back() == 0) e_.pop_back();
  }

  std::vector<std::uint32_t> e_;
};

/// Strict "a comes before b" for descending graded reverse-lex: higher total
/// degree first; on ties, the monomial whose last differing exponent is
/// smaller comes first.
struct GrevlexDescending {
  bool operator()(const Monomial& a, const Monomial& b) const {
    const auto da = a.degree();
    const auto db = b.degree();
    if (da != db) return da > db;
    const std::size_t width = std::max(a.nvars(), b.nvars());
    for (std::size_t var = width; var >= 1; --var) {
      const auto ea = a.exponent(var);
      const auto eb = b.exponent(var);
      if (ea != eb) return ea < eb;
    }
    return false;
  }
};

template <class Coeff>
class BasicMultiPoly {
 public:
  using coefficient_type = Coeff;
  using TermMap = std::map<Monomial, Coeff, GrevlexDescending>;
  using const_iterator = typename TermMap::const_iterator;

  BasicMultiPoly() = default;
  BasicMultiPoly(int c) { add_term(Monomial{}, Coeff(c)); }  // NOLINT(implicit)
  explicit BasicMultiPoly(const Coeff& c) { add_term(Monomial{}, c); }

  static BasicMultiPoly variable(std::size_t var, std::uint32_t power = 1) {
    BasicMultiPoly out;
    out.add_term(Monomial::variable(var, power), Coeff(1));
    return out;
  }

  static BasicMultiPoly monomial(const Monomial& m, const Coeff& c) {
    BasicMultiPoly out;
    out.add_term(m, c);
    return out;
  }

  /// Adds c * m in place, dropping the term if it cancels.
  void add_term(const Monomial& m, const Coeff& c) {
    if (cyclopadic::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (cyclopadic::is_zero(it->second)) terms_.erase(it);
    }
  }

  Coeff coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Coeff(0) : it->second;
  }

  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }
  const_iterator begin() const { return terms_.begin(); }
  const_iterator end() const { return terms_.end(); }

  /// Highest variable index occurring in any term.
  std::size_t nvars() const {
    std::size_t k = 0;
    for (const auto& [m, c] : terms_) k = std::max(k, m.nvars());
    return k;
  }

  std::uint64_t total_degree() const {
    return terms_.empty() ? 0 : terms_.begin()->first.degree();
  }

  BasicMultiPoly& operator+=(const BasicMultiPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }

  BasicMultiPoly& operator-=(const BasicMultiPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, Coeff(-c));
    return *this;
  }

  BasicMultiPoly& operator*=(const Coeff& s) {
    if (cyclopadic::is_zero(s)) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, c] : terms_) c *= s;
    return *this;
  }

  friend BasicMultiPoly operator+(BasicMultiPoly a, const BasicMultiPoly& b) { return a += b; }
  friend BasicMultiPoly operator-(BasicMultiPoly a, const BasicMultiPoly& b) { return a -= b; }
  friend BasicMultiPoly operator-(BasicMultiPoly a) {
    for (auto& [m, c] : a.terms_) c = -c;
    return a;
  }
  friend BasicMultiPoly operator*(BasicMultiPoly a, const Coeff& s) { return a *= s; }
  friend BasicMultiPoly operator*(const Coeff& s, BasicMultiPoly a) { return a *= s; }

  friend BasicMultiPoly operator*(const BasicMultiPoly& a, const BasicMultiPoly& b) {
    BasicMultiPoly out;
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, Coeff(ca * cb));
    }
    return out;
  }

  BasicMultiPoly& operator*=(const BasicMultiPoly& o) { return *this = *this * o; }

  /// Multiplies every term by c * m.
  BasicMultiPoly scaled_shift(const Monomial& m, const Coeff& c) const {
    BasicMultiPoly out;
    if (cyclopadic::is_zero(c)) return out;
    for (const auto& [mt, ct] : terms_) out.terms_.emplace_hint(out.terms_.end(), mt * m, Coeff(ct * c));
    return out;
  }

  friend bool operator==(const BasicMultiPoly& a, const BasicMultiPoly& b) { return a.terms_ == b.terms_; }

  friend std::ostream& operator<<(std::ostream& os, const BasicMultiPoly& p) {
    if (p.is_zero()) return os << "0";
    bool first = true;
    for (const auto& [m, c] : p.terms_) {
      if (!first) os << " + ";
      first = false;
      os << c;
      if (m.nvars() != 0) os << "*" << m.str();
    }
    return os;
  }

 private:
  TermMap terms_;
};

using MultiPoly = BasicMultiPoly<Integer>;
using RationalMultiPoly = BasicMultiPoly<Rational>;

template <class Coeff>
bool is_zero(const BasicMultiPoly<Coeff>& p) {
  return p.is_zero();
}

/// Binary exponentiation.
template <class Coeff>
BasicMultiPoly<Coeff> pow(BasicMultiPoly<Coeff> base, std::uint64_t n) {
  BasicMultiPoly<Coeff> acc(1);
  while (n) {
    if (n & 1) acc *= base;
    n >>= 1;
    if (n) base *= base;
  }
  return acc;
}

inline RationalMultiPoly to_rational(const MultiPoly& p) {
  RationalMultiPoly out;
  for (const auto& [m, c] : p) out.add_term(m, Rational(c));
  return out;
}

/// Throws internal_error if a coefficient is not an integer.
inline MultiPoly to_integer(const RationalMultiPoly& p, const char* what) {
  MultiPoly out;
  for (const auto& [m, c] : p) out.add_term(m, require_integral(c, what));
  return out;
}

}  // namespace cyclopadic
