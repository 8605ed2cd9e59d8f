#pragma once

// Cycle types of S_n and the cycle indicator
//
//   C_n = sum over cycle types (m_1..m_n) of  n! / prod(i^m_i m_i!) * prod X_i^m_i
//
// built by the derivative recurrence C_m = sum_{j<m} (m-1)!/j! X_{m-j} C_j.
// The direct formula, the determinant and the exponential generating
// function give three more routes to the same polynomial.

#include "cyclopadic/integer.hpp"
#include "cyclopadic/multipoly.hpp"
#include "cyclopadic/padic.hpp"
#include "cyclopadic/series.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace cyclopadic {

/// Multiplicities (m_1..m_n) of a permutation's cycle lengths, with
/// sum i*m_i = n. n = 0 is the empty permutation.
class CycleType {
 public:
  CycleType() = default;

  /// m[i-1] is the number of i-cycles. Trailing entries past n must be zero.
  CycleType(std::size_t n, std::vector<std::uint32_t> m) : n_(n), m_(std::move(m)) {
    if (m_.size() > n_) {
      for (std::size_t i = n_; i < m_.size(); ++i) {
        if (m_[i] != 0) throw std::invalid_argument("cycle type has a part longer than n");
      }
    }
    m_.resize(n_, 0);
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < m_.size(); ++i) total += static_cast<std::uint64_t>(i + 1) * m_[i];
    if (total != n_) {
      throw std::invalid_argument("not a cycle type of " + std::to_string(n_) + ": sum i*m_i = " +
                                  std::to_string(total));
    }
  }

  /// The class of permutations with m_1 fixed points, m_p p-cycles and
  /// nothing else, as used throughout the congruence checks.
  static CycleType two_part(std::size_t n, std::uint32_t m1, std::size_t p, std::uint32_t mp) {
    std::vector<std::uint32_t> m(n, 0);
    if (n >= 1) m[0] += m1;
    if (mp != 0) {
      if (p > n) throw std::invalid_argument("two_part: p exceeds n");
      m[p - 1] += mp;
    }
    return CycleType(n, std::move(m));
  }

  /// Parses "m1,m2,...,mn".
  static CycleType parse(std::size_t n, const std::string& text) {
    std::vector<std::uint32_t> m;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos) {
        throw std::invalid_argument("bad cycle type entry '" + item + "'");
      }
      m.push_back(static_cast<std::uint32_t>(std::stoul(item)));
    }
    return CycleType(n, std::move(m));
  }

  std::size_t n() const { return n_; }

  /// m_i for i >= 1; zero beyond n.
  std::uint32_t m(std::size_t i) const { return (i >= 1 && i <= n_) ? m_[i - 1] : 0; }

  const std::vector<std::uint32_t>& multiplicities() const { return m_; }

  Monomial monomial() const { return Monomial(m_); }

  std::string str() const {
    std::string out = "(";
    for (std::size_t i = 0; i < m_.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(m_[i]);
    }
    return out + ")";
  }

  friend bool operator==(const CycleType&, const CycleType&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint32_t> m_;
};

namespace detail {

template <class F>
void partitions_rec(std::size_t remaining, std::size_t max_part, std::vector<std::uint32_t>& m, std::size_t n,
                    F& visit) {
  if (remaining == 0) {
    visit(CycleType(n, m));
    return;
  }
  for (std::size_t part = std::min(remaining, max_part); part >= 1; --part) {
    ++m[part - 1];
    partitions_rec(remaining - part, part, m, n, visit);
    --m[part - 1];
  }
}

}  // namespace detail

/// Visits every cycle type of n once, partitions in reverse lexicographic
/// order: (n), (n-1,1), (n-2,2), (n-2,1,1), ..., (1,...,1).
template <class F>
void for_each_cycle_type(std::size_t n, F&& visit) {
  std::vector<std::uint32_t> m(n, 0);
  detail::partitions_rec(n, n, m, n, visit);
}

inline std::vector<CycleType> cycle_types(std::size_t n) {
  std::vector<CycleType> out;
  for_each_cycle_type(n, [&](const CycleType& ct) { out.push_back(ct); });
  return out;
}

/// Size of the conjugacy class: n! / prod_i i^m_i m_i!.
inline Integer coefficient(const CycleType& ct) {
  Integer denom = 1;
  for (std::size_t i = 1; i <= ct.n(); ++i) {
    const auto mi = ct.m(i);
    if (mi == 0) continue;
    denom *= pow_ui(Integer(static_cast<unsigned long>(i)), mi) * factorial(mi);
  }
  Integer num = factorial(ct.n());
  if (!mpz_divisible_p(num.get_mpz_t(), denom.get_mpz_t())) {
    throw internal_error("cycle index coefficient not integral for " + ct.str());
  }
  mpz_divexact(num.get_mpz_t(), num.get_mpz_t(), denom.get_mpz_t());
  return num;
}

/// C_0 .. C_N, built once and then read-only.
class CycleIndexTable {
 public:
  explicit CycleIndexTable(std::size_t max_n) {
    table_.reserve(max_n + 1);
    table_.emplace_back(1);
    for (std::size_t m = 1; m <= max_n; ++m) table_.push_back(next(m));
  }

  std::size_t max_n() const { return table_.size() - 1; }

  const MultiPoly& operator[](std::size_t n) const {
    if (n >= table_.size()) {
      throw std::out_of_range("cycle index table holds C_0..C_" + std::to_string(max_n()) + ", asked for C_" +
                              std::to_string(n));
    }
    return table_[n];
  }

 private:
  MultiPoly next(std::size_t m) const {
    MultiPoly acc;
    const Integer top = factorial(m - 1);
    for (std::size_t j = 0; j < m; ++j) {
      Integer w = top;
      const Integer bottom = factorial(j);
      if (!mpz_divisible_p(w.get_mpz_t(), bottom.get_mpz_t())) {
        throw internal_error("(m-1)!/j! not integral in cycle index recurrence");
      }
      mpz_divexact(w.get_mpz_t(), w.get_mpz_t(), bottom.get_mpz_t());
      const Monomial x = Monomial::variable(m - j);
      for (const auto& [mono, c] : table_[j]) acc.add_term(mono * x, Integer(c * w));
    }
    return acc;
  }

  std::vector<MultiPoly> table_;
};

inline MultiPoly cycle_indicator(std::size_t n) { return CycleIndexTable(n)[n]; }

/// sum over cycle types of coefficient(ct) * X^ct.
inline MultiPoly cycle_indicator_direct(std::size_t n) {
  if (n == 0) return MultiPoly(1);
  MultiPoly out;
  for_each_cycle_type(n, [&](const CycleType& ct) { out.add_term(ct.monomial(), coefficient(ct)); });
  return out;
}

inline constexpr std::size_t kDefaultDeterminantBound = 8;

/// Determinant of the m x m matrix with X_{i-j+1} on and below the diagonal
/// and -i on the superdiagonal of row i, by cofactor expansion along rows
/// with the minors memoized by their column set.
inline MultiPoly cycle_indicator_via_determinant(std::size_t m, std::size_t bound = kDefaultDeterminantBound) {
  if (m < 1) throw std::invalid_argument("determinant route needs m >= 1");
  if (m > bound || m > 20) {
    throw std::invalid_argument("determinant route limited to m <= " + std::to_string(bound) +
                                "; use cycle_indicator() for larger m");
  }
  auto entry = [](std::size_t row, std::size_t col) -> MultiPoly {  // 0-based
    if (col <= row) return MultiPoly::variable(row - col + 1);
    if (col == row + 1) return MultiPoly(Integer(-static_cast<long>(row + 1)));
    return MultiPoly();
  };

  std::map<std::uint32_t, MultiPoly> memo;
  std::function<MultiPoly(std::size_t, std::uint32_t)> minor = [&](std::size_t row, std::uint32_t cols) {
    if (row == m) return MultiPoly(1);
    if (auto it = memo.find(cols); it != memo.end()) return it->second;
    MultiPoly acc;
    int position = 0;
    for (std::size_t col = 0; col < m; ++col) {
      if (!(cols & (1u << col))) continue;
      const MultiPoly e = entry(row, col);
      if (!e.is_zero()) {
        MultiPoly term = e * minor(row + 1, cols & ~(1u << col));
        if (position % 2) term = -term;
        acc += term;
      }
      ++position;
    }
    memo.emplace(cols, acc);
    return acc;
  };
  return minor(0, (1u << m) - 1);
}

/// n! [t^n] exp(sum_{i=1..n} X_i t^i / i), exactly over the rationals.
inline MultiPoly cycle_indicator_via_egf(std::size_t n) {
  TruncatedSeries<RationalMultiPoly> s(n);
  for (std::size_t i = 1; i <= n; ++i) {
    s[i] = RationalMultiPoly::monomial(Monomial::variable(i), Rational(1, static_cast<unsigned long>(i)));
  }
  return to_integer(egf_coefficient(series_exp(s), n), "cycle_indicator_via_egf");
}

}  // namespace cyclopadic
