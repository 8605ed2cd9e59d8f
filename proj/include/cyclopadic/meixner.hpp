#pragma once

// Meixner polynomials in the arctan convention:
//
//   (1 + t^2)^(-1/2) exp(X arctan t) = sum Q_n(X) t^n / n!
//                   exp(X arctan t) = sum Q*_n(X) t^n / n!
//
// Q_n comes from the truncated generating function in exact rationals. Q*_n
// comes from substituting x_i = 0 (i even), (-1)^((i-1)/2) X (i odd) into the
// cycle indicator C_n, which is the same series since X arctan t =
// sum x_i t^i / i.

#include "cyclopadic/congruence.hpp"
#include "cyclopadic/congruences.hpp"
#include "cyclopadic/cycle_index.hpp"
#include "cyclopadic/integer.hpp"
#include "cyclopadic/padic.hpp"
#include "cyclopadic/report.hpp"
#include "cyclopadic/series.hpp"
#include "cyclopadic/unipoly.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

namespace cyclopadic {

/// Largest n for which Q*_n is built by substitution into C_n. C_n has p(n)
/// terms (p(40) = 37338); past this the series route is used.
inline constexpr std::size_t kQstarSubstitutionMax = 40;

namespace detail {

inline TruncatedSeries<RationalUniPoly> x_arctan_series(std::size_t order) {
  const auto atan = series_arctan(TruncatedSeries<Rational>::t(order));
  return atan.map([](const Rational& c) { return RationalUniPoly::monomial(1, c); });
}

inline std::vector<UniPoly> egf_coefficients(const TruncatedSeries<RationalUniPoly>& s, const char* what) {
  std::vector<UniPoly> out;
  out.reserve(s.order() + 1);
  for (std::size_t n = 0; n <= s.order(); ++n) out.push_back(to_integer(egf_coefficient(s, n), what));
  return out;
}

}  // namespace detail

/// Q*_0 .. Q*_N from the series exp(X arctan t).
inline std::vector<UniPoly> meixner_qstar_series_table(std::size_t max_n) {
  return detail::egf_coefficients(series_exp(detail::x_arctan_series(max_n)), "meixner_qstar_series");
}

/// Q_0 .. Q_N from the series (1 + t^2)^(-1/2) exp(X arctan t).
inline std::vector<UniPoly> meixner_q_table(std::size_t max_n) {
  TruncatedSeries<Rational> one_plus_t2 = TruncatedSeries<Rational>::constant(max_n, Rational(1));
  if (max_n >= 2) one_plus_t2[2] = 1;
  const auto damping = series_inv_sqrt(one_plus_t2).map([](const Rational& c) { return RationalUniPoly(c); });
  const auto full = series_mul(damping, series_exp(detail::x_arctan_series(max_n)));
  return detail::egf_coefficients(full, "meixner_q");
}

inline UniPoly meixner_q(std::size_t n) { return meixner_q_table(n)[n]; }

inline UniPoly meixner_qstar_series(std::size_t n) { return meixner_qstar_series_table(n)[n]; }

/// Images x_i of X_i under which C_n becomes Q*_n.
inline std::map<std::size_t, UniPoly> arctan_images(std::size_t n) {
  std::map<std::size_t, UniPoly> images;
  for (std::size_t i = 1; i <= n; ++i) {
    if (i % 2 == 0) {
      images.emplace(i, UniPoly());
    } else {
      images.emplace(i, UniPoly::monomial(1, Integer(sign_power((i - 1) / 2))));
    }
  }
  return images;
}

inline UniPoly meixner_qstar_substitution(const MultiPoly& cycle_index, std::size_t n) {
  return substitute_univariate(cycle_index, arctan_images(n));
}

inline UniPoly meixner_qstar(std::size_t n) {
  if (n > kQstarSubstitutionMax) return meixner_qstar_series(n);
  return meixner_qstar_substitution(cycle_indicator(n), n);
}

/// Fast path: Q_{n+1} = X Q_n - n^2 Q_{n-1}, from (1 + t^2) F' = (X - t) F
/// for the generating function F. The series route stays authoritative; this
/// is checked against it in the tests.
inline std::vector<UniPoly> meixner_q_recurrence_table(std::size_t max_n) {
  std::vector<UniPoly> q;
  q.reserve(max_n + 1);
  q.emplace_back(1);
  if (max_n >= 1) q.push_back(UniPoly::x());
  for (std::size_t k = 1; k + 1 <= max_n; ++k) {
    const Integer k2 = as_integer(k) * as_integer(k);
    q.push_back(UniPoly::x() * q[k] - q[k - 1] * k2);
  }
  return q;
}

/// Q_0..Q_N and Q*_0..Q*_N, computed once and shared read-only.
class MeixnerTable {
 public:
  explicit MeixnerTable(std::size_t max_n) : q_(meixner_q_table(max_n)) {
    const std::size_t sub = std::min(max_n, kQstarSubstitutionMax);
    const CycleIndexTable c(sub);
    for (std::size_t n = 0; n <= sub; ++n) qstar_.push_back(meixner_qstar_substitution(c[n], n));
    if (max_n > sub) {
      auto rest = meixner_qstar_series_table(max_n);
      for (std::size_t n = sub + 1; n <= max_n; ++n) qstar_.push_back(std::move(rest[n]));
    }
  }

  std::size_t max_n() const { return q_.size() - 1; }
  const UniPoly& q(std::size_t n) const { return q_.at(n); }
  const UniPoly& qstar(std::size_t n) const { return qstar_.at(n); }

 private:
  std::vector<UniPoly> q_;
  std::vector<UniPoly> qstar_;
};

/// X^p - (-1)^((p-1)/2) X
inline UniPoly junod_target(std::uint64_t p) {
  return UniPoly::monomial(p, Integer(1)) - UniPoly::monomial(1, Integer(sign_power((p - 1) / 2)));
}

namespace detail {

inline void require_odd(const char* name, const PadicContext& ctx) {
  if (ctx.p() == 2) throw std::invalid_argument(std::string(name) + ": p must be odd");
}

inline void compare_into(CongruenceReport& rep, const std::string& label, const UniPoly& lhs, const UniPoly& rhs,
                         const Integer& modulus, const PadicContext& ctx) {
  const CongruenceOutcome out = congruent_mod(lhs, rhs, modulus, ctx);
  rep.instances += out.compared;
  if (!out.holds) rep.violations.push_back(violation_from(label, *out.witness, modulus));
}

}  // namespace detail

/// Q*_np == Q_np (mod np Z_p[X]).
inline CongruenceReport check_junod_qstar_q(std::uint64_t n, const MeixnerTable& table, const PadicContext& ctx,
                                            const OptMutation& mut = {}) {
  detail::require_odd("meixner-qstar-q", ctx);
  if (n < 1) throw std::invalid_argument("meixner-qstar-q: n must be >= 1");
  detail::Stopwatch clock;
  const std::uint64_t p = ctx.p();
  CongruenceReport rep;
  rep.checker = "meixner-qstar-q";
  rep.params = {{"p", static_cast<std::int64_t>(p)}, {"n", static_cast<std::int64_t>(n)}};
  UniPoly lhs = table.qstar(n * p);
  detail::mutate(lhs, mut);
  detail::compare_into(rep, "Q*_np vs Q_np", lhs, table.q(n * p), as_integer(n) * ctx.p_integer(), ctx);
  rep.elapsed_ms = clock.elapsed_ms();
  return rep;
}

inline CongruenceReport check_junod_qstar_q(std::uint64_t n, const PadicContext& ctx, const OptMutation& mut = {}) {
  return check_junod_qstar_q(n, MeixnerTable(n * ctx.p()), ctx, mut);
}

/// Q_p == X^p - (-1)^((p-1)/2) X (mod p Z_p[X]).
inline CongruenceReport check_junod_qp(const MeixnerTable& table, const PadicContext& ctx,
                                       const OptMutation& mut = {}) {
  detail::require_odd("meixner-qp", ctx);
  detail::Stopwatch clock;
  const std::uint64_t p = ctx.p();
  CongruenceReport rep;
  rep.checker = "meixner-qp";
  rep.params = {{"p", static_cast<std::int64_t>(p)}};
  UniPoly lhs = table.q(p);
  detail::mutate(lhs, mut);
  detail::compare_into(rep, "Q_p vs X^p-(-1)^((p-1)/2)X", lhs, junod_target(p), ctx.p_integer(), ctx);
  rep.elapsed_ms = clock.elapsed_ms();
  return rep;
}

inline CongruenceReport check_junod_qp(const PadicContext& ctx, const OptMutation& mut = {}) {
  return check_junod_qp(MeixnerTable(ctx.p()), ctx, mut);
}

/// Q_np == Q_p^n == (X^p - (-1)^((p-1)/2) X)^n (mod np Z_p[X]).
inline CongruenceReport check_corollary2(std::uint64_t n, const MeixnerTable& table, const PadicContext& ctx,
                                         const OptMutation& mut = {}) {
  detail::require_odd("corollary2", ctx);
  if (n < 1) throw std::invalid_argument("corollary2: n must be >= 1");
  detail::Stopwatch clock;
  const std::uint64_t p = ctx.p();
  CongruenceReport rep;
  rep.checker = "corollary2";
  rep.params = {{"p", static_cast<std::int64_t>(p)}, {"n", static_cast<std::int64_t>(n)}};
  const Integer modulus = as_integer(n) * ctx.p_integer();
  UniPoly lhs = table.q(n * p);
  detail::mutate(lhs, mut);
  detail::compare_into(rep, "Q_np vs Q_p^n", lhs, pow(table.q(p), n), modulus, ctx);
  detail::compare_into(rep, "Q_np vs (X^p-(-1)^((p-1)/2)X)^n", lhs, pow(junod_target(p), n), modulus, ctx);
  rep.elapsed_ms = clock.elapsed_ms();
  return rep;
}

inline CongruenceReport check_corollary2(std::uint64_t n, const PadicContext& ctx, const OptMutation& mut = {}) {
  return check_corollary2(n, MeixnerTable(n * ctx.p()), ctx, mut);
}

}  // namespace cyclopadic
