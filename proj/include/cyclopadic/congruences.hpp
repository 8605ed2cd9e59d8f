#pragma once

// Executable checkers for the congruences satisfied by cycle-index
// coefficients and polynomials. Each checker sweeps one parameter tuple and
// returns a CongruenceReport; an empty violation list means every instance
// passed.
//
// Coefficient-level checkers recompute c-values from the direct formula and
// never read them out of a CycleIndexTable, so a bug in the polynomial builder
// cannot hide a failure here (and vice versa).

#include "cyclopadic/congruence.hpp"
#include "cyclopadic/cycle_index.hpp"
#include "cyclopadic/integer.hpp"
#include "cyclopadic/multipoly.hpp"
#include "cyclopadic/padic.hpp"
#include "cyclopadic/report.hpp"

#include <cstdint>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace cyclopadic {

/// n* = n/2 for even n, n otherwise.
struct NStar {
  std::uint64_t n;

  explicit NStar(std::uint64_t n_) : n(n_) {
    if (n == 0) throw std::invalid_argument("n* needs n >= 1");
  }
  std::uint64_t value() const { return n % 2 == 0 ? n / 2 : n; }
};

inline Integer as_integer(std::uint64_t x) { return Integer(static_cast<unsigned long>(x)); }

/// True when every cycle has length 1 or p.
inline bool only_fixed_points_and_p_cycles(const CycleType& ct, std::uint64_t p) {
  for (std::size_t i = 2; i <= ct.n(); ++i) {
    if (i != p && ct.m(i) != 0) return false;
  }
  return true;
}

/// The per-instance outcome of a coefficient congruence.
struct CoeffVerdict {
  bool first_branch = false;
  Integer expected;  // the residue the coefficient should have
  Integer difference;
  Integer modulus;
  Valuation observed;
  Valuation required;
  bool passed = false;
};

namespace detail {

inline CoeffVerdict coeff_verdict(const CycleType& ct, std::uint64_t n, std::uint64_t sign_exponent_factor,
                                  const Integer& modulus, const Integer& value, const PadicContext& ctx) {
  CoeffVerdict v;
  const std::uint64_t p = ctx.p();
  v.first_branch = only_fixed_points_and_p_cycles(ct, p);
  if (v.first_branch) {
    const std::uint64_t mp = ct.m(p);
    v.expected = binomial(n, mp);
    if (sign_power(sign_exponent_factor * mp) < 0) v.expected = -v.expected;
  } else {
    v.expected = 0;
  }
  v.modulus = modulus;
  v.difference = value - v.expected;
  v.observed = vp(v.difference, ctx);
  v.required = vp(modulus, ctx);
  v.passed = v.observed >= v.required;
  return v;
}

inline std::string branch_label(const CycleType& ct, bool first) {
  return "ct=" + ct.str() + (first ? " branch=fixed-and-p-cycles" : " branch=other-cycles");
}

}  // namespace detail

/// c_np(ct) == (-1)^m_p C(n, m_p) or 0 (mod p Z_p), for one cycle type of np.
inline CoeffVerdict carlitz_coeff_verdict(const CycleType& ct, std::uint64_t n, const Integer& value,
                                          const PadicContext& ctx) {
  return detail::coeff_verdict(ct, n, 1, ctx.p_integer(), value, ctx);
}

/// c_np(ct) == (-1)^(p m_p) C(n, m_p) or 0 (mod n* p Z_p).
inline CoeffVerdict prop_coeff_verdict(const CycleType& ct, std::uint64_t n, const Integer& value,
                                       const PadicContext& ctx) {
  return detail::coeff_verdict(ct, n, ctx.p(), as_integer(NStar(n).value()) * ctx.p_integer(), value, ctx);
}

namespace detail {

template <class Verdict>
CongruenceReport coeff_sweep(const char* name, std::uint64_t n, const PadicContext& ctx, const OptMutation& mut,
                             Verdict verdict) {
  if (n < 1) throw std::invalid_argument(std::string(name) + ": n must be >= 1");
  Stopwatch clock;
  CongruenceReport rep;
  rep.checker = name;
  rep.params = {{"p", static_cast<std::int64_t>(ctx.p())}, {"n", static_cast<std::int64_t>(n)}};
  for_each_cycle_type(n * ctx.p(), [&](const CycleType& ct) {
    Integer c = coefficient(ct);
    if (mut && mut->hits(ct.multiplicities())) c += mut->delta;
    const CoeffVerdict v = verdict(ct, n, c, ctx);
    ++rep.instances;
    if (!v.passed) {
      rep.violations.push_back(Violation{branch_label(ct, v.first_branch), ct.multiplicities(), v.difference,
                                         v.modulus, v.observed, v.required});
    }
  });
  rep.elapsed_ms = clock.elapsed_ms();
  return rep;
}

}  // namespace detail

inline CongruenceReport check_carlitz_coeff(std::uint64_t n, const PadicContext& ctx, const OptMutation& mut = {}) {
  return detail::coeff_sweep("carlitz-coeff", n, ctx, mut, carlitz_coeff_verdict);
}

inline CongruenceReport check_prop_coeff(std::uint64_t n, const PadicContext& ctx, const OptMutation& mut = {}) {
  return detail::coeff_sweep("prop-coeff", n, ctx, mut, prop_coeff_verdict);
}

/// X_1^p - X_p
inline MultiPoly carlitz_binomial(std::uint64_t p) {
  return MultiPoly::variable(1, static_cast<std::uint32_t>(p)) - MultiPoly::variable(p);
}

namespace detail {

inline CongruenceReport poly_report(const char* name, std::uint64_t r, std::uint64_t n, const PadicContext& ctx) {
  CongruenceReport rep;
  rep.checker = name;
  rep.params = {{"p", static_cast<std::int64_t>(ctx.p())},
                {"n", static_cast<std::int64_t>(n)},
                {"r", static_cast<std::int64_t>(r)}};
  return rep;
}

inline void compare_into(CongruenceReport& rep, const std::string& label, const MultiPoly& lhs, const MultiPoly& rhs,
                         const Integer& modulus, const PadicContext& ctx) {
  const CongruenceOutcome out = congruent_mod(lhs, rhs, modulus, ctx);
  rep.instances += out.compared;
  if (!out.holds) rep.violations.push_back(violation_from(label, *out.witness, modulus));
}

}  // namespace detail

/// C_{r+np} == (X_1^p - X_p)^n C_r (mod p Z_p[X]).
inline CongruenceReport check_carlitz_poly(std::uint64_t r, std::uint64_t n, const CycleIndexTable& table,
                                           const PadicContext& ctx, const OptMutation& mut = {}) {
  detail::Stopwatch clock;
  const std::uint64_t p = ctx.p();
  CongruenceReport rep = detail::poly_report("carlitz-poly", r, n, ctx);
  MultiPoly lhs = table[r + n * p];
  detail::mutate(lhs, mut);
  const MultiPoly rhs = pow(carlitz_binomial(p), n) * table[r];
  detail::compare_into(rep, "C_{r+np} vs (X1^p-Xp)^n C_r", lhs, rhs, ctx.p_integer(), ctx);
  rep.elapsed_ms = clock.elapsed_ms();
  return rep;
}

inline CongruenceReport check_carlitz_poly(std::uint64_t r, std::uint64_t n, const PadicContext& ctx,
                                           const OptMutation& mut = {}) {
  return check_carlitz_poly(r, n, CycleIndexTable(r + n * ctx.p()), ctx, mut);
}

/// C_{r+np} == (X_1^p - X_p)^n C_r (mod n* p Z_p[X]), and the same with the
/// factor written (X_1^p + (-1)^p X_p)^n.
inline CongruenceReport check_prop_poly(std::uint64_t r, std::uint64_t n, const CycleIndexTable& table,
                                        const PadicContext& ctx, const OptMutation& mut = {}) {
  detail::Stopwatch clock;
  const std::uint64_t p = ctx.p();
  CongruenceReport rep = detail::poly_report("prop-poly", r, n, ctx);
  const Integer modulus = as_integer(NStar(n).value()) * ctx.p_integer();
  MultiPoly lhs = table[r + n * p];
  detail::mutate(lhs, mut);
  const MultiPoly rhs = pow(carlitz_binomial(p), n) * table[r];
  detail::compare_into(rep, "C_{r+np} vs (X1^p-Xp)^n C_r", lhs, rhs, modulus, ctx);

  MultiPoly signed_form = MultiPoly::variable(1, static_cast<std::uint32_t>(p));
  signed_form += MultiPoly(Integer(sign_power(p))) * MultiPoly::variable(p);
  const MultiPoly rhs_signed = pow(signed_form, n) * table[r];
  detail::compare_into(rep, "C_{r+np} vs (X1^p+(-1)^p Xp)^n C_r", lhs, rhs_signed, modulus, ctx);
  rep.elapsed_ms = clock.elapsed_ms();
  return rep;
}

inline CongruenceReport check_prop_poly(std::uint64_t r, std::uint64_t n, const PadicContext& ctx,
                                        const OptMutation& mut = {}) {
  return check_prop_poly(r, n, CycleIndexTable(r + n * ctx.p()), ctx, mut);
}

namespace detail {

inline void require_small_r(const char* name, std::uint64_t r, const PadicContext& ctx) {
  if (r < 1 || r + 1 > ctx.p()) {
    throw std::invalid_argument(std::string(name) + ": r must lie in [1, p-1]");
  }
}

}  // namespace detail

/// Coefficients of C_{r+np} for 1 <= r <= p-1. When m_1 >= p(n - m_p) >= 0:
///   c_{r+np}(m) == (-1)^(p m_p) C(n, m_p) c_r(m_1 + p m_p - np, m_2, ..., m_r),
/// otherwise c_{r+np}(m) == 0, both mod n* p Z_p. If the shifted tuple is not
/// a cycle type of r, c_r of it is taken to be 0; the report notes how often.
inline CongruenceReport check_corollary1(std::uint64_t r, std::uint64_t n, const PadicContext& ctx,
                                         const OptMutation& mut = {}) {
  detail::require_small_r("corollary1", r, ctx);
  if (n < 1) throw std::invalid_argument("corollary1: n must be >= 1");
  detail::Stopwatch clock;
  const std::uint64_t p = ctx.p();
  CongruenceReport rep = detail::poly_report("corollary1", r, n, ctx);
  const Integer modulus = as_integer(NStar(n).value()) * ctx.p_integer();
  const Valuation need = vp(modulus, ctx);
  std::uint64_t infeasible_rhs = 0;
  std::string first_infeasible;

  for_each_cycle_type(r + n * p, [&](const CycleType& ct) {
    Integer c = coefficient(ct);
    if (mut && mut->hits(ct.multiplicities())) c += mut->delta;
    const std::uint64_t m1 = ct.m(1);
    const std::uint64_t mp = ct.m(p);
    const bool branch_a = mp <= n && m1 >= p * (n - mp);
    Integer expected = 0;
    if (branch_a) {
      std::vector<std::uint32_t> shifted(r, 0);
      shifted[0] = static_cast<std::uint32_t>(m1 + p * mp - n * p);
      std::uint64_t weight = shifted[0];
      for (std::size_t i = 2; i <= r; ++i) {
        shifted[i - 1] = ct.m(i);
        weight += i * ct.m(i);
      }
      Integer cr = 0;
      if (weight == r) {
        cr = coefficient(CycleType(r, shifted));
      } else {
        if (infeasible_rhs++ == 0) first_infeasible = ct.str();
      }
      expected = binomial(n, mp) * cr;
      if (sign_power(p * mp) < 0) expected = -expected;
    }
    const Integer diff = c - expected;
    const Valuation got = vp(diff, ctx);
    ++rep.instances;
    if (got < need) {
      rep.violations.push_back(Violation{"ct=" + ct.str() + (branch_a ? " branch=a" : " branch=b"),
                                         ct.multiplicities(), diff, modulus, got, need});
    }
  });
  if (infeasible_rhs != 0) {
    rep.notes.push_back("c_r of a non-cycle-type taken as 0 in " + std::to_string(infeasible_rhs) +
                        " branch-a instance(s), first at ct=" + first_infeasible);
  }
  rep.elapsed_ms = clock.elapsed_ms();
  return rep;
}

/// c_{r+np}(m_1, .., m_p, ..) == c_np(m_1 - r, .., m_p, ..) (mod n* p Z_p) for
/// every class made of fixed points and m_p <= n p-cycles.
inline CongruenceReport check_remark1(std::uint64_t r, std::uint64_t n, const PadicContext& ctx,
                                      const OptMutation& mut = {}) {
  detail::require_small_r("remark1", r, ctx);
  if (n < 1) throw std::invalid_argument("remark1: n must be >= 1");
  detail::Stopwatch clock;
  const std::uint64_t p = ctx.p();
  CongruenceReport rep = detail::poly_report("remark1", r, n, ctx);
  const Integer modulus = as_integer(NStar(n).value()) * ctx.p_integer();
  const Valuation need = vp(modulus, ctx);
  for (std::uint64_t mp = 0; mp <= n; ++mp) {
    const std::uint64_t m1 = r + p * n - p * mp;
    const CycleType big = CycleType::two_part(r + n * p, static_cast<std::uint32_t>(m1), p, static_cast<std::uint32_t>(mp));
    const CycleType small = CycleType::two_part(n * p, static_cast<std::uint32_t>(m1 - r), p, static_cast<std::uint32_t>(mp));
    Integer lhs = coefficient(big);
    if (mut && mut->hits(big.multiplicities())) lhs += mut->delta;
    const Integer diff = lhs - coefficient(small);
    const Valuation got = vp(diff, ctx);
    ++rep.instances;
    if (got < need) {
      rep.violations.push_back(Violation{"ct=" + big.str() + " vs " + small.str(), big.multiplicities(), diff,
                                         modulus, got, need});
    }
  }
  rep.elapsed_ms = clock.elapsed_ms();
  return rep;
}

namespace detail {

// Uniform draw from [lo, hi] by rejection on the raw 64-bit output, so the
// sequence depends only on mt19937_64 (whose output is fixed by the standard).
inline std::int64_t draw(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return lo + static_cast<std::int64_t>(x % span);
}

inline MultiPoly random_small_poly(std::mt19937_64& rng) {
  MultiPoly out;
  const auto nterms = draw(rng, 1, 3);
  for (std::int64_t t = 0; t < nterms; ++t) {
    std::vector<std::uint32_t> e(3);
    for (auto& x : e) x = static_cast<std::uint32_t>(draw(rng, 0, 2));
    out.add_term(Monomial(e), Integer(static_cast<long>(draw(rng, -3, 3))));
  }
  return out;
}

}  // namespace detail

inline constexpr std::uint64_t kDefaultJunodSeed = 20230251;

/// Randomized check of: m in pZ and a == b (mod m) imply a^n == b^n
/// (mod mn), in Z[X_1, X_2, X_3]. Each trial draws a, g, k in [1, 20],
/// n in [1, 12] and sets m = p k, b = a + m g. Reproducible from the seed.
inline CongruenceReport check_junod_lemma(std::uint64_t trials, std::uint64_t seed, const PadicContext& ctx,
                                          const OptMutation& mut = {}) {
  detail::Stopwatch clock;
  CongruenceReport rep;
  rep.checker = "junod-lemma";
  rep.params = {{"p", static_cast<std::int64_t>(ctx.p())}, {"trials", static_cast<std::int64_t>(trials)}};
  rep.seed = seed;
  std::mt19937_64 rng(seed);
  for (std::uint64_t trial = 0; trial < trials; ++trial) {
    const MultiPoly alpha = detail::random_small_poly(rng);
    const MultiPoly gamma = detail::random_small_poly(rng);
    const auto k = static_cast<std::uint64_t>(detail::draw(rng, 1, 20));
    const auto n = static_cast<std::uint64_t>(detail::draw(rng, 1, 12));
    const Integer m = as_integer(k) * ctx.p_integer();
    const MultiPoly beta = alpha + gamma * m;
    MultiPoly lhs = pow(alpha, n);
    detail::mutate(lhs, mut);
    const Integer modulus = m * as_integer(n);
    const CongruenceOutcome out = congruent_mod(lhs, pow(beta, n), modulus, ctx);
    ++rep.instances;
    if (!out.holds) {
      rep.violations.push_back(detail::violation_from(
          "trial=" + std::to_string(trial) + " k=" + std::to_string(k) + " n=" + std::to_string(n), *out.witness,
          modulus));
    }
  }
  rep.elapsed_ms = clock.elapsed_ms();
  return rep;
}

/// (mp)! == (-1)^(pm+1) Gamma_p(pm+1) m! p^m, exactly.
inline CongruenceReport report_gamma_identity(std::uint64_t m, const PadicContext& ctx, const OptMutation& mut = {}) {
  detail::Stopwatch clock;
  CongruenceReport rep;
  rep.checker = "gamma-identity";
  rep.params = {{"p", static_cast<std::int64_t>(ctx.p())}, {"m", static_cast<std::int64_t>(m)}};
  CheckResult res = check_gamma_factorial_identity(m, ctx);
  if (mut && mut->hits(m)) {
    res.difference += mut->delta;
    res.observed = vp(res.difference, ctx);
    res.passed = res.observed.is_infinite();
  }
  rep.instances = 1;
  if (!res.passed) {
    rep.violations.push_back(Violation{"(mp)! - (-1)^(pm+1) Gamma_p(pm+1) m! p^m", {static_cast<std::uint32_t>(m)},
                                       res.difference, std::nullopt, res.observed, res.required});
  }
  rep.elapsed_ms = clock.elapsed_ms();
  return rep;
}

/// v_p(Gamma_p(pm+1) + 1) >= v_p(pm) - v_p(2). Reported without asserting
/// when p = 2, where the meaning of (pm/2) Z_p is not settled.
inline CongruenceReport report_gamma_congruence(std::uint64_t m, const PadicContext& ctx,
                                                const OptMutation& mut = {}) {
  detail::Stopwatch clock;
  CongruenceReport rep;
  rep.checker = "gamma-congruence";
  rep.params = {{"p", static_cast<std::int64_t>(ctx.p())}, {"m", static_cast<std::int64_t>(m)}};
  CheckResult res = check_gamma_congruence(m, ctx);
  if (mut && mut->hits(m)) {
    res.difference += mut->delta;
    res.observed = vp(res.difference, ctx);
    res.passed = res.observed >= res.required;
  }
  rep.instances = 1;
  if (!res.passed) {
    rep.violations.push_back(Violation{"Gamma_p(pm+1) + 1", {static_cast<std::uint32_t>(m)}, res.difference,
                                       as_integer(ctx.p() * m), res.observed, res.required});
  }
  if (ctx.p() == 2) {
    rep.asserted = false;
    rep.notes.push_back("unverified interpretation: (pm/2)Z_p read as v_2 >= v_2(pm) - 1");
  }
  rep.elapsed_ms = clock.elapsed_ms();
  return rep;
}

/// For m = 0..n: C(np, pm) == C(n, m) and pm C(n, m) == 0, both mod np Z_p.
inline CongruenceReport report_binomial_lift(std::uint64_t n, const PadicContext& ctx, const OptMutation& mut = {}) {
  detail::Stopwatch clock;
  CongruenceReport rep;
  rep.checker = "binomial-lift";
  rep.params = {{"p", static_cast<std::int64_t>(ctx.p())}, {"n", static_cast<std::int64_t>(n)}};
  const Integer modulus = as_integer(n) * ctx.p_integer();
  for (std::uint64_t m = 0; m <= n; ++m) {
    BinomialLiftResult res = check_binomial_lift(n, m, ctx);
    if (mut && mut->hits(m)) {
      res.lift.difference += mut->delta;
      res.lift.observed = vp(res.lift.difference, ctx);
      res.lift.passed = res.lift.observed >= res.lift.required;
    }
    rep.instances += 2;
    const std::vector<std::uint32_t> at{static_cast<std::uint32_t>(m)};
    if (!res.lift.passed) {
      rep.violations.push_back(Violation{"C(np,pm) - C(n,m), m=" + std::to_string(m), at, res.lift.difference,
                                         modulus, res.lift.observed, res.lift.required});
    }
    if (!res.multiple.passed) {
      rep.violations.push_back(Violation{"pm C(n,m), m=" + std::to_string(m), at, res.multiple.difference, modulus,
                                         res.multiple.observed, res.multiple.required});
    }
  }
  rep.elapsed_ms = clock.elapsed_ms();
  return rep;
}

/// For m_p = 0..n and m_1 = np - p m_p:
///   c_np(m_1, .., m_p, ..) == (-1)^(p m_p) C(n, m_p) Gamma_p(np+1)/Gamma_p(m_1+1)
/// exactly, and v_p(c_np) == v_p(C(n, m_p)).
inline CongruenceReport check_formula_gamma_ratio(std::uint64_t n, const PadicContext& ctx,
                                                  const OptMutation& mut = {}) {
  if (n < 1) throw std::invalid_argument("gamma-ratio: n must be >= 1");
  detail::Stopwatch clock;
  const std::uint64_t p = ctx.p();
  CongruenceReport rep;
  rep.checker = "gamma-ratio";
  rep.params = {{"p", static_cast<std::int64_t>(p)}, {"n", static_cast<std::int64_t>(n)}};
  for (std::uint64_t mp = 0; mp <= n; ++mp) {
    const std::uint64_t m1 = n * p - p * mp;
    const CycleType ct = CycleType::two_part(n * p, static_cast<std::uint32_t>(m1), p, static_cast<std::uint32_t>(mp));
    Integer c = coefficient(ct);
    if (mut && mut->hits(ct.multiplicities())) c += mut->delta;
    const Integer cnm = binomial(n, mp);
    Integer rhs = cnm * morita_gamma_ratio(n * p, m1, ctx);
    if (sign_power(p * mp) < 0) rhs = -rhs;

    const Integer diff = c - rhs;
    rep.instances += 2;
    if (!is_zero(diff)) {
      rep.violations.push_back(Violation{"exact: ct=" + ct.str(), ct.multiplicities(), diff, std::nullopt,
                                         vp(diff, ctx), Valuation::infinity()});
    }
    const Valuation vc = vp(c, ctx);
    const Valuation vb = vp(cnm, ctx);
    if (vc != vb) {
      rep.violations.push_back(Violation{"equal valuation: ct=" + ct.str(), ct.multiplicities(), c, std::nullopt,
                                         vc, vb});
    }
  }
  rep.elapsed_ms = clock.elapsed_ms();
  return rep;
}

/// Sharpness of the fixed-points-and-p-cycles congruence at m_p = 1 for
/// n in pZ: D = c_np - (-1)^p n must have v_p(D) = v_p(n) + 1 exactly when p
/// is not a Wilson prime, and v_p(D) >= v_p(n) + 2 when it is. Also checks
/// D = n (1 - q) with q = Gamma_p(np+1)/Gamma_p(np-p+1).
inline CongruenceReport check_wilson_sharpness(std::uint64_t n, const PadicContext& ctx,
                                               const OptMutation& mut = {}) {
  const std::uint64_t p = ctx.p();
  if (p == 2) throw std::invalid_argument("wilson-sharpness: p must be odd");
  if (n < 1 || n % p != 0) throw std::invalid_argument("wilson-sharpness: n must be a positive multiple of p");
  detail::Stopwatch clock;
  CongruenceReport rep;
  rep.checker = "wilson-sharpness";
  rep.params = {{"p", static_cast<std::int64_t>(p)}, {"n", static_cast<std::int64_t>(n)}};

  const CycleType ct = CycleType::two_part(n * p, static_cast<std::uint32_t>(n * p - p), p, 1);
  Integer c = coefficient(ct);
  if (mut && mut->hits(ct.multiplicities())) c += mut->delta;
  const Integer n_big = as_integer(n);
  const Integer d = c - Integer(sign_power(p)) * n_big;
  const Integer q = morita_gamma_ratio(n * p, n * p - p, ctx);

  rep.instances = 2;
  const Integer identity_gap = d - n_big * (1 - q);
  if (!is_zero(identity_gap)) {
    rep.violations.push_back(Violation{"D - n(1-q): ct=" + ct.str(), ct.multiplicities(), identity_gap, std::nullopt,
                                       vp(identity_gap, ctx), Valuation::infinity()});
  }

  const bool wilson = wilson_quotient_test(ctx);
  const Valuation vn = vp(n_big, ctx);
  const Valuation vd = vp(d, ctx);
  if (wilson) {
    const Valuation need = vn + Valuation(2);
    rep.notes.push_back("p is a Wilson prime: need v_p(D) >= v_p(n)+2, observed " + vd.str());
    if (vd < need) {
      rep.violations.push_back(Violation{"D = c_np - (-1)^p n: ct=" + ct.str(), ct.multiplicities(), d,
                                         n_big * ctx.p_integer() * ctx.p_integer(), vd, need});
    }
  } else {
    const Valuation exact = vn + Valuation(1);
    rep.notes.push_back("p is not a Wilson prime: need v_p(D) = v_p(n)+1 = " + exact.str() + " exactly, observed " +
                        vd.str());
    if (vd != exact) {
      rep.violations.push_back(
          Violation{"D = c_np - (-1)^p n: ct=" + ct.str(), ct.multiplicities(), d, std::nullopt, vd, exact});
    }
  }
  rep.elapsed_ms = clock.elapsed_ms();
  return rep;
}

}  // namespace cyclopadic
