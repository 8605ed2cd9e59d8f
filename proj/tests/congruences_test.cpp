#include "cyclopadic/congruences.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace cyclopadic;

namespace {

MultiPoly X(std::size_t i, std::uint32_t e = 1) { return MultiPoly::variable(i, e); }

// n! / prod i^m_i m_i!, straight from factorials (independent of coefficient()).
Integer class_size(std::size_t n, const std::vector<std::uint32_t>& m) {
  Integer denom = 1;
  for (std::size_t i = 1; i <= m.size(); ++i) {
    denom *= pow_ui(Integer(static_cast<unsigned long>(i)), m[i - 1]) * factorial(m[i - 1]);
  }
  return factorial(n) / denom;
}

Integer choose(std::uint64_t n, std::uint64_t k) { return factorial(n) / (factorial(k) * factorial(n - k)); }

Mutation at(std::vector<std::uint32_t> where, long delta = 1) { return Mutation{std::move(where), Integer(delta)}; }

}  // namespace

TEST(NStar, Values) {
  EXPECT_EQ(NStar(1).value(), 1u);
  EXPECT_EQ(NStar(2).value(), 1u);
  EXPECT_EQ(NStar(6).value(), 3u);
  EXPECT_EQ(NStar(9).value(), 9u);
  for (std::uint64_t n = 1; n <= 50; ++n) {
    const auto twice = 2 * NStar(n).value();
    EXPECT_TRUE(twice == n || twice == 2 * n);
  }
  EXPECT_THROW(NStar(0), std::invalid_argument);
}

TEST(CarlitzCoeff, HandEvaluatedTypesOfThree) {
  const PadicContext three(3);
  // (0,0,1): c = 2, first branch, expected (-1)^1 C(1,1) = -1 == 2 mod 3
  const CoeffVerdict a = carlitz_coeff_verdict(CycleType(3, {0, 0, 1}), 1, 2, three);
  EXPECT_TRUE(a.first_branch);
  EXPECT_EQ(a.expected, -1);
  EXPECT_TRUE(a.passed);
  // (1,1,0): c = 3, other branch
  const CoeffVerdict b = carlitz_coeff_verdict(CycleType(3, {1, 1, 0}), 1, 3, three);
  EXPECT_FALSE(b.first_branch);
  EXPECT_EQ(b.expected, 0);
  EXPECT_TRUE(b.passed);
  // identity class
  const CoeffVerdict c = carlitz_coeff_verdict(CycleType(3, {3, 0, 0}), 1, 1, three);
  EXPECT_EQ(c.expected, 1);
  EXPECT_TRUE(c.passed);

  const CongruenceReport rep = check_carlitz_coeff(1, three);
  EXPECT_EQ(rep.instances, 3u);
  EXPECT_TRUE(rep.passed());
}

TEST(CarlitzCoeff, SweepsPass) {
  for (std::uint64_t p : {2, 3, 5, 7}) {
    const PadicContext ctx(p);
    for (std::uint64_t n = 1; n * p <= 24; ++n) EXPECT_TRUE(check_carlitz_coeff(n, ctx).passed()) << p << " " << n;
  }
}

TEST(PropCoeff, WorkedExamples) {
  const PadicContext five(5);
  const CycleType ct = CycleType::two_part(25, 20, 5, 1);
  EXPECT_EQ(coefficient(ct), 1275120);
  const CoeffVerdict v = prop_coeff_verdict(ct, 5, coefficient(ct), five);
  EXPECT_EQ(v.expected, -5);
  EXPECT_EQ(v.modulus, 25);
  EXPECT_TRUE(v.passed);
  EXPECT_EQ((1275120 + 5) % 25, 0);

  const PadicContext three(3);
  const CongruenceReport n2 = check_prop_coeff(2, three);
  EXPECT_TRUE(n2.passed());
  const CongruenceReport n3 = check_prop_coeff(3, three);
  EXPECT_EQ(n3.instances, 30u);
  EXPECT_TRUE(n3.passed());
}

TEST(PropCoeff, AgreesWithPlainModularArithmetic) {
  // With n a power of p, n* p is a power of p and Z_p-congruence is plain
  // divisibility, so the whole sweep can be redone with % on integers.
  struct Case {
    std::uint64_t p, n;
  };
  for (const Case cs : {Case{3, 3}, Case{2, 4}, Case{5, 5}, Case{3, 9}}) {
    const std::uint64_t total = cs.n * cs.p;
    const Integer modulus = Integer(static_cast<unsigned long>(NStar(cs.n).value() * cs.p));
    std::uint64_t ok = 0;
    for (const auto& ct : cycle_types(total)) {
      const Integer c = class_size(total, ct.multiplicities());
      bool only_1_p = true;
      for (std::size_t i = 2; i <= total; ++i) only_1_p = only_1_p && (i == cs.p || ct.m(i) == 0);
      Integer expected = 0;
      if (only_1_p) {
        expected = choose(cs.n, ct.m(cs.p));
        if ((cs.p * ct.m(cs.p)) % 2 == 1) expected = -expected;
      }
      if ((c - expected) % modulus == 0) ++ok;
    }
    const CongruenceReport rep = check_prop_coeff(cs.n, PadicContext(cs.p));
    EXPECT_EQ(ok, rep.instances) << cs.p << " " << cs.n;
    EXPECT_TRUE(rep.passed());
  }
}

TEST(Ladder, PropPassImpliesCarlitzPass) {
  for (std::uint64_t p : {2, 3, 5}) {
    const PadicContext ctx(p);
    for (std::uint64_t n = 1; n * p <= 20; ++n) {
      // perturb every coefficient by p^k so some instances fail at n*p but not at p
      for (long shift : {0L, 1L, 2L}) {
        for_each_cycle_type(n * p, [&](const CycleType& ct) {
          const Integer c = coefficient(ct) + pow_ui(ctx.p_integer(), static_cast<unsigned long>(shift));
          const bool prop = prop_coeff_verdict(ct, n, c, ctx).passed;
          const bool carlitz = carlitz_coeff_verdict(ct, n, c, ctx).passed;
          if (prop) {
            ASSERT_TRUE(carlitz) << ct.str();
          }
        });
      }
    }
  }
}

TEST(Ladder, SignConventionsAgreeForOddPrimes) {
  for (std::uint64_t p : {3, 5, 7, 11}) {
    for (std::uint64_t mp = 0; mp <= 10; ++mp) EXPECT_EQ(sign_power(mp), sign_power(p * mp));
  }
}

TEST(CarlitzPoly, WorkedExamples) {
  const PadicContext three(3);
  EXPECT_EQ(carlitz_binomial(3), X(1, 3) - X(3));
  EXPECT_EQ(cycle_indicator(3) - carlitz_binomial(3), MultiPoly(Integer(3)) * X(1) * X(2) + MultiPoly(Integer(3)) * X(3));
  EXPECT_TRUE(check_carlitz_poly(0, 1, three).passed());

  const PadicContext two(2);
  // C_3 - (X1^2 - X2) X1 = 4 X1 X2 + 2 X3
  EXPECT_EQ(cycle_indicator(3) - carlitz_binomial(2) * X(1), MultiPoly(Integer(4)) * X(1) * X(2) + MultiPoly(Integer(2)) * X(3));
  EXPECT_TRUE(check_carlitz_poly(1, 1, two).passed());
  EXPECT_TRUE(check_carlitz_poly(0, 0, three).passed());
}

TEST(PropPoly, WorkedExamples) {
  const PadicContext three(3);
  EXPECT_TRUE(check_prop_poly(0, 2, three).passed());
  EXPECT_TRUE(check_prop_poly(1, 3, three).passed());
  // And directly, with plain divisibility since 9 is a power of 3
  const MultiPoly diff = cycle_indicator(10) - pow(X(1, 3) - X(3), 3) * X(1);
  for (const auto& [m, c] : diff) EXPECT_EQ(c % 9, 0) << m.str();
}

TEST(PropPoly, SweepsPass) {
  for (std::uint64_t p : {2, 3, 5}) {
    const PadicContext ctx(p);
    const CycleIndexTable table(24);
    for (std::uint64_t n = 1; n * p <= 20; ++n) {
      for (std::uint64_t r = 0; r < p && r + n * p <= 24; ++r) {
        EXPECT_TRUE(check_prop_poly(r, n, table, ctx).passed()) << p << " " << n << " " << r;
        EXPECT_TRUE(check_carlitz_poly(r, n, table, ctx).passed()) << p << " " << n << " " << r;
      }
    }
  }
}

TEST(PropPoly, NEqualsOneMatchesCarlitz) {
  for (std::uint64_t p : {2, 3, 5, 7}) {
    const PadicContext ctx(p);
    for (std::uint64_t r = 0; r < p; ++r) {
      for (long delta : {0L, 1L, static_cast<long>(p)}) {
        const OptMutation mut = delta ? OptMutation(at({static_cast<std::uint32_t>(r + p)}, delta)) : std::nullopt;
        EXPECT_EQ(check_prop_poly(r, 1, ctx, mut).passed(), check_carlitz_poly(r, 1, ctx, mut).passed())
            << p << " " << r << " " << delta;
      }
    }
  }
}

TEST(Corollary1, WorkedExamples) {
  const PadicContext three(3);
  EXPECT_EQ(coefficient(CycleType(4, {4})), 1);
  EXPECT_EQ(coefficient(CycleType(4, {1, 0, 1})), 8);
  EXPECT_EQ((8 - (-1)) % 3, 0);
  EXPECT_EQ(coefficient(CycleType(4, {0, 2})), 3);
  const CongruenceReport rep = check_corollary1(1, 1, three);
  EXPECT_EQ(rep.instances, 5u);
  EXPECT_TRUE(rep.passed());
}

TEST(Corollary1, RejectsROutOfRange) {
  const PadicContext three(3);
  EXPECT_THROW(check_corollary1(0, 1, three), std::invalid_argument);
  EXPECT_THROW(check_corollary1(3, 1, three), std::invalid_argument);
  EXPECT_THROW(check_remark1(3, 1, three), std::invalid_argument);
}

TEST(Corollary1, SweepsPass) {
  for (std::uint64_t p : {3, 5}) {
    const PadicContext ctx(p);
    for (std::uint64_t n = 1; n * p + p - 1 <= 22; ++n) {
      for (std::uint64_t r = 1; r < p; ++r) {
        const CongruenceReport rep = check_corollary1(r, n, ctx);
        EXPECT_TRUE(rep.passed()) << p << " " << n << " " << r;
      }
    }
  }
}

TEST(Remark1, WorkedExamples) {
  const PadicContext three(3);
  // c_7(4,0,1) = 7!/(4! 3) = 70, c_6(3,0,1) = 40, difference 30
  EXPECT_EQ(coefficient(CycleType::two_part(7, 4, 3, 1)), 70);
  EXPECT_EQ(class_size(6, {3, 0, 1}), 40);
  const CongruenceReport rep = check_remark1(1, 2, three);
  EXPECT_EQ(rep.instances, 3u);
  EXPECT_TRUE(rep.passed());

  const PadicContext five(5);
  // m_p = 2: c_12(2,0,0,0,2) = 12!/(2! 5^2 2!) vs c_10(0,...,2) = 10!/(5^2 2!)
  const Integer lhs = class_size(12, {2, 0, 0, 0, 2});
  const Integer rhs = class_size(10, {0, 0, 0, 0, 2});
  EXPECT_EQ((lhs - rhs) % 5, 0);
  EXPECT_TRUE(check_remark1(2, 2, five).passed());
}

TEST(JunodLemma, BinomialExample) {
  const PadicContext three(3);
  const MultiPoly a = X(1);
  const MultiPoly b = X(1) + MultiPoly(3);
  EXPECT_EQ(pow(b, 3) - pow(a, 3), MultiPoly(Integer(9)) * X(1, 2) + MultiPoly(Integer(27)) * X(1) + MultiPoly(27));
  EXPECT_TRUE(congruent_mod(pow(a, 3), pow(b, 3), Integer(9), three));
  EXPECT_FALSE(congruent_mod(pow(a, 3), pow(b, 3), Integer(27), three));
  EXPECT_TRUE(congruent_mod(pow(a, 5), pow(a, 5), Integer(3 * 5), three));
}

TEST(JunodLemma, RandomTrialsAndReproducibility) {
  for (std::uint64_t p : {3, 5}) {
    const PadicContext ctx(p);
    const CongruenceReport a = check_junod_lemma(200, kDefaultJunodSeed, ctx);
    const CongruenceReport b = check_junod_lemma(200, kDefaultJunodSeed, ctx);
    EXPECT_EQ(a.instances, 200u);
    EXPECT_TRUE(a.passed());
    EXPECT_EQ(a.seed, kDefaultJunodSeed);
    EXPECT_EQ(b.violations.size(), a.violations.size());
    // a mutation turns every trial into a deterministic failure list
    const CongruenceReport m1 = check_junod_lemma(50, 7, ctx, at({}, 1));
    const CongruenceReport m2 = check_junod_lemma(50, 7, ctx, at({}, 1));
    ASSERT_EQ(m1.violations.size(), 50u);
    for (std::size_t i = 0; i < m1.violations.size(); ++i) EXPECT_EQ(m1.violations[i].instance, m2.violations[i].instance);
  }
}

TEST(GammaReports, IdentityAndCongruence) {
  for (std::uint64_t p : {3, 5, 7}) {
    const PadicContext ctx(p);
    for (std::uint64_t m = 1; m <= 12; ++m) EXPECT_TRUE(report_gamma_identity(m, ctx).passed());
  }
  const CongruenceReport two = report_gamma_congruence(3, PadicContext(2));
  EXPECT_FALSE(two.asserted);
  EXPECT_FALSE(two.notes.empty());
  EXPECT_TRUE(report_gamma_congruence(3, PadicContext(3)).asserted);
}

TEST(GammaRatio, WorkedExample) {
  const PadicContext three(3);
  EXPECT_EQ(coefficient(CycleType::two_part(6, 3, 3, 1)), 40);
  EXPECT_EQ(morita_gamma_ratio(6, 3, three), -20);
  EXPECT_EQ(Integer(-1) * choose(2, 1) * Integer(-20), 40);
  const CongruenceReport rep = check_formula_gamma_ratio(2, three);
  EXPECT_EQ(rep.instances, 6u);
  EXPECT_TRUE(rep.passed());
  EXPECT_TRUE(check_formula_gamma_ratio(5, PadicContext(5)).passed());
  for (std::uint64_t n = 1; n <= 12; ++n) EXPECT_TRUE(check_formula_gamma_ratio(n, PadicContext(7)).passed());
}

TEST(BinomialLiftReport, Sweep) {
  for (std::uint64_t p : {2, 3, 5}) {
    for (std::uint64_t n = 1; n <= 40; ++n) {
      const CongruenceReport rep = report_binomial_lift(n, PadicContext(p));
      EXPECT_EQ(rep.instances, 2 * (n + 1));
      EXPECT_TRUE(rep.passed()) << p << " " << n;
    }
  }
}

TEST(WilsonSharpness, WorkedExamples) {
  const PadicContext three(3);
  // c_9(6,0,1) = 168, D = 168 + 3 = 171 = 9 * 19
  EXPECT_EQ(class_size(9, {6, 0, 1}), 168);
  const CongruenceReport r3 = check_wilson_sharpness(3, three);
  EXPECT_TRUE(r3.passed());
  ASSERT_FALSE(r3.notes.empty());
  EXPECT_NE(r3.notes[0].find("observed 2"), std::string::npos) << r3.notes[0];

  EXPECT_TRUE(check_wilson_sharpness(9, three).passed());
  EXPECT_TRUE(check_wilson_sharpness(5, PadicContext(5)).passed());
  EXPECT_TRUE(check_wilson_sharpness(13, PadicContext(13)).passed());
  EXPECT_TRUE(check_wilson_sharpness(7, PadicContext(7)).passed());
}

TEST(WilsonSharpness, DirectValuationForFive) {
  // D = c_25(20,0,0,0,1) - (-1)^5 5 = 1275120 + 5 = 1275125 = 5^3 * 10201
  const Integer d = class_size(25, {20, 0, 0, 0, 1}) + 5;
  EXPECT_EQ(d, 1275125);
  EXPECT_EQ(oracle::valuation_by_division(d, 5), 3u);
}

TEST(WilsonSharpness, Preconditions) {
  EXPECT_THROW(check_wilson_sharpness(4, PadicContext(2)), std::invalid_argument);
  EXPECT_THROW(check_wilson_sharpness(4, PadicContext(3)), std::invalid_argument);
}

TEST(Mutation, EveryCheckerCatchesAPerturbation) {
  const PadicContext three(3);
  auto caught = [](const CongruenceReport& rep, const std::vector<std::uint32_t>& where) {
    return !rep.passed() && Monomial(rep.violations.front().exponents) == Monomial(where);
  };
  EXPECT_TRUE(caught(check_carlitz_coeff(1, three, at({1, 1})), {1, 1}));
  EXPECT_TRUE(caught(check_prop_coeff(3, three, at({9})), {9}));
  EXPECT_TRUE(caught(check_carlitz_poly(0, 2, three, at({0, 0, 2})), {0, 0, 2}));
  EXPECT_TRUE(caught(check_prop_poly(1, 3, three, at({10})), {10}));
  EXPECT_TRUE(caught(check_corollary1(1, 1, three, at({1, 0, 1})), {1, 0, 1}));
  EXPECT_TRUE(caught(check_remark1(1, 2, three, at({4, 0, 1})), {4, 0, 1}));
  EXPECT_TRUE(caught(report_gamma_identity(4, three, at({4})), {4}));
  EXPECT_TRUE(caught(report_gamma_congruence(3, three, at({3})), {3}));
  EXPECT_TRUE(caught(report_binomial_lift(3, three, at({1})), {1}));
  EXPECT_TRUE(caught(check_formula_gamma_ratio(2, three, at({3, 0, 1})), {3, 0, 1}));
  EXPECT_TRUE(caught(check_wilson_sharpness(3, three, at({6, 0, 1})), {6, 0, 1}));
  EXPECT_FALSE(check_junod_lemma(5, 1, three, at({}, 1)).passed());

  // a delta divisible by the modulus is invisible, as it should be
  EXPECT_TRUE(check_prop_coeff(3, three, at({9}, 9)).passed());
}

TEST(Mutation, ViolationCarriesWitness) {
  const PadicContext three(3);
  const CongruenceReport rep = check_prop_coeff(3, three, at({9}));
  ASSERT_EQ(rep.violations.size(), 1u);
  const Violation& v = rep.violations[0];
  EXPECT_EQ(v.difference, 1);
  EXPECT_EQ(*v.modulus, 9);
  EXPECT_EQ(v.observed, Valuation(0));
  EXPECT_EQ(v.required, Valuation(2));
}
