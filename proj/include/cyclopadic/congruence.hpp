#pragma once

// Coefficientwise congruence a == b (mod m Z_p[X...]) for integer
// polynomials, and evaluation of a multivariate polynomial at univariate
// images.

#include "cyclopadic/integer.hpp"
#include "cyclopadic/multipoly.hpp"
#include "cyclopadic/padic.hpp"
#include "cyclopadic/unipoly.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cyclopadic {

/// The first coefficient of a - b that is not in m Z_p.
struct CongruenceWitness {
  std::vector<std::uint32_t> exponents;  // canonical exponent vector, or {k} for X^k
  Integer difference;
  Valuation observed;
  Valuation required;
};

struct CongruenceOutcome {
  bool holds = true;
  std::size_t compared = 0;  // coefficients inspected
  std::optional<CongruenceWitness> witness;

  explicit operator bool() const { return holds; }
};

/// Checks every coefficient of a - b, walking terms in descending grevlex
/// order. On failure the witness names the first offending term.
inline CongruenceOutcome congruent_mod(const MultiPoly& a, const MultiPoly& b, const Integer& m,
                                       const PadicContext& ctx) {
  if (is_zero(m)) throw std::invalid_argument("congruent_mod: modulus must be nonzero");
  const Valuation need = vp(m, ctx);
  CongruenceOutcome out;
  auto ia = a.begin();
  auto ib = b.begin();
  const GrevlexDescending before;
  while (ia != a.end() || ib != b.end()) {
    const Monomial* at = nullptr;
    Integer diff;
    if (ib == b.end() || (ia != a.end() && before(ia->first, ib->first))) {
      at = &ia->first;
      diff = ia->second;
      ++ia;
    } else if (ia == a.end() || before(ib->first, ia->first)) {
      at = &ib->first;
      diff = -ib->second;
      ++ib;
    } else {
      at = &ia->first;
      diff = ia->second - ib->second;
      ++ia;
      ++ib;
    }
    ++out.compared;
    const Valuation got = vp(diff, ctx);
    if (got < need) {
      out.holds = false;
      out.witness = CongruenceWitness{at->exponents(), diff, got, need};
      return out;
    }
  }
  return out;
}

/// Same contract for univariate polynomials, walking degrees upward.
inline CongruenceOutcome congruent_mod(const UniPoly& a, const UniPoly& b, const Integer& m,
                                       const PadicContext& ctx) {
  if (is_zero(m)) throw std::invalid_argument("congruent_mod: modulus must be nonzero");
  const Valuation need = vp(m, ctx);
  CongruenceOutcome out;
  const std::size_t len = std::max(a.coeffs().size(), b.coeffs().size());
  for (std::size_t k = 0; k < len; ++k) {
    const Integer diff = a.coefficient(k) - b.coefficient(k);
    ++out.compared;
    const Valuation got = vp(diff, ctx);
    if (got < need) {
      out.holds = false;
      out.witness = CongruenceWitness{{static_cast<std::uint32_t>(k)}, diff, got, need};
      return out;
    }
  }
  return out;
}

/// Evaluates `poly` at X_i := images[i]. Every variable that occurs in `poly`
/// needs an image.
template <class Coeff>
BasicUniPoly<Coeff> substitute_univariate(const BasicMultiPoly<Coeff>& poly,
                                          const std::map<std::size_t, BasicUniPoly<Coeff>>& images) {
  // powers[var][e] = images[var]^e, grown on demand
  std::map<std::size_t, std::vector<BasicUniPoly<Coeff>>> powers;
  auto power_of = [&](std::size_t var, std::uint32_t e) -> const BasicUniPoly<Coeff>& {
    auto& table = powers[var];
    if (table.empty()) {
      auto it = images.find(var);
      if (it == images.end()) {
        throw std::invalid_argument("substitute_univariate: no image for X" + std::to_string(var));
      }
      table.push_back(BasicUniPoly<Coeff>(1));
      table.push_back(it->second);
    }
    while (table.size() <= e) table.push_back(table.back() * table[1]);
    return table[e];
  };

  BasicUniPoly<Coeff> out;
  for (const auto& [m, c] : poly) {
    BasicUniPoly<Coeff> term(c);
    for (std::size_t var = 1; var <= m.nvars(); ++var) {
      const auto e = m.exponent(var);
      if (e != 0) term *= power_of(var, e);
    }
    out += term;
  }
  return out;
}

}  // namespace cyclopadic
