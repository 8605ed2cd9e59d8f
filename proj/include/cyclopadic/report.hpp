#pragma once

#include "cyclopadic/congruence.hpp"
#include "cyclopadic/integer.hpp"
#include "cyclopadic/multipoly.hpp"
#include "cyclopadic/padic.hpp"

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace cyclopadic {

/// One failed instance. `exponents` is the cycle type, exponent vector or
/// index that identifies the instance; `modulus` is empty for checks that
/// assert an exact identity (or an exact valuation).
struct Violation {
  std::string instance;
  std::vector<std::uint32_t> exponents;
  Integer difference;
  std::optional<Integer> modulus;
  Valuation observed;
  Valuation required;
};

struct CongruenceReport {
  std::string checker;
  std::vector<std::pair<std::string, std::int64_t>> params;
  std::uint64_t instances = 0;
  std::vector<Violation> violations;
  std::optional<std::uint64_t> seed;
  std::int64_t elapsed_ms = 0;
  // False for sweeps whose outcome is reported but not asserted (p = 2).
  bool asserted = true;
  std::vector<std::string> notes;

  bool passed() const { return violations.empty(); }
};

/// Test hook: adds `delta` to the checker's target quantity at `at` (a cycle
/// type, exponent vector, or single index). Used to prove that the checkers
/// actually catch a wrong value.
struct Mutation {
  std::vector<std::uint32_t> at;
  Integer delta = 1;

  bool hits(const std::vector<std::uint32_t>& where) const { return Monomial(at) == Monomial(where); }
  bool hits(std::uint64_t index) const { return hits(std::vector<std::uint32_t>{static_cast<std::uint32_t>(index)}); }
};

using OptMutation = std::optional<Mutation>;

namespace detail {

class Stopwatch {
 public:
  std::int64_t elapsed_ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

inline Violation violation_from(const std::string& instance, const CongruenceWitness& w, const Integer& modulus) {
  return Violation{instance, w.exponents, w.difference, modulus, w.observed, w.required};
}

inline void mutate(MultiPoly& target, const OptMutation& mut) {
  if (mut) target.add_term(Monomial(mut->at), mut->delta);
}

inline void mutate(UniPoly& target, const OptMutation& mut) {
  if (mut && mut->at.size() <= 1) {
    target += UniPoly::monomial(mut->at.empty() ? 0 : mut->at[0], mut->delta);
  }
}

}  // namespace detail

}  // namespace cyclopadic
