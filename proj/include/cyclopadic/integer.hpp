#pragma once

// Exact integer and rational scalars. Everything in the library is exact;
// these are thin aliases over GMP so the rest of the code can stay generic.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cyclopadic {

using Integer = mpz_class;
using Rational = mpq_class;

/// Raised when an invariant that the mathematics guarantees is observed to
/// fail (for instance a cycle-index coefficient that is not an integer).
/// Seeing one always means a bug in this library.
class internal_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline std::string to_decimal(const Integer& x) { return x.get_str(10); }

inline std::string to_decimal(const Rational& x) { return x.get_str(10); }

inline Integer integer_from_decimal(const std::string& s) {
  Integer out;
  if (s.empty() || out.set_str(s, 10) != 0) {
    throw std::invalid_argument("not a decimal integer: '" + s + "'");
  }
  return out;
}

/// Exact conversion of a rational that must be integral.
inline Integer require_integral(const Rational& q, const char* what) {
  if (q.get_den() != 1) {
    throw internal_error(std::string(what) + ": non-integral value " + q.get_str());
  }
  return Integer(q.get_num());
}

inline bool is_zero(const Integer& x) { return sgn(x) == 0; }
inline bool is_zero(const Rational& x) { return sgn(x) == 0; }

inline Integer pow_ui(const Integer& base, unsigned long e) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
  return out;
}

/// (-1)^e
inline int sign_power(std::uint64_t e) { return (e % 2 == 0) ? 1 : -1; }

}  // namespace cyclopadic
