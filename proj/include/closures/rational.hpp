// Exact arbitrary-precision integer and rational arithmetic, backed by GMP.
//
// Integer is mpz_class; Rational is mpq_class (always canonical: reduced,
// denominator > 0). This header adds the small amount of glue the rest of
// the library needs: parsing/formatting of "p/q" strings, checked narrowing,
// and a few convenience predicates.
#ifndef CLOSURES_RATIONAL_HPP
#define CLOSURES_RATIONAL_HPP

#include <gmpxx.h>

#include <limits>
#include <stdexcept>
#include <string>

namespace closures {

using Integer = mpz_class;
using Rational = mpq_class;

inline bool is_zero(const Integer& z) { return mpz_sgn(z.get_mpz_t()) == 0; }
inline bool is_zero(const Rational& q) { return mpq_sgn(q.get_mpq_t()) == 0; }
inline bool is_negative(const Integer& z) { return mpz_sgn(z.get_mpz_t()) < 0; }
inline bool is_positive(const Rational& q) { return mpq_sgn(q.get_mpq_t()) > 0; }

inline Integer pow_ui(const Integer& base, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

/// Checked narrowing for loop bounds; box enumerations never legitimately
/// exceed this.
inline long to_long(const Integer& z) {
  if (!z.fits_slong_p())
    throw std::overflow_error("integer too large for enumeration bound: " + z.get_str());
  return z.get_si();
}

/// Exact decimal-free rational string: "0", "3", "-1/2".
inline std::string to_string(const Rational& q) { return q.get_str(); }
inline std::string to_string(const Integer& z) { return z.get_str(); }

/// num/den in canonical form. The raw mpq_class(num, den) constructor does
/// not reduce; this one does.
inline Rational make_rational(const Integer& num, const Integer& den) {
  if (is_zero(den)) throw std::invalid_argument("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/// Parses "num" or "num/den". Rejects empty input, zero denominators and
/// anything GMP cannot read.
inline Rational rational_from_string(const std::string& text) {
  Rational q;
  if (text.empty() || mpq_set_str(q.get_mpq_t(), text.c_str(), 10) != 0)
    throw std::invalid_argument("malformed rational: '" + text + "'");
  if (mpz_sgn(mpq_denref(q.get_mpq_t())) == 0)
    throw std::invalid_argument("zero denominator: '" + text + "'");
  q.canonicalize();
  return q;
}

}  // namespace closures

#endif
