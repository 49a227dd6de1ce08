// Denominator-bounded certificate enumeration: an independent route to the
// Newton-polyhedron membership answers that never touches the simplex. A
// convex certificate with common denominator q corresponds to integers
// p_1..p_r >= 0 with sum q and sum p_i beta_i <= q alpha; the special test
// additionally requires the inequality to be strict somewhere. All
// arithmetic is plain machine integers, so inputs must be desk-scale.
#ifndef CLOSURES_ENUMERATION_HPP
#define CLOSURES_ENUMERATION_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "closures/monomial_ideal.hpp"

namespace closures {

struct EnumeratedCertificate {
  unsigned long denominator = 0;      // q
  std::vector<unsigned long> counts;  // p_i, sum = q
  bool strict = false;                // strict somewhere
};

namespace detail {

inline long small_coord(const Integer& z, long cap) {
  if (!z.fits_slong_p() || z.get_si() > cap)
    throw std::domain_error("enumeration oracle requires small exponents");
  return z.get_si();
}

inline std::optional<EnumeratedCertificate> enumerate_certificate(const MonomialIdeal& ideal,
                                                                  const ExponentVector& alpha,
                                                                  unsigned long q_max,
                                                                  bool need_strict) {
  if (ideal.is_zero() || ideal.is_unit()) throw std::invalid_argument("proper nonzero ideal required");
  if (alpha.size() != ideal.nvars()) throw std::invalid_argument("dimension mismatch");
  if (q_max == 0) throw std::invalid_argument("q_max must be positive");
  if (q_max > 1000000) throw std::invalid_argument("q_max too large for enumeration");

  const std::size_t n = ideal.nvars();
  const std::size_t r = ideal.generator_count();
  constexpr long kCap = 1L << 20;
  std::vector<std::vector<long>> beta(r, std::vector<long>(n));
  std::vector<long> a(n);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < n; ++j) beta[i][j] = small_coord(ideal.generators()[i][j], kCap);
  for (std::size_t j = 0; j < n; ++j) a[j] = small_coord(alpha[j], kCap);

  std::vector<long> target(n);
  std::vector<long> remaining(n);
  std::vector<unsigned long> counts(r, 0);

  for (unsigned long q = 1; q <= q_max; ++q) {
    for (std::size_t j = 0; j < n; ++j) target[j] = a[j] * static_cast<long>(q);
    remaining = target;

    // depth-first over multiplicities, largest first
    std::optional<EnumeratedCertificate> found;
    auto descend = [&](auto&& self, std::size_t i, unsigned long budget) -> bool {
      if (budget == 0) {
        bool strict = false;
        for (long rem : remaining)
          if (rem > 0) strict = true;
        if (need_strict && !strict) return false;
        EnumeratedCertificate cert;
        cert.denominator = q;
        cert.counts = counts;
        cert.strict = strict;
        found = std::move(cert);
        return true;
      }
      if (i == r) return false;
      unsigned long cap = budget;
      for (std::size_t j = 0; j < n && cap > 0; ++j)
        if (beta[i][j] > 0) {
          unsigned long fit = static_cast<unsigned long>(remaining[j] / beta[i][j]);
          if (fit < cap) cap = fit;
        }
      for (unsigned long p = cap + 1; p-- > 0;) {
        for (std::size_t j = 0; j < n; ++j) remaining[j] -= static_cast<long>(p) * beta[i][j];
        counts[i] = p;
        bool ok = self(self, i + 1, budget - p);
        for (std::size_t j = 0; j < n; ++j) remaining[j] += static_cast<long>(p) * beta[i][j];
        if (ok) return true;
        counts[i] = 0;
      }
      return false;
    };
    if (descend(descend, 0, q)) return found;
  }
  return std::nullopt;
}

}  // namespace detail

/// Certificate search for plain integral-closure membership, denominators
/// up to q_max. Absence means no certificate that small exists, which for
/// desk-scale instances (vertex denominators below q_max) is a true NotIn.
inline std::optional<EnumeratedCertificate> enumerate_integral(const MonomialIdeal& ideal,
                                                               const ExponentVector& alpha,
                                                               unsigned long q_max = 24) {
  return detail::enumerate_certificate(ideal, alpha, q_max, false);
}

/// Certificate search for special-part membership (strict domination).
inline std::optional<EnumeratedCertificate> enumerate_special(const MonomialIdeal& ideal,
                                                              const ExponentVector& alpha,
                                                              unsigned long q_max = 24) {
  return detail::enumerate_certificate(ideal, alpha, q_max, true);
}

}  // namespace closures

#endif
