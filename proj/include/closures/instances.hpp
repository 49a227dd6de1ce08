// Deterministic random instance generation for the property suites. Draws
// go through explicit modulo reduction, so a fixed seed reproduces the same
// instances on any platform.
#ifndef CLOSURES_INSTANCES_HPP
#define CLOSURES_INSTANCES_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "closures/monomial_ideal.hpp"
#include "closures/polyfp.hpp"

namespace closures {

inline unsigned long draw(std::mt19937_64& rng, unsigned long bound) {
  return bound == 0 ? 0 : rng() % bound;
}

/// A proper nonzero minimal monomial ideal with nvars variables and
/// exponents in [0, max_exponent].
inline MonomialIdeal random_monomial_ideal(std::mt19937_64& rng, std::size_t nvars,
                                           unsigned long max_exponent, std::size_t max_generators) {
  for (;;) {
    std::size_t count = 1 + draw(rng, max_generators);
    std::vector<ExponentVector> gens;
    for (std::size_t i = 0; i < count; ++i) {
      std::vector<Integer> coords(nvars);
      for (std::size_t j = 0; j < nvars; ++j)
        coords[j] = static_cast<long>(draw(rng, max_exponent + 1));
      ExponentVector g(std::move(coords));
      if (!g.is_origin()) gens.push_back(std::move(g));
    }
    MonomialIdeal ideal(nvars, std::move(gens));
    if (!ideal.is_zero() && ideal.is_proper()) return ideal;
  }
}

/// Instance family for the axiom suites: mixed variable counts up to
/// max_vars.
inline std::vector<MonomialIdeal> random_instances(std::uint64_t seed, std::size_t count,
                                                   std::size_t max_vars,
                                                   unsigned long max_exponent,
                                                   std::size_t max_generators) {
  std::mt19937_64 rng(seed);
  std::vector<MonomialIdeal> out;
  out.reserve(count);
  while (out.size() < count) {
    std::size_t nvars = 1 + draw(rng, max_vars);
    out.push_back(random_monomial_ideal(rng, nvars, max_exponent, max_generators));
  }
  return out;
}

inline PolyFp random_polynomial(std::mt19937_64& rng, unsigned long p, std::size_t nvars,
                                unsigned long max_exponent, std::size_t max_terms) {
  PolyFp f(p, nvars);
  std::size_t terms = 1 + draw(rng, max_terms);
  for (std::size_t t = 0; t < terms; ++t) {
    std::vector<Integer> coords(nvars);
    for (std::size_t j = 0; j < nvars; ++j)
      coords[j] = static_cast<long>(draw(rng, max_exponent + 1));
    f.add_term(ExponentVector(std::move(coords)), draw(rng, p));
  }
  return f;
}

}  // namespace closures

#endif
