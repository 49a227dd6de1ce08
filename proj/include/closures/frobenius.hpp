// Frobenius closure and its special part in quotient rings of prime
// characteristic: bounded membership searches over q = p^e, F-independence,
// analytic F-independence at a fixed q, the closure = ideal + special-part
// decomposition, and F-spread via minimal generator counts of bracket
// powers. Searches over e are bounded and honest: a negative answer only
// ever says "not found up to the bound".
#ifndef CLOSURES_FROBENIUS_HPP
#define CLOSURES_FROBENIUS_HPP

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "closures/groebner.hpp"
#include "closures/polyfp.hpp"

namespace closures {

enum class WitnessKind { Closure, SpecialPart };

/// A successful membership witness: z^(p^e) lands in the bracket-power
/// target ideal (I^[q] for the closure, m I^[q] for the special part).
struct FrobeniusWitness {
  unsigned long e = 0;
  WitnessKind kind = WitnessKind::Closure;
};

/// Three-valued honesty for the unbounded existential: In carries a witness,
/// NotInUpTo(e_max) asserts only that the search failed up to the bound.
struct BoundedVerdict {
  std::optional<FrobeniusWitness> witness;
  unsigned long e_max = 0;
  bool in() const { return witness.has_value(); }
};

namespace detail {

inline void check_element(const PolyFp& z, const QuotientRing& ring) {
  if (z.characteristic() != ring.characteristic() || z.nvars() != ring.nvars())
    throw std::invalid_argument("element in wrong ring");
}

inline std::vector<PolyFp> nonzero_generators(const std::vector<PolyFp>& gens,
                                              const QuotientRing& ring) {
  std::vector<PolyFp> out;
  for (const auto& g : gens) {
    check_element(g, ring);
    if (!ring.reduce(g).is_zero()) out.push_back(g);
  }
  return out;
}

inline void require_proper(const std::vector<PolyFp>& gens, const QuotientRing& ring) {
  std::vector<PolyFp> all = gens;
  for (const auto& r : ring.relations().basis) all.push_back(r);
  if (all.empty()) return;  // zero ideal in a polynomial ring
  for (const auto& g : buchberger(all).basis)
    if (g.is_constant() && !g.is_zero()) throw std::invalid_argument("unit ideal");
}

inline std::vector<PolyFp> bracket_generators(const std::vector<PolyFp>& gens, const Integer& q) {
  std::vector<PolyFp> out;
  out.reserve(gens.size());
  for (const auto& g : gens) out.push_back(frobenius_element_power(g, q));
  return out;
}

inline std::vector<PolyFp> maximal_ideal_times(const std::vector<PolyFp>& gens,
                                               const QuotientRing& ring) {
  std::vector<PolyFp> out;
  out.reserve(gens.size() * ring.nvars());
  for (const auto& g : gens)
    for (std::size_t j = 0; j < ring.nvars(); ++j)
      out.push_back(g.times_term(unit_vector(ring.nvars(), j), 1));
  return out;
}

}  // namespace detail

/// Smallest e <= e_max with z^(p^e) in I^[p^e] within R.
inline BoundedVerdict frobenius_member(const PolyFp& z, const std::vector<PolyFp>& ideal,
                                       const QuotientRing& ring, unsigned long e_max = 5) {
  detail::check_element(z, ring);
  auto gens = detail::nonzero_generators(ideal, ring);
  detail::require_proper(gens, ring);
  BoundedVerdict verdict;
  verdict.e_max = e_max;
  for (unsigned long e = 0; e <= e_max; ++e) {
    Integer q = integer_power(ring.characteristic(), e);
    PolyFp zq = frobenius_element_power(z, q);
    if (ideal_membership(zq, detail::bracket_generators(gens, q), ring)) {
      verdict.witness = FrobeniusWitness{e, WitnessKind::Closure};
      return verdict;
    }
  }
  return verdict;
}

/// Smallest e <= e_max with z^(p^e) in m I^[p^e] within R, m the irrelevant
/// maximal ideal (x_1..x_n).
inline BoundedVerdict special_frobenius_member(const PolyFp& z, const std::vector<PolyFp>& ideal,
                                               const QuotientRing& ring, unsigned long e_max = 5) {
  detail::check_element(z, ring);
  auto gens = detail::nonzero_generators(ideal, ring);
  detail::require_proper(gens, ring);
  BoundedVerdict verdict;
  verdict.e_max = e_max;
  for (unsigned long e = 0; e <= e_max; ++e) {
    Integer q = integer_power(ring.characteristic(), e);
    PolyFp zq = frobenius_element_power(z, q);
    auto target = detail::maximal_ideal_times(detail::bracket_generators(gens, q), ring);
    if (ideal_membership(zq, target, ring)) {
      verdict.witness = FrobeniusWitness{e, WitnessKind::SpecialPart};
      return verdict;
    }
  }
  return verdict;
}

/// No generator lies in the Frobenius closure of the others, tested for
/// every e <= e_max. True means independent up to the bound.
inline bool f_independent(const std::vector<PolyFp>& gens, const QuotientRing& ring,
                          unsigned long e_max = 5) {
  if (gens.empty()) throw std::invalid_argument("empty generator list");
  for (const auto& g : gens) {
    detail::check_element(g, ring);
    if (ring.reduce(g).is_zero()) throw std::invalid_argument("zero generator");
  }
  detail::require_proper(gens, ring);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    std::vector<PolyFp> others;
    for (std::size_t j = 0; j < gens.size(); ++j)
      if (j != i) others.push_back(gens[j]);
    for (unsigned long e = 0; e <= e_max; ++e) {
      Integer q = integer_power(ring.characteristic(), e);
      PolyFp giq = frobenius_element_power(gens[i], q);
      if (ideal_membership(giq, detail::bracket_generators(others, q), ring)) return false;
    }
  }
  return true;
}

/// The images of g_i^q are linearly independent in L^[q] / m L^[q]:
/// equivalently each g_i^q avoids (other brackets) + m (all brackets).
/// Exact at the given q; requires the graded setting.
inline bool analytically_f_independent_at_q(const std::vector<PolyFp>& gens,
                                            const QuotientRing& ring, const Integer& q) {
  if (gens.empty()) throw std::invalid_argument("empty generator list");
  for (const auto& g : gens) {
    detail::check_element(g, ring);
    if (!g.is_homogeneous())
      throw std::domain_error("analytic F-independence requires homogeneous generators");
  }
  if (!ring.relations_homogeneous())
    throw std::domain_error("analytic F-independence requires a graded quotient ring");
  auto brackets = detail::bracket_generators(gens, q);
  auto m_brackets = detail::maximal_ideal_times(brackets, ring);
  for (std::size_t i = 0; i < brackets.size(); ++i) {
    std::vector<PolyFp> target = m_brackets;
    for (std::size_t j = 0; j < brackets.size(); ++j)
      if (j != i) target.push_back(brackets[j]);
    if (ideal_membership(brackets[i], target, ring)) return false;
  }
  return true;
}

/// The closure = ideal + special part split: z with a closure witness at e
/// decomposes as z = i + s with i in the ideal and s carrying a special
/// witness at the same e. Constructed from an explicit combination
/// z^q = sum a_i g_i^q by peeling off q-th roots of the unit coefficients'
/// constant terms (Frobenius fixes F_p pointwise, so the root of c is c).
struct SpecialDecomposition {
  PolyFp ideal_part;
  PolyFp special_part;
  unsigned long e = 0;
};

inline SpecialDecomposition special_decompose(const PolyFp& z, const std::vector<PolyFp>& ideal,
                                              const QuotientRing& ring, unsigned long e_max = 5) {
  detail::check_element(z, ring);
  auto gens = detail::nonzero_generators(ideal, ring);
  detail::require_proper(gens, ring);
  BoundedVerdict member = frobenius_member(z, gens, ring, e_max);
  if (!member.in())
    throw std::runtime_error("no Frobenius closure witness up to the bound; cannot decompose");
  const unsigned long e = member.witness->e;
  const Integer q = integer_power(ring.characteristic(), e);

  std::vector<PolyFp> inputs = detail::bracket_generators(gens, q);
  const std::size_t bracket_count = inputs.size();
  for (const auto& r : ring.relations().basis) inputs.push_back(r);

  auto extended = buchberger_extended(inputs);
  std::vector<PolyFp> quotients;
  PolyFp remainder = normal_form(frobenius_element_power(z, q), extended.basis, &quotients);
  if (!remainder.is_zero()) throw std::logic_error("membership replay failed in decomposition");

  // a_i = sum_k quotient_k * cofactor_{k,i}, for the bracket inputs only
  std::vector<PolyFp> coeffs(bracket_count, ring.zero());
  for (std::size_t k = 0; k < extended.basis.basis.size(); ++k) {
    if (quotients[k].is_zero()) continue;
    for (std::size_t i = 0; i < bracket_count; ++i)
      coeffs[i] = coeffs[i] + quotients[k] * extended.cofactors[k][i];
  }

  PolyFp ideal_part = ring.zero();
  for (std::size_t i = 0; i < bracket_count; ++i) {
    unsigned long c = coeffs[i].constant_term();
    if (c == 0) continue;  // non-unit coefficient feeds the special part
    ideal_part = ideal_part + gens[i].scaled(c);
  }

  SpecialDecomposition out{ring.reduce(ideal_part), ring.reduce(z - ideal_part), e};
  BoundedVerdict replay = special_frobenius_member(out.special_part, gens, ring, e);
  if (!out.special_part.is_zero() && !replay.in())
    throw std::logic_error("special-part replay failed in decomposition");
  return out;
}

/// Minimal generator counts of the bracket powers I^[q] for e = 0..e_max,
/// computed by greedy elimination under graded Nakayama: a bracket generator
/// lying in (the others) + m I^[q] is redundant. Stable when the last three
/// values agree.
struct SpreadTable {
  std::vector<std::size_t> mu;  // indexed by e
  bool stable = false;
};

inline SpreadTable f_spread(const std::vector<PolyFp>& ideal, const QuotientRing& ring,
                            unsigned long e_max = 5) {
  auto gens = detail::nonzero_generators(ideal, ring);
  if (gens.empty()) throw std::invalid_argument("zero ideal has no spread table");
  detail::require_proper(gens, ring);
  for (const auto& g : gens)
    if (!g.is_homogeneous()) throw std::domain_error("F-spread requires homogeneous generators");
  if (!ring.relations_homogeneous())
    throw std::domain_error("F-spread requires a graded quotient ring");

  SpreadTable table;
  for (unsigned long e = 0; e <= e_max; ++e) {
    Integer q = integer_power(ring.characteristic(), e);
    auto brackets = detail::bracket_generators(gens, q);
    auto m_full = detail::maximal_ideal_times(brackets, ring);
    std::vector<PolyFp> survivors = brackets;
    for (bool dropped = true; dropped;) {
      dropped = false;
      for (std::size_t i = 0; i < survivors.size(); ++i) {
        std::vector<PolyFp> target = m_full;
        for (std::size_t j = 0; j < survivors.size(); ++j)
          if (j != i) target.push_back(survivors[j]);
        if (ideal_membership(survivors[i], target, ring)) {
          survivors.erase(survivors.begin() + static_cast<long>(i));
          dropped = true;
          break;
        }
      }
    }
    table.mu.push_back(survivors.size());
  }
  const auto& mu = table.mu;
  table.stable = mu.size() >= 3 && mu[mu.size() - 1] == mu[mu.size() - 2] &&
                 mu[mu.size() - 2] == mu[mu.size() - 3];
  return table;
}

}  // namespace closures

#endif
