// Buchberger's algorithm, reduced Groebner bases, multivariate division and
// ideal membership in quotient rings over prime fields. An extended variant
// tracks cofactors so that a membership can be replayed as an explicit
// combination of the input generators.
#ifndef CLOSURES_GROEBNER_HPP
#define CLOSURES_GROEBNER_HPP

#include <algorithm>
#include <cstddef>
#include <deque>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "closures/polyfp.hpp"

namespace closures {

struct GroebnerBasis {
  MonomialOrder order = MonomialOrder::GrevLex;
  std::vector<PolyFp> basis;  // reduced: monic, mutually irreducible
};

namespace detail {

inline ExponentVector exponent_lcm(const ExponentVector& a, const ExponentVector& b) {
  std::vector<Integer> e(a.size());
  for (std::size_t j = 0; j < a.size(); ++j) e[j] = std::max(a[j], b[j]);
  return ExponentVector(std::move(e));
}

inline ExponentVector exponent_quotient(const ExponentVector& a, const ExponentVector& b) {
  std::vector<Integer> e(a.size());
  for (std::size_t j = 0; j < a.size(); ++j) e[j] = a[j] - b[j];
  return ExponentVector(std::move(e));
}

}  // namespace detail

/// Complete remainder of f under multivariate division by G; when
/// `quotients` is supplied it receives one quotient per divisor so that
/// f = sum quotients[i] * G[i] + remainder.
inline PolyFp normal_form(const PolyFp& f, const std::vector<PolyFp>& divisors,
                          std::vector<PolyFp>* quotients = nullptr) {
  for (const auto& g : divisors) f.check_ring(g);
  if (quotients) quotients->assign(divisors.size(), PolyFp::zero(f.characteristic(), f.nvars()));

  PolyFp work = f;
  PolyFp remainder(f.characteristic(), f.nvars());
  while (!work.is_zero()) {
    const ExponentVector lead = work.leading_monomial();
    const unsigned long lead_coeff = work.leading_coefficient();
    bool reduced = false;
    for (std::size_t i = 0; i < divisors.size(); ++i) {
      const PolyFp& g = divisors[i];
      if (g.is_zero() || !g.leading_monomial().divides(lead)) continue;
      ExponentVector shift = detail::exponent_quotient(lead, g.leading_monomial());
      unsigned long factor = work.mulmod(lead_coeff, g.invmod(g.leading_coefficient()));
      work = work - g.times_term(shift, factor);
      if (quotients) {
        PolyFp term = PolyFp::monomial(f.characteristic(), std::move(shift), factor);
        (*quotients)[i] = (*quotients)[i] + term;
      }
      reduced = true;
      break;
    }
    if (!reduced) {
      remainder.add_term(lead, lead_coeff);
      work = work - PolyFp::monomial(f.characteristic(), lead, lead_coeff);
    }
  }
  return remainder;
}

namespace detail {

struct TrackedPoly {
  PolyFp poly;
  std::vector<PolyFp> cofactors;  // poly = sum cofactors[i] * input[i]
};

// Full reduction of a tracked polynomial against tracked divisors.
inline TrackedPoly reduce_tracked(TrackedPoly f, const std::vector<TrackedPoly>& divisors) {
  std::vector<PolyFp> bare;
  bare.reserve(divisors.size());
  for (const auto& d : divisors) bare.push_back(d.poly);
  std::vector<PolyFp> quotients;
  PolyFp rem = normal_form(f.poly, bare, &quotients);
  TrackedPoly out{std::move(rem), std::move(f.cofactors)};
  for (std::size_t i = 0; i < divisors.size(); ++i) {
    if (quotients[i].is_zero()) continue;
    for (std::size_t k = 0; k < out.cofactors.size(); ++k)
      out.cofactors[k] = out.cofactors[k] - quotients[i] * divisors[i].cofactors[k];
  }
  return out;
}

inline std::vector<TrackedPoly> buchberger_tracked(const std::vector<PolyFp>& input) {
  if (input.empty()) throw std::invalid_argument("empty generator list");
  const unsigned long p = input[0].characteristic();
  const std::size_t nvars = input[0].nvars();
  for (const auto& f : input) input[0].check_ring(f);

  std::vector<TrackedPoly> basis;
  for (std::size_t i = 0; i < input.size(); ++i) {
    if (input[i].is_zero()) continue;
    TrackedPoly t{input[i], std::vector<PolyFp>(input.size(), PolyFp::zero(p, nvars))};
    t.cofactors[i] = PolyFp::constant(p, nvars, 1);
    basis.push_back(std::move(t));
  }

  std::deque<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j) pairs.emplace_back(i, j);

  while (!pairs.empty()) {
    auto [i, j] = pairs.front();
    pairs.pop_front();
    const PolyFp& f = basis[i].poly;
    const PolyFp& g = basis[j].poly;
    const ExponentVector lcm = exponent_lcm(f.leading_monomial(), g.leading_monomial());
    // Buchberger's first criterion: coprime leading terms
    if (lcm == f.leading_monomial() + g.leading_monomial()) continue;

    TrackedPoly s{PolyFp::zero(p, nvars),
                  std::vector<PolyFp>(basis[i].cofactors.size(), PolyFp::zero(p, nvars))};
    ExponentVector shift_f = exponent_quotient(lcm, f.leading_monomial());
    ExponentVector shift_g = exponent_quotient(lcm, g.leading_monomial());
    unsigned long inv_f = f.invmod(f.leading_coefficient());
    unsigned long inv_g = g.invmod(g.leading_coefficient());
    s.poly = f.times_term(shift_f, inv_f) - g.times_term(shift_g, inv_g);
    for (std::size_t k = 0; k < s.cofactors.size(); ++k)
      s.cofactors[k] = basis[i].cofactors[k].times_term(shift_f, inv_f) -
                       basis[j].cofactors[k].times_term(shift_g, inv_g);

    TrackedPoly reduced = reduce_tracked(std::move(s), basis);
    if (reduced.poly.is_zero()) continue;
    basis.push_back(std::move(reduced));
    for (std::size_t k = 0; k + 1 < basis.size(); ++k) pairs.emplace_back(k, basis.size() - 1);
  }

  // minimal basis: drop elements whose leading term another divides
  std::vector<TrackedPoly> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j) continue;
      const auto& li = basis[i].poly.leading_monomial();
      const auto& lj = basis[j].poly.leading_monomial();
      if (lj.divides(li) && !(li == lj)) redundant = true;
      if (li == lj && j < i) redundant = true;
    }
    if (!redundant) minimal.push_back(basis[i]);
  }

  // monic
  for (auto& t : minimal) {
    unsigned long inv = t.poly.invmod(t.poly.leading_coefficient());
    t.poly = t.poly.scaled(inv);
    for (auto& c : t.cofactors) c = c.scaled(inv);
  }

  // tail interreduction to the reduced basis
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
      std::vector<TrackedPoly> rest;
      rest.reserve(minimal.size() - 1);
      for (std::size_t j = 0; j < minimal.size(); ++j)
        if (j != i) rest.push_back(minimal[j]);
      TrackedPoly reduced = reduce_tracked(minimal[i], rest);
      if (!(reduced.poly == minimal[i].poly)) {
        minimal[i] = std::move(reduced);
        changed = true;
      }
    }
  }

  std::sort(minimal.begin(), minimal.end(), [](const TrackedPoly& a, const TrackedPoly& b) {
    return b.poly.leading_monomial() < a.poly.leading_monomial();
  });
  return minimal;
}

}  // namespace detail

/// Reduced Groebner basis of the ideal generated by `gens`.
inline GroebnerBasis buchberger(const std::vector<PolyFp>& gens) {
  GroebnerBasis out;
  for (auto& t : detail::buchberger_tracked(gens)) out.basis.push_back(std::move(t.poly));
  return out;
}

struct ExtendedGroebnerBasis {
  GroebnerBasis basis;
  // cofactors[k][i]: basis element k equals sum_i cofactors[k][i] * gens[i]
  std::vector<std::vector<PolyFp>> cofactors;
};

inline ExtendedGroebnerBasis buchberger_extended(const std::vector<PolyFp>& gens) {
  ExtendedGroebnerBasis out;
  for (auto& t : detail::buchberger_tracked(gens)) {
    out.basis.basis.push_back(std::move(t.poly));
    out.cofactors.push_back(std::move(t.cofactors));
  }
  return out;
}

inline PolyFp normal_form(const PolyFp& f, const GroebnerBasis& gb,
                          std::vector<PolyFp>* quotients = nullptr) {
  return normal_form(f, gb.basis, quotients);
}

/// Ambient ring R = F_p[x_1..x_n] / J, with J presented by a reduced
/// Groebner basis. Relations must lie in the irrelevant maximal ideal
/// (zero constant terms), so that units are decided by constant terms.
class QuotientRing {
 public:
  QuotientRing(unsigned long p, std::vector<std::string> variables,
               const std::vector<PolyFp>& defining = {})
      : p_(p), vars_(std::move(variables)) {
    if (!is_prime(p_)) throw std::invalid_argument("characteristic must be prime");
    if (vars_.empty()) throw std::invalid_argument("at least one variable required");
    std::vector<PolyFp> nonzero;
    for (const auto& f : defining) {
      if (f.characteristic() != p_ || f.nvars() != vars_.size())
        throw std::invalid_argument("relation in wrong ring");
      if (f.is_zero()) continue;
      if (f.constant_term() != 0)
        throw std::invalid_argument("defining relations must lie in the maximal ideal");
      nonzero.push_back(f);
    }
    if (!nonzero.empty()) {
      relations_ = buchberger(nonzero);
      for (const auto& g : relations_.basis)
        if (g.is_constant())
          throw std::invalid_argument("defining ideal is the unit ideal");
    }
  }

  unsigned long characteristic() const { return p_; }
  std::size_t nvars() const { return vars_.size(); }
  const std::vector<std::string>& variables() const { return vars_; }
  const GroebnerBasis& relations() const { return relations_; }

  PolyFp zero() const { return PolyFp::zero(p_, nvars()); }
  PolyFp variable(std::size_t j) const { return PolyFp::variable(p_, nvars(), j); }

  /// Canonical representative modulo the defining ideal.
  PolyFp reduce(const PolyFp& f) const { return normal_form(f, relations_.basis); }

  bool relations_homogeneous() const {
    for (const auto& g : relations_.basis)
      if (!g.is_homogeneous()) return false;
    return true;
  }

 private:
  unsigned long p_;
  std::vector<std::string> vars_;
  GroebnerBasis relations_;  // empty basis = polynomial ring
};

/// f in (gens) within R, decided by a Groebner basis of gens together with
/// the defining relations.
inline bool ideal_membership(const PolyFp& f, const std::vector<PolyFp>& gens,
                             const QuotientRing& ring) {
  if (f.characteristic() != ring.characteristic() || f.nvars() != ring.nvars())
    throw std::invalid_argument("element in wrong ring");
  std::vector<PolyFp> all;
  for (const auto& g : gens) {
    f.check_ring(g);
    if (!g.is_zero()) all.push_back(g);
  }
  for (const auto& g : ring.relations().basis) all.push_back(g);
  if (all.empty()) return f.is_zero();
  GroebnerBasis gb = buchberger(all);
  return normal_form(f, gb).is_zero();
}

}  // namespace closures

#endif
