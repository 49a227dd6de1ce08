// Closure-operation abstraction and instance-level checkers: the closure
// axioms, the four special-part axioms (including the Nakayama property),
// c-independence, subset reductions and spread, Briancon-Skoda containments,
// the evolution conditions (SP)/(AR)/(NN), and the m-primary equivalence of
// special membership with the n |-> I^(n+1) search. Checks are falsification
// by replay, never proof; every failure carries a witness.
#ifndef CLOSURES_FRAMEWORK_HPP
#define CLOSURES_FRAMEWORK_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "closures/grammar.hpp"
#include "closures/monomial_ideal.hpp"
#include "closures/newton.hpp"

namespace closures {

/// A closure operation on monomial ideals, with an optional special part and
/// an optional fast membership test (defaulting to full closure + lookup).
struct ClosureOperation {
  std::string name;
  std::function<MonomialIdeal(const MonomialIdeal&)> close;
  std::function<MonomialIdeal(const MonomialIdeal&)> special;  // may be empty
  std::function<bool(const MonomialIdeal&, const ExponentVector&)> member;  // may be empty

  bool in_closure(const MonomialIdeal& ideal, const ExponentVector& alpha) const {
    if (member) return member(ideal, alpha);
    return close(ideal).contains(alpha);
  }
};

inline ClosureOperation integral_closure_operation(unsigned threads = 1) {
  ClosureOperation op;
  op.name = "integral";
  op.close = [threads](const MonomialIdeal& ideal) { return integral_closure(ideal, threads); };
  op.special = [threads](const MonomialIdeal& ideal) {
    return special_integral_closure(ideal, threads);
  };
  op.member = [](const MonomialIdeal& ideal, const ExponentVector& alpha) {
    return contains_integral(ideal, alpha).in();
  };
  return op;
}

inline ClosureOperation identity_operation() {
  ClosureOperation op;
  op.name = "identity";
  op.close = [](const MonomialIdeal& ideal) { return ideal; };
  op.member = [](const MonomialIdeal& ideal, const ExponentVector& alpha) {
    return ideal.contains(alpha);
  };
  return op;
}

struct AxiomCheck {
  std::string axiom;
  bool passed = true;
  std::optional<std::string> witness;
};

struct AxiomReport {
  std::vector<AxiomCheck> checks;
  std::size_t instances = 0;
  bool all_passed() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }
};

namespace detail {

/// Witnesses render in the ideal text grammar with default variable names.
inline std::string describe(const MonomialIdeal& ideal) {
  return "(" + format_ideal(ideal, default_variable_names(ideal.nvars())) + ")";
}

inline std::string describe(const ExponentVector& alpha) {
  return format_monomial(alpha, default_variable_names(alpha.size()));
}

inline MonomialIdeal join(const MonomialIdeal& a, const MonomialIdeal& b) {
  std::vector<ExponentVector> gens = a.generators();
  for (const auto& g : b.generators()) gens.push_back(g);
  return MonomialIdeal(a.nvars(), std::move(gens));
}

}  // namespace detail

/// Extensivity, idempotence, and monotonicity (on comparable pairs within
/// the instance list).
inline AxiomReport check_closure_axioms(const ClosureOperation& op,
                                        const std::vector<MonomialIdeal>& instances) {
  AxiomReport report;
  report.instances = instances.size();
  AxiomCheck extensive{"extensive"}, idempotent{"idempotent"}, monotone{"monotone"};

  std::vector<MonomialIdeal> closures;
  closures.reserve(instances.size());
  for (const auto& ideal : instances) closures.push_back(op.close(ideal));

  for (std::size_t i = 0; i < instances.size(); ++i) {
    if (extensive.passed && !closures[i].contains_ideal(instances[i])) {
      extensive.passed = false;
      extensive.witness = detail::describe(instances[i]);
    }
    if (idempotent.passed && !(op.close(closures[i]) == closures[i])) {
      idempotent.passed = false;
      idempotent.witness = detail::describe(instances[i]);
    }
  }
  for (std::size_t i = 0; i < instances.size() && monotone.passed; ++i)
    for (std::size_t j = 0; j < instances.size() && monotone.passed; ++j) {
      if (i == j || instances[i].nvars() != instances[j].nvars()) continue;
      if (!instances[j].contains_ideal(instances[i])) continue;  // need I_i subset I_j
      if (!closures[j].contains_ideal(closures[i])) {
        monotone.passed = false;
        monotone.witness = detail::describe(instances[i]) + " inside " + detail::describe(instances[j]);
      }
    }

  report.checks = {extensive, idempotent, monotone};
  return report;
}

/// The four special-part axioms. Axioms 1-3 are checked directly on each
/// instance (1: the special part is a well-formed ideal; 2: mI inside sp(I)
/// inside closure, plus m closure(I) inside sp(I); 3: sp(closure(I)) =
/// sp(I) = closure(sp(I))). Axiom 4 (Nakayama) is sampled over generator
/// subsets J of I: whenever I lies in closure(J + sp(I)), I must lie in
/// closure(J).
inline AxiomReport check_special_axioms(const ClosureOperation& op,
                                        const std::vector<MonomialIdeal>& instances,
                                        std::size_t pair_samples = 500, std::uint64_t seed = 1) {
  if (!op.special) throw std::invalid_argument("operation has no special part");
  AxiomReport report;
  report.instances = instances.size();
  AxiomCheck ax1{"ideal"}, ax2{"mI <= sp <= closure"}, ax3{"sp(closure) = sp = closure(sp)"},
      ax4{"Nakayama property"};

  std::vector<MonomialIdeal> closures, specials;
  for (const auto& ideal : instances) {
    closures.push_back(op.close(ideal));
    specials.push_back(op.special(ideal));
  }

  for (std::size_t i = 0; i < instances.size(); ++i) {
    const auto& ideal = instances[i];
    const auto& cls = closures[i];
    const auto& sp = specials[i];

    // Axiom 1: represented as a MonomialIdeal, so well-formedness is the
    // minimal-antichain invariant; re-minimalizing must be a no-op.
    if (ax1.passed && !(MonomialIdeal(sp.nvars(), sp.generators()) == sp)) {
      ax1.passed = false;
      ax1.witness = detail::describe(ideal);
    }
    if (ax2.passed) {
      bool ok = sp.contains_ideal(m_times(ideal)) && cls.contains_ideal(sp) &&
                sp.contains_ideal(m_times(cls));
      if (!ok) {
        ax2.passed = false;
        ax2.witness = detail::describe(ideal);
      }
    }
    if (ax3.passed) {
      bool ok = (op.special(cls) == sp) && (op.close(sp) == sp);
      if (!ok) {
        ax3.passed = false;
        ax3.witness = detail::describe(ideal);
      }
    }
  }

  std::mt19937_64 rng(seed);
  for (std::size_t s = 0; s < pair_samples && ax4.passed && !instances.empty(); ++s) {
    const std::size_t idx = static_cast<std::size_t>(rng() % instances.size());
    const auto& ideal = instances[idx];
    const std::size_t r = ideal.generator_count();

    // corner cases first, then random nonempty proper subsets
    std::vector<std::size_t> chosen;
    if (s % 16 == 0) {
      // J empty: hypothesis is I inside closure(sp(I)); the conclusion
      // compares against the closure of the zero ideal, which is zero
      bool hypothesis = true;
      for (const auto& g : ideal.generators())
        if (!op.in_closure(specials[idx], g)) {
          hypothesis = false;
          break;
        }
      if (hypothesis && !ideal.is_zero()) {
        ax4.passed = false;
        ax4.witness = "J=(0), I=" + detail::describe(ideal);
      }
      continue;
    }
    if (s % 16 == 1) {
      for (std::size_t k = 0; k < r; ++k) chosen.push_back(k);  // J = I
    } else {
      for (std::size_t k = 0; k < r; ++k)
        if (rng() % 2 == 0) chosen.push_back(k);
      if (chosen.empty() || chosen.size() == r) continue;
    }

    std::vector<ExponentVector> sub;
    for (std::size_t k : chosen) sub.push_back(ideal.generators()[k]);
    MonomialIdeal subideal(ideal.nvars(), std::move(sub));
    MonomialIdeal augmented = detail::join(subideal, specials[idx]);

    bool hypothesis = true;
    for (const auto& g : ideal.generators())
      if (!op.in_closure(augmented, g)) {
        hypothesis = false;
        break;
      }
    if (!hypothesis) continue;
    for (const auto& g : ideal.generators())
      if (!op.in_closure(subideal, g)) {
        ax4.passed = false;
        ax4.witness = "J=" + detail::describe(subideal) + ", I=" + detail::describe(ideal) +
                      ", generator " + detail::describe(g);
        break;
      }
  }

  report.checks = {ax1, ax2, ax3, ax4};
  return report;
}

/// The Nakayama-closure consequence: K <= L <= closure(K + mL) forces
/// closure(K) = closure(L), sampled over generator subsets K of L.
inline AxiomReport check_nakayama_closure(const ClosureOperation& op,
                                          const std::vector<MonomialIdeal>& instances,
                                          std::size_t pair_samples = 200, std::uint64_t seed = 1) {
  AxiomReport report;
  report.instances = instances.size();
  AxiomCheck nak{"Nakayama closure"};
  std::mt19937_64 rng(seed);
  for (std::size_t s = 0; s < pair_samples && nak.passed && !instances.empty(); ++s) {
    const std::size_t idx = static_cast<std::size_t>(rng() % instances.size());
    const auto& ideal = instances[idx];
    const std::size_t r = ideal.generator_count();
    std::vector<ExponentVector> sub;
    for (std::size_t k = 0; k < r; ++k)
      if (rng() % 2 == 0) sub.push_back(ideal.generators()[k]);
    if (sub.empty()) continue;
    MonomialIdeal subideal(ideal.nvars(), std::move(sub));
    MonomialIdeal augmented = detail::join(subideal, m_times(ideal));
    bool hypothesis = true;
    for (const auto& g : ideal.generators())
      if (!op.in_closure(augmented, g)) {
        hypothesis = false;
        break;
      }
    if (!hypothesis) continue;
    if (!(op.close(subideal) == op.close(ideal))) {
      nak.passed = false;
      nak.witness = "K=" + detail::describe(subideal) + ", L=" + detail::describe(ideal);
    }
  }
  report.checks = {nak};
  return report;
}

/// No generator lies in the closure of the others. A single nonzero
/// generator is independent (the closure of the zero ideal is zero).
inline bool is_c_independent(const MonomialIdeal& ideal, const ClosureOperation& op) {
  if (ideal.is_unit()) throw std::invalid_argument("unit ideal");
  const auto& gens = ideal.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    std::vector<ExponentVector> others;
    for (std::size_t j = 0; j < gens.size(); ++j)
      if (j != i) others.push_back(gens[j]);
    if (others.empty()) continue;
    if (op.in_closure(MonomialIdeal(ideal.nvars(), std::move(others)), gens[i])) return false;
  }
  return true;
}

/// All minimal generator-subset reductions of I: subsets J of the generator
/// set with closure(J) = closure(I), minimal under inclusion. Reduction is
/// decided by "every generator of I lies in closure(J)", valid since J is
/// contained in I and the operation is extensive, idempotent and monotone.
inline std::vector<MonomialIdeal> minimal_subset_reductions(const MonomialIdeal& ideal,
                                                            const ClosureOperation& op) {
  if (ideal.is_unit() || ideal.is_zero()) throw std::invalid_argument("proper nonzero ideal required");
  const auto& gens = ideal.generators();
  const std::size_t r = gens.size();
  if (r > 20) throw std::invalid_argument("too many generators for subset search");

  auto is_reduction = [&](std::uint32_t mask) {
    std::vector<ExponentVector> sub;
    for (std::size_t k = 0; k < r; ++k)
      if (mask & (1u << k)) sub.push_back(gens[k]);
    MonomialIdeal subideal(ideal.nvars(), std::move(sub));
    for (const auto& g : gens)
      if (!op.in_closure(subideal, g)) return false;
    return true;
  };

  std::vector<std::uint32_t> minimal_masks;
  std::vector<std::uint32_t> by_popcount;
  for (std::uint32_t mask = 1; mask < (1u << r); ++mask) by_popcount.push_back(mask);
  std::sort(by_popcount.begin(), by_popcount.end(), [](std::uint32_t a, std::uint32_t b) {
    int pa = __builtin_popcount(a), pb = __builtin_popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  for (std::uint32_t mask : by_popcount) {
    bool dominated = false;
    for (std::uint32_t m : minimal_masks)
      if ((m & mask) == m) {
        dominated = true;
        break;
      }
    if (dominated || !is_reduction(mask)) continue;
    minimal_masks.push_back(mask);
  }

  std::vector<MonomialIdeal> out;
  for (std::uint32_t mask : minimal_masks) {
    std::vector<ExponentVector> sub;
    for (std::size_t k = 0; k < r; ++k)
      if (mask & (1u << k)) sub.push_back(gens[k]);
    out.emplace_back(ideal.nvars(), std::move(sub));
  }
  return out;
}

/// Common generator count of the minimal subset reductions, when they agree.
inline std::optional<std::size_t> spread_over_subsets(const MonomialIdeal& ideal,
                                                      const ClosureOperation& op) {
  auto reductions = minimal_subset_reductions(ideal, op);
  if (reductions.empty()) return std::nullopt;
  std::size_t count = reductions.front().generator_count();
  for (const auto& red : reductions)
    if (red.generator_count() != count) return std::nullopt;
  return count;
}

/// Briancon-Skoda replay with n = generator count of I: the special part of
/// closure(I^(n+w)) must land in m I^(w+1), and the closure of I^(n+w) in
/// I^(w+1). Both are theorems here, so violations flag bugs.
struct BriancosSkodaReport {
  std::size_t generator_count = 0;
  unsigned long w = 0;
  bool special_containment = true;
  bool integral_containment = true;
  std::vector<ExponentVector> special_violations;
  std::vector<ExponentVector> integral_violations;
  bool ok() const { return special_containment && integral_containment; }
};

inline BriancosSkodaReport briancon_skoda_check(const MonomialIdeal& ideal, unsigned long w,
                                                unsigned threads = 1) {
  if (ideal.is_unit() || ideal.is_zero()) throw std::invalid_argument("proper nonzero ideal required");
  BriancosSkodaReport report;
  report.generator_count = ideal.generator_count();
  report.w = w;
  const MonomialIdeal high = power(ideal, report.generator_count + w);
  const MonomialIdeal low = power(ideal, w + 1);
  const MonomialIdeal m_low = m_times(low);

  const MonomialIdeal special_high = special_integral_closure(high, threads);
  for (const auto& g : special_high.generators())
    if (!m_low.contains(g)) {
      report.special_containment = false;
      report.special_violations.push_back(g);
    }
  const MonomialIdeal closure_high = integral_closure(high, threads);
  for (const auto& g : closure_high.generators())
    if (!low.contains(g)) {
      report.integral_containment = false;
      report.integral_violations.push_back(g);
    }
  return report;
}

enum class ConditionStatus { Holds, Fails, HoldsUpToBound };

/// Huebl-style evolution conditions. (SP) is exact: the monomials of I in
/// sp(I) are exactly those of mI iff I ∩ sp(I) = mI as monomial ideals, and
/// the only candidate monomials outside mI are the minimal generators.
/// (AR) and (NN) search each generator for a bounded witness n with
/// n alpha in m I^n resp. I^(n+1); absence up to the bound is flagged as
/// such, except when an earlier (exact) condition already forces the later
/// ones. Bar-independence is exact.
struct EvolutionReport {
  ConditionStatus sp = ConditionStatus::Holds;
  ConditionStatus ar = ConditionStatus::Holds;
  ConditionStatus nn = ConditionStatus::Holds;
  bool bar_independent = false;
  std::optional<ExponentVector> sp_witness;
  std::optional<std::pair<ExponentVector, unsigned long>> ar_witness;
  std::optional<std::pair<ExponentVector, unsigned long>> nn_witness;
};

inline EvolutionReport evolution_conditions(const MonomialIdeal& ideal, unsigned long n_max = 32,
                                            unsigned threads = 1) {
  if (ideal.is_unit() || ideal.is_zero()) throw std::invalid_argument("proper nonzero ideal required");
  if (n_max == 0) throw std::invalid_argument("n_max must be positive");
  EvolutionReport report;

  const MonomialIdeal special = special_integral_closure(ideal, threads);
  const MonomialIdeal meet = intersect(ideal, special);
  const MonomialIdeal m_ideal = m_times(ideal);
  if (meet == m_ideal) {
    report.sp = ConditionStatus::Holds;
  } else {
    report.sp = ConditionStatus::Fails;
    for (const auto& g : meet.generators())
      if (!m_ideal.contains(g)) {
        report.sp_witness = g;
        break;
      }
  }

  report.bar_independent = is_c_independent(ideal, integral_closure_operation(threads));

  // (AR): some generator with n alpha in m I^n for n <= n_max
  for (const auto& g : ideal.generators()) {
    for (unsigned long n = 1; n <= n_max && !report.ar_witness; ++n)
      if (m_power_membership(g.scaled(Integer(n)), ideal, n)) report.ar_witness = {g, n};
    if (report.ar_witness) break;
  }
  if (report.ar_witness)
    report.ar = ConditionStatus::Fails;
  else
    report.ar = report.sp == ConditionStatus::Holds ? ConditionStatus::Holds
                                                    : ConditionStatus::HoldsUpToBound;

  // (NN): some generator with n alpha in I^(n+1) for n <= n_max
  for (const auto& g : ideal.generators()) {
    for (unsigned long n = 1; n <= n_max && !report.nn_witness; ++n)
      if (power_membership(g.scaled(Integer(n)), ideal, n + 1)) report.nn_witness = {g, n};
    if (report.nn_witness) break;
  }
  if (report.nn_witness)
    report.nn = ConditionStatus::Fails;
  else
    report.nn = report.ar == ConditionStatus::Holds ? ConditionStatus::Holds
                                                    : ConditionStatus::HoldsUpToBound;

  return report;
}

/// For m-primary ideals, special membership is equivalent to the existence
/// of n with n alpha in I^(n+1). Compares the LP answer against the bounded
/// search over a box; a search hit without LP membership is a hard
/// contradiction (a bug in one of the routes), while LP membership the
/// search has not confirmed yet only indicts the bound.
struct ReesEquivalenceReport {
  std::size_t points = 0;
  std::size_t agreements = 0;
  std::vector<ExponentVector> bound_insufficient;
  std::vector<ExponentVector> contradictions;
  bool ok() const { return contradictions.empty(); }
};

inline bool is_m_primary(const MonomialIdeal& ideal) {
  for (std::size_t j = 0; j < ideal.nvars(); ++j) {
    bool pure = false;
    for (const auto& g : ideal.generators()) {
      bool only_j = true;
      for (std::size_t k = 0; k < ideal.nvars(); ++k)
        if (k != j && !is_zero(g[k])) only_j = false;
      if (only_j && !is_zero(g[j])) pure = true;
    }
    if (!pure) return false;
  }
  return true;
}

inline ReesEquivalenceReport reesvalsp_equivalence_check(const MonomialIdeal& ideal,
                                                         long box_max, unsigned long n_max = 24) {
  if (ideal.is_unit() || ideal.is_zero()) throw std::invalid_argument("proper nonzero ideal required");
  if (!is_m_primary(ideal)) throw std::domain_error("equivalence check requires an m-primary ideal");
  if (box_max < 0) throw std::invalid_argument("box bound must be nonnegative");

  ReesEquivalenceReport report;
  std::vector<Integer> bounds(ideal.nvars(), Integer(box_max));
  detail::scan_box(
      bounds,
      [&](const ExponentVector& alpha) {
        report.points += 1;
        const bool lp = contains_special_integral(ideal, alpha).in();
        const bool search = eventually_in_higher_power(alpha, ideal, n_max).has_value();
        if (lp == search)
          report.agreements += 1;
        else if (lp && !search)
          report.bound_insufficient.push_back(alpha);
        else
          report.contradictions.push_back(alpha);
        return false;
      },
      1);
  return report;
}

}  // namespace closures

#endif
