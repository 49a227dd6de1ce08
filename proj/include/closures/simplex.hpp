// Dense two-phase simplex over exact rationals with Bland's anticycling rule.
// Solves  maximize c.x  subject to  A x = b, x >= 0  without any floating
// point; strict inequalities elsewhere in the library are decided by testing
// exact optima against zero.
#ifndef CLOSURES_SIMPLEX_HPP
#define CLOSURES_SIMPLEX_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "closures/rational.hpp"

namespace closures {

struct LpSolution {
  bool feasible = false;
  Rational objective;            // meaningful when feasible
  std::vector<Rational> point;   // primal values, length = #variables
};

class SimplexSolver {
 public:
  // rows: coefficient rows of A (each of length nvars); rhs: b.
  SimplexSolver(std::vector<std::vector<Rational>> rows, std::vector<Rational> rhs)
      : a_(std::move(rows)), b_(std::move(rhs)) {
    if (a_.size() != b_.size()) throw std::invalid_argument("row/rhs count mismatch");
    nvars_ = a_.empty() ? 0 : a_[0].size();
    for (const auto& row : a_)
      if (row.size() != nvars_) throw std::invalid_argument("ragged constraint matrix");
    for (std::size_t i = 0; i < a_.size(); ++i)
      if (mpq_sgn(b_[i].get_mpq_t()) < 0) {
        for (auto& v : a_[i]) v = -v;
        b_[i] = -b_[i];
      }
  }

  /// Maximizes objective.x over the feasible region. The objective vector
  /// may be shorter than the variable count; missing entries are zero.
  LpSolution maximize(const std::vector<Rational>& objective) {
    const std::size_t m = a_.size();
    const std::size_t total = nvars_ + m;  // artificials appended
    tableau_.assign(m, std::vector<Rational>(total + 1, Rational(0)));
    basis_.assign(m, 0);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < nvars_; ++j) tableau_[i][j] = a_[i][j];
      tableau_[i][nvars_ + i] = 1;
      tableau_[i][total] = b_[i];
      basis_[i] = nvars_ + i;
    }

    // Phase 1: maximize -(sum of artificials).
    std::vector<Rational> phase1(total, Rational(0));
    for (std::size_t i = 0; i < m; ++i) phase1[nvars_ + i] = -1;
    Rational p1 = run(phase1, total);
    if (!is_zero(p1)) return {};  // infeasible

    // Pivot artificials out of the basis where possible; rows that cannot
    // be pivoted are redundant constraints and may be ignored (their basic
    // artificial stays at value zero and never re-enters: phase 2 forbids
    // artificial columns).
    for (std::size_t i = 0; i < m; ++i) {
      if (basis_[i] < nvars_) continue;
      for (std::size_t j = 0; j < nvars_; ++j)
        if (!is_zero(tableau_[i][j])) {
          pivot(i, j);
          break;
        }
    }

    std::vector<Rational> phase2(total, Rational(0));
    for (std::size_t j = 0; j < objective.size() && j < nvars_; ++j) phase2[j] = objective[j];
    Rational value = run(phase2, nvars_);

    LpSolution out;
    out.feasible = true;
    out.objective = value;
    out.point.assign(nvars_, Rational(0));
    for (std::size_t i = 0; i < m; ++i)
      if (basis_[i] < nvars_) out.point[basis_[i]] = tableau_[i][tableau_[i].size() - 1];
    return out;
  }

  /// Feasibility only (phase 1).
  bool feasible() { return maximize({}).feasible; }

 private:
  // One simplex run over the current tableau maximizing `obj`, considering
  // only columns < eligible as entering candidates (Bland's rule: smallest
  // eligible index with positive reduced cost; leaving row by minimum ratio,
  // ties to the smallest basic index). Returns the objective value.
  Rational run(const std::vector<Rational>& obj, std::size_t eligible) {
    const std::size_t m = tableau_.size();
    const std::size_t rhs = tableau_.empty() ? 0 : tableau_[0].size() - 1;
    for (;;) {
      // reduced costs: obj_j - sum over rows of obj_basis * row
      std::optional<std::size_t> entering;
      for (std::size_t j = 0; j < eligible && !entering; ++j) {
        bool in_basis = false;
        for (std::size_t i = 0; i < m; ++i)
          if (basis_[i] == j) in_basis = true;
        if (in_basis) continue;
        Rational reduced = obj[j];
        for (std::size_t i = 0; i < m; ++i)
          if (!is_zero(tableau_[i][j])) reduced -= obj[basis_[i]] * tableau_[i][j];
        if (is_positive(reduced)) entering = j;
      }
      if (!entering) break;

      std::optional<std::size_t> leaving;
      Rational best_ratio;
      for (std::size_t i = 0; i < m; ++i) {
        if (mpq_sgn(tableau_[i][*entering].get_mpq_t()) <= 0) continue;
        Rational ratio = tableau_[i][rhs] / tableau_[i][*entering];
        if (!leaving || ratio < best_ratio ||
            (ratio == best_ratio && basis_[i] < basis_[*leaving])) {
          leaving = i;
          best_ratio = ratio;
        }
      }
      if (!leaving) throw std::runtime_error("unbounded linear program");
      pivot(*leaving, *entering);
    }

    Rational value(0);
    for (std::size_t i = 0; i < m; ++i)
      if (!is_zero(tableau_[i][rhs])) value += obj[basis_[i]] * tableau_[i][rhs];
    return value;
  }

  void pivot(std::size_t row, std::size_t col) {
    const std::size_t width = tableau_[row].size();
    Rational inv = tableau_[row][col];
    for (std::size_t j = 0; j < width; ++j) tableau_[row][j] /= inv;
    for (std::size_t i = 0; i < tableau_.size(); ++i) {
      if (i == row || is_zero(tableau_[i][col])) continue;
      Rational factor = tableau_[i][col];
      for (std::size_t j = 0; j < width; ++j) tableau_[i][j] -= factor * tableau_[row][j];
    }
    basis_[row] = col;
  }

  std::vector<std::vector<Rational>> a_;
  std::vector<Rational> b_;
  std::size_t nvars_ = 0;
  std::vector<std::vector<Rational>> tableau_;
  std::vector<std::size_t> basis_;
};

}  // namespace closures

#endif
