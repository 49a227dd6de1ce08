// Integral closure and its special part for monomial ideals, decided by
// exact-rational linear programming over the Newton polyhedron. A monomial
// x^alpha lies in the integral closure iff alpha dominates a convex
// combination of the generator exponents; it lies in the special part iff
// such a combination exists with the domination strict somewhere. Strictness
// is decided by maximizing the aggregate slack and comparing the exact
// optimum against zero.
#ifndef CLOSURES_NEWTON_HPP
#define CLOSURES_NEWTON_HPP

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <thread>
#include <utility>
#include <vector>

#include "closures/monomial_ideal.hpp"
#include "closures/rational.hpp"
#include "closures/simplex.hpp"

namespace closures {

/// Nonnegative rationals c_1..c_r with sum 1 witnessing that alpha dominates
/// the convex combination sum c_i beta_i of the generators; for special
/// membership, strict_coordinate records a coordinate where the domination
/// is strict (0-based).
struct ConvexCertificate {
  std::vector<Rational> coefficients;
  std::optional<std::size_t> strict_coordinate;
};

enum class Verdict { In, NotIn };

struct MembershipResult {
  Verdict verdict = Verdict::NotIn;
  std::optional<ConvexCertificate> certificate;
  bool in() const { return verdict == Verdict::In; }
};

/// Exact replay of a certificate: coefficients nonnegative summing to one,
/// domination componentwise, and strictness where recorded.
inline bool verify_certificate(const MonomialIdeal& ideal, const ExponentVector& alpha,
                               const ConvexCertificate& cert) {
  const auto& gens = ideal.generators();
  if (cert.coefficients.size() != gens.size()) return false;
  Rational total(0);
  for (const auto& c : cert.coefficients) {
    if (mpq_sgn(c.get_mpq_t()) < 0) return false;
    total += c;
  }
  if (total != 1) return false;
  for (std::size_t j = 0; j < ideal.nvars(); ++j) {
    Rational combo(0);
    for (std::size_t i = 0; i < gens.size(); ++i) combo += cert.coefficients[i] * Rational(gens[i][j]);
    if (combo > Rational(alpha[j])) return false;
    if (cert.strict_coordinate && *cert.strict_coordinate == j && combo == Rational(alpha[j]))
      return false;
  }
  if (cert.strict_coordinate && *cert.strict_coordinate >= ideal.nvars()) return false;
  return true;
}

namespace detail {

inline void require_proper_nonzero(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) throw std::invalid_argument("zero ideal");
  if (ideal.is_unit()) throw std::invalid_argument("unit ideal");
}

// Constraint system shared by both membership tests, over variables
// (c_1..c_r, s_1..s_n):
//   sum c_i = 1
//   sum c_i beta_{i,j} + s_j = alpha_j      for each coordinate j
inline SimplexSolver membership_system(const MonomialIdeal& ideal, const ExponentVector& alpha) {
  const auto& gens = ideal.generators();
  const std::size_t r = gens.size();
  const std::size_t n = ideal.nvars();
  std::vector<std::vector<Rational>> rows;
  std::vector<Rational> rhs;
  rows.emplace_back(r + n, Rational(0));
  for (std::size_t i = 0; i < r; ++i) rows[0][i] = 1;
  rhs.emplace_back(1);
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Rational> row(r + n, Rational(0));
    for (std::size_t i = 0; i < r; ++i) row[i] = Rational(gens[i][j]);
    row[r + j] = 1;
    rows.push_back(std::move(row));
    rhs.emplace_back(Rational(alpha[j]));
  }
  return SimplexSolver(std::move(rows), std::move(rhs));
}

}  // namespace detail

/// alpha in the integral closure of I: feasibility of the convex system.
inline MembershipResult contains_integral(const MonomialIdeal& ideal, const ExponentVector& alpha) {
  detail::require_proper_nonzero(ideal);
  if (alpha.size() != ideal.nvars()) throw std::invalid_argument("dimension mismatch");

  const std::size_t r = ideal.generator_count();
  auto lp = detail::membership_system(ideal, alpha).maximize({});
  if (!lp.feasible) return {};

  MembershipResult result;
  result.verdict = Verdict::In;
  ConvexCertificate cert;
  cert.coefficients.assign(lp.point.begin(), lp.point.begin() + static_cast<long>(r));
  result.certificate = std::move(cert);
  if (!verify_certificate(ideal, alpha, *result.certificate))
    throw std::logic_error("certificate replay failed");
  return result;
}

/// alpha in the special part of the integral closure: a feasible convex
/// combination dominated by alpha but not equal to it. Decided by maximizing
/// the total slack; any positive optimum yields a strict coordinate.
inline MembershipResult contains_special_integral(const MonomialIdeal& ideal,
                                                  const ExponentVector& alpha) {
  detail::require_proper_nonzero(ideal);
  if (alpha.size() != ideal.nvars()) throw std::invalid_argument("dimension mismatch");

  const std::size_t r = ideal.generator_count();
  const std::size_t n = ideal.nvars();
  std::vector<Rational> slack_objective(r + n, Rational(0));
  for (std::size_t j = 0; j < n; ++j) slack_objective[r + j] = 1;
  auto lp = detail::membership_system(ideal, alpha).maximize(slack_objective);
  if (!lp.feasible || !is_positive(lp.objective)) return {};

  MembershipResult result;
  result.verdict = Verdict::In;
  ConvexCertificate cert;
  cert.coefficients.assign(lp.point.begin(), lp.point.begin() + static_cast<long>(r));
  for (std::size_t j = 0; j < n; ++j)
    if (is_positive(lp.point[r + j])) {
      cert.strict_coordinate = j;
      break;
    }
  result.certificate = std::move(cert);
  if (!result.certificate->strict_coordinate ||
      !verify_certificate(ideal, alpha, *result.certificate))
    throw std::logic_error("certificate replay failed");
  return result;
}

namespace detail {

// Enumerates the lattice box with upper bounds `bounds` (inclusive), calls
// `probe` on each point, and returns the accepted points. Partitions the
// outermost coordinate across threads; the merged result is independent of
// the partitioning because acceptance is pointwise.
template <typename Probe>
std::vector<ExponentVector> scan_box(const std::vector<Integer>& bounds, Probe&& probe,
                                     unsigned threads) {
  const std::size_t n = bounds.size();
  std::vector<long> limit(n);
  for (std::size_t j = 0; j < n; ++j) limit[j] = to_long(bounds[j]);

  auto scan_slice = [&](long first_lo, long first_hi, std::vector<ExponentVector>& out) {
    std::vector<Integer> point(n, Integer(0));
    if (n == 0) return;
    point[0] = first_lo;
    for (;;) {
      if (point[0] > first_hi) break;
      ExponentVector alpha{std::vector<Integer>(point)};
      if (probe(alpha)) out.push_back(std::move(alpha));
      // odometer increment over coordinates n-1 .. 0
      std::size_t j = n;
      while (j-- > 0) {
        point[j] += 1;
        long cap = (j == 0) ? first_hi : limit[j];
        if (point[j] <= cap) break;
        if (j == 0) return;
        point[j] = 0;
      }
    }
  };

  if (threads <= 1 || n == 0 || limit[0] == 0) {
    std::vector<ExponentVector> accepted;
    if (n == 0) return accepted;
    scan_slice(0, limit[0], accepted);
    return accepted;
  }

  const unsigned workers = std::min<unsigned>(threads, static_cast<unsigned>(limit[0] + 1));
  std::vector<std::vector<ExponentVector>> parts(workers);
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    long span = limit[0] + 1;
    long lo = static_cast<long>(span * w / workers);
    long hi = static_cast<long>(span * (w + 1) / workers) - 1;
    pool.emplace_back([&, lo, hi, w]() { scan_slice(lo, hi, parts[w]); });
  }
  for (auto& t : pool) t.join();
  std::vector<ExponentVector> accepted;
  for (auto& part : parts)
    for (auto& alpha : part) accepted.push_back(std::move(alpha));
  return accepted;
}

}  // namespace detail

/// Minimal generators of the integral closure. Every minimal generator lies
/// in the box [0, max beta_j] per coordinate: above it, decrementing the
/// overflowing coordinate preserves membership, so the monomial is a proper
/// multiple of another member.
inline MonomialIdeal integral_closure(const MonomialIdeal& ideal, unsigned threads = 1) {
  detail::require_proper_nonzero(ideal);
  auto members = detail::scan_box(
      ideal.coordinate_maxima(),
      [&](const ExponentVector& alpha) { return contains_integral(ideal, alpha).in(); }, threads);
  return MonomialIdeal(ideal.nvars(), std::move(members));
}

/// Minimal generators of the special part. The box is [0, max beta_j + 1]:
/// a special member with a coordinate >= max beta_j + 2 stays special after
/// decrementing that coordinate (the slack there remains positive).
inline MonomialIdeal special_integral_closure(const MonomialIdeal& ideal, unsigned threads = 1) {
  detail::require_proper_nonzero(ideal);
  auto bounds = ideal.coordinate_maxima();
  for (auto& b : bounds) b += 1;
  auto members = detail::scan_box(
      bounds,
      [&](const ExponentVector& alpha) { return contains_special_integral(ideal, alpha).in(); },
      threads);
  return MonomialIdeal(ideal.nvars(), std::move(members));
}

/// Lattice points of low(conv(S)) for S the generator exponents: integral-
/// closure members that are not special. They all lie in [0, max beta_j]^n.
inline std::vector<ExponentVector> low_points(const MonomialIdeal& ideal, unsigned threads = 1) {
  detail::require_proper_nonzero(ideal);
  return detail::scan_box(
      ideal.coordinate_maxima(),
      [&](const ExponentVector& alpha) {
        return contains_integral(ideal, alpha).in() &&
               !contains_special_integral(ideal, alpha).in();
      },
      threads);
}

struct DecompositionReport {
  bool holds = false;
  std::optional<ExponentVector> witness;  // a point of the symmetric difference
};

/// Whether the closure decomposes as I + special part, equivalently whether
/// the generator set equals the lattice low points of its hull. Cross-checked
/// against the direct ideal identity.
inline DecompositionReport decomposition_holds(const MonomialIdeal& ideal, unsigned threads = 1) {
  detail::require_proper_nonzero(ideal);
  auto low = low_points(ideal, threads);
  std::vector<ExponentVector> gens = ideal.generators();
  std::sort(low.begin(), low.end());

  DecompositionReport report;
  report.holds = (low == gens);
  if (!report.holds) {
    for (const auto& p : low)
      if (std::find(gens.begin(), gens.end(), p) == gens.end()) {
        report.witness = p;
        break;
      }
    if (!report.witness)
      for (const auto& g : gens)
        if (std::find(low.begin(), low.end(), g) == low.end()) {
          report.witness = g;
          break;
        }
  }

  // Independent route: closure(I) == minimalize(I union special part).
  auto closure = integral_closure(ideal, threads);
  auto special = special_integral_closure(ideal, threads);
  std::vector<ExponentVector> joint = ideal.generators();
  for (const auto& g : special.generators()) joint.push_back(g);
  bool via_ideals = (closure == MonomialIdeal(ideal.nvars(), std::move(joint)));
  if (via_ideals != report.holds) throw std::logic_error("decomposition cross-check disagreement");
  return report;
}

/// Smallest n <= n_max with n*alpha in I^(n+1), if any. Bounded search; for
/// m-primary ideals membership in the special part is equivalent to success
/// at some finite n.
inline std::optional<unsigned long> eventually_in_higher_power(const ExponentVector& alpha,
                                                               const MonomialIdeal& ideal,
                                                               unsigned long n_max) {
  detail::require_proper_nonzero(ideal);
  if (n_max == 0) throw std::invalid_argument("n_max must be positive");
  if (alpha.size() != ideal.nvars()) throw std::invalid_argument("dimension mismatch");
  for (unsigned long n = 1; n <= n_max; ++n)
    if (power_membership(alpha.scaled(Integer(n)), ideal, n + 1)) return n;
  return std::nullopt;
}

/// One bounded facet of a 2-variable Newton polyhedron: the primitive inner
/// normal and the value min over generators of normal . beta.
struct StaircaseFacet {
  Integer normal_x;
  Integer normal_y;
  Integer value;
};

/// Monomial valuations of an m-primary ideal in 2 variables, read off the
/// bounded facets of the staircase's lower-left hull. Serves as an
/// independent cross-check of the special-membership LP.
inline std::vector<StaircaseFacet> staircase_valuations_2d(const MonomialIdeal& ideal) {
  detail::require_proper_nonzero(ideal);
  if (ideal.nvars() != 2) throw std::domain_error("staircase valuations require 2 variables");
  bool pure_x = false, pure_y = false;
  for (const auto& g : ideal.generators()) {
    if (is_zero(g[1])) pure_x = true;
    if (is_zero(g[0])) pure_y = true;
  }
  if (!pure_x || !pure_y) throw std::domain_error("staircase valuations require an m-primary ideal");

  // Generators sorted lexicographically: x ascending, y ascending; as an
  // antichain this means y strictly descending. Lower-left hull via a
  // monotone chain keeping right turns.
  const auto& gens = ideal.generators();
  std::vector<std::pair<Integer, Integer>> pts;
  pts.reserve(gens.size());
  for (const auto& g : gens) pts.emplace_back(g[0], g[1]);

  std::vector<std::pair<Integer, Integer>> hull;
  for (const auto& p : pts) {
    while (hull.size() >= 2) {
      const auto& a = hull[hull.size() - 2];
      const auto& b = hull[hull.size() - 1];
      Integer cross = (b.first - a.first) * (p.second - a.second) -
                      (b.second - a.second) * (p.first - a.first);
      // keep strict left turns only; drops points above the chain and
      // collinear interior points
      if (cross <= 0)
        hull.pop_back();
      else
        break;
    }
    hull.push_back(p);
  }

  std::vector<StaircaseFacet> facets;
  for (std::size_t i = 0; i + 1 < hull.size(); ++i) {
    Integer dx = hull[i + 1].first - hull[i].first;   // > 0
    Integer dy = hull[i].second - hull[i + 1].second; // > 0
    Integer g;
    mpz_gcd(g.get_mpz_t(), dx.get_mpz_t(), dy.get_mpz_t());
    Integer ax = dy / g;
    Integer ay = dx / g;
    Integer value = ax * hull[i].first + ay * hull[i].second;
    for (const auto& p : pts) {
      Integer v = ax * p.first + ay * p.second;
      if (v < value) value = v;
    }
    facets.push_back({ax, ay, value});
  }
  return facets;
}

}  // namespace closures

#endif
