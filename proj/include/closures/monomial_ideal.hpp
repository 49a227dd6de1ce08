// Exponent vectors and monomial ideals in staircase (minimal antichain) form,
// with exact arithmetic on arbitrary-precision exponents.
#ifndef CLOSURES_MONOMIAL_IDEAL_HPP
#define CLOSURES_MONOMIAL_IDEAL_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <stdexcept>
#include <utility>
#include <vector>

#include "closures/rational.hpp"

namespace closures {

/// A point of N^n: the exponent of a monomial x^alpha. Immutable after
/// construction; coordinates are nonnegative arbitrary-precision integers.
class ExponentVector {
 public:
  ExponentVector() = default;

  explicit ExponentVector(std::vector<Integer> coords) : coords_(std::move(coords)) {
    for (const auto& c : coords_)
      if (is_negative(c)) throw std::invalid_argument("negative exponent");
  }

  ExponentVector(std::initializer_list<long> coords) {
    coords_.reserve(coords.size());
    for (long c : coords) {
      if (c < 0) throw std::invalid_argument("negative exponent");
      coords_.emplace_back(c);
    }
  }

  std::size_t size() const { return coords_.size(); }
  const Integer& operator[](std::size_t i) const { return coords_[i]; }
  const std::vector<Integer>& coords() const { return coords_; }

  Integer degree() const {
    Integer d = 0;
    for (const auto& c : coords_) d += c;
    return d;
  }

  bool is_origin() const {
    return std::all_of(coords_.begin(), coords_.end(), [](const Integer& c) { return is_zero(c); });
  }

  /// Componentwise <=, i.e. x^this divides x^other.
  bool divides(const ExponentVector& other) const {
    if (size() != other.size()) throw std::invalid_argument("dimension mismatch");
    for (std::size_t i = 0; i < size(); ++i)
      if (coords_[i] > other.coords_[i]) return false;
    return true;
  }

  ExponentVector operator+(const ExponentVector& other) const {
    if (size() != other.size()) throw std::invalid_argument("dimension mismatch");
    std::vector<Integer> sum(size());
    for (std::size_t i = 0; i < size(); ++i) sum[i] = coords_[i] + other.coords_[i];
    return ExponentVector(std::move(sum));
  }

  ExponentVector scaled(const Integer& k) const {
    if (is_negative(k)) throw std::invalid_argument("negative scale factor");
    std::vector<Integer> s(size());
    for (std::size_t i = 0; i < size(); ++i) s[i] = coords_[i] * k;
    return ExponentVector(std::move(s));
  }

  bool operator==(const ExponentVector& other) const { return coords_ == other.coords_; }

  /// Lexicographic on coordinates; the canonical generator order.
  bool operator<(const ExponentVector& other) const {
    return std::lexicographical_compare(coords_.begin(), coords_.end(),
                                        other.coords_.begin(), other.coords_.end());
  }

 private:
  std::vector<Integer> coords_;
};

inline ExponentVector unit_vector(std::size_t n, std::size_t j) {
  std::vector<Integer> c(n, Integer(0));
  c.at(j) = 1;
  return ExponentVector(std::move(c));
}

inline ExponentVector zero_vector(std::size_t n) {
  return ExponentVector(std::vector<Integer>(n, Integer(0)));
}

/// A monomial ideal in n variables, held as its unique minimal generating
/// set: an antichain under componentwise <=, sorted lexicographically so
/// that equality is structural. The zero ideal has no generators; the unit
/// ideal is generated by the origin.
class MonomialIdeal {
 public:
  explicit MonomialIdeal(std::size_t nvars) : nvars_(nvars) {}

  MonomialIdeal(std::size_t nvars, std::vector<ExponentVector> gens) : nvars_(nvars) {
    for (const auto& g : gens)
      if (g.size() != nvars_) throw std::invalid_argument("dimension mismatch among generators");
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    // keep only <=-minimal elements
    for (std::size_t i = 0; i < gens.size(); ++i) {
      bool redundant = false;
      for (std::size_t j = 0; j < gens.size() && !redundant; ++j)
        if (i != j && gens[j].divides(gens[i])) redundant = true;
      if (!redundant) generators_.push_back(gens[i]);
    }
  }

  std::size_t nvars() const { return nvars_; }
  const std::vector<ExponentVector>& generators() const { return generators_; }
  std::size_t generator_count() const { return generators_.size(); }

  bool is_zero() const { return generators_.empty(); }
  bool is_unit() const { return generators_.size() == 1 && generators_[0].is_origin(); }
  bool is_proper() const { return !is_unit(); }

  /// x^alpha lies in the ideal iff some generator divides it.
  bool contains(const ExponentVector& alpha) const {
    if (alpha.size() != nvars_) throw std::invalid_argument("dimension mismatch");
    for (const auto& g : generators_)
      if (g.divides(alpha)) return true;
    return false;
  }

  bool contains_ideal(const MonomialIdeal& other) const {
    if (other.nvars_ != nvars_) throw std::invalid_argument("dimension mismatch");
    for (const auto& g : other.generators_)
      if (!contains(g)) return false;
    return true;
  }

  bool operator==(const MonomialIdeal& other) const {
    return nvars_ == other.nvars_ && generators_ == other.generators_;
  }

  /// Componentwise maximum over all generator coordinates; the box bound
  /// used by the polyhedral enumerations. Zero vector for the zero ideal.
  std::vector<Integer> coordinate_maxima() const {
    std::vector<Integer> m(nvars_, Integer(0));
    for (const auto& g : generators_)
      for (std::size_t j = 0; j < nvars_; ++j)
        if (g[j] > m[j]) m[j] = g[j];
    return m;
  }

 private:
  std::size_t nvars_ = 0;
  std::vector<ExponentVector> generators_;
};

/// Canonical staircase form of an arbitrary generating set.
inline MonomialIdeal minimalize(std::size_t nvars, std::vector<ExponentVector> gens) {
  return MonomialIdeal(nvars, std::move(gens));
}

inline bool contains_monomial(const MonomialIdeal& ideal, const ExponentVector& alpha) {
  return ideal.contains(alpha);
}

/// m = (x_1, ..., x_n), the homogeneous maximal ideal.
struct MaximalIdeal {
  std::size_t nvars;
  MonomialIdeal ideal() const {
    std::vector<ExponentVector> gens;
    gens.reserve(nvars);
    for (std::size_t j = 0; j < nvars; ++j) gens.push_back(unit_vector(nvars, j));
    return MonomialIdeal(nvars, std::move(gens));
  }
};

inline MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.nvars() != b.nvars()) throw std::invalid_argument("dimension mismatch");
  std::vector<ExponentVector> gens;
  gens.reserve(a.generator_count() * b.generator_count());
  for (const auto& g : a.generators())
    for (const auto& h : b.generators()) gens.push_back(g + h);
  return MonomialIdeal(a.nvars(), std::move(gens));
}

inline MonomialIdeal power(const MonomialIdeal& ideal, unsigned long k) {
  if (k == 0) throw std::invalid_argument("power requires k >= 1");
  MonomialIdeal acc = ideal;
  for (unsigned long i = 1; i < k; ++i) acc = product(acc, ideal);
  return acc;
}

/// I^[q]: scale every generator by q. Callers in characteristic p are
/// responsible for q being a power of p.
inline MonomialIdeal bracket_power(const MonomialIdeal& ideal, const Integer& q) {
  if (q < 1) throw std::invalid_argument("bracket power requires q >= 1");
  std::vector<ExponentVector> gens;
  gens.reserve(ideal.generator_count());
  for (const auto& g : ideal.generators()) gens.push_back(g.scaled(q));
  return MonomialIdeal(ideal.nvars(), std::move(gens));
}

inline MonomialIdeal m_times(const MonomialIdeal& ideal) {
  return product(ideal, MaximalIdeal{ideal.nvars()}.ideal());
}

/// Intersection of monomial ideals: generated by the componentwise maxima
/// of generator pairs.
inline MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.nvars() != b.nvars()) throw std::invalid_argument("dimension mismatch");
  std::vector<ExponentVector> gens;
  gens.reserve(a.generator_count() * b.generator_count());
  for (const auto& g : a.generators())
    for (const auto& h : b.generators()) {
      std::vector<Integer> lcm(a.nvars());
      for (std::size_t j = 0; j < a.nvars(); ++j) lcm[j] = std::max(g[j], h[j]);
      gens.push_back(ExponentVector(std::move(lcm)));
    }
  return MonomialIdeal(a.nvars(), std::move(gens));
}

namespace detail {

// Backtracking search for nonnegative integers p_1..p_r with sum = k and
// sum p_i * beta_i <= alpha (componentwise); `strict` additionally requires
// the inequality to be strict in some coordinate. Prunes on remaining total
// degree and per-coordinate budget.
inline bool power_combination_exists(const ExponentVector& alpha, const MonomialIdeal& ideal,
                                     unsigned long k, bool strict) {
  const std::size_t n = ideal.nvars();
  const auto& gens = ideal.generators();
  const std::size_t r = gens.size();
  if (r == 0) return false;

  std::vector<Integer> degrees(r);
  for (std::size_t i = 0; i < r; ++i) degrees[i] = gens[i].degree();
  // min degree among generators i..r-1, for the degree prune
  std::vector<Integer> min_deg_suffix(r);
  for (std::size_t i = r; i-- > 0;)
    min_deg_suffix[i] = (i + 1 < r) ? std::min(degrees[i], min_deg_suffix[i + 1]) : degrees[i];

  const Integer alpha_degree = alpha.degree();
  std::vector<Integer> remaining(alpha.coords());

  std::function<bool(std::size_t, unsigned long, const Integer&)> descend =
      [&](std::size_t i, unsigned long budget, const Integer& degree_left) -> bool {
    if (budget == 0) {
      if (!strict) return true;
      // strict: sum p*beta != alpha, i.e. some remaining coordinate positive
      for (const auto& rem : remaining)
        if (rem > 0) return true;
      return false;
    }
    if (i == r) return false;
    if (Integer(budget) * min_deg_suffix[i] > degree_left) return false;

    // largest feasible multiplicity of generator i
    unsigned long cap = budget;
    for (std::size_t j = 0; j < n && cap > 0; ++j)
      if (gens[i][j] > 0) {
        Integer q = remaining[j] / gens[i][j];
        if (q < Integer(cap)) cap = static_cast<unsigned long>(q.get_ui());
      }

    for (unsigned long p = cap + 1; p-- > 0;) {
      for (std::size_t j = 0; j < n; ++j) remaining[j] -= Integer(p) * gens[i][j];
      bool found = descend(i + 1, budget - p, degree_left - Integer(p) * degrees[i]);
      for (std::size_t j = 0; j < n; ++j) remaining[j] += Integer(p) * gens[i][j];
      if (found) return true;
    }
    return false;
  };

  return descend(0, k, alpha_degree);
}

}  // namespace detail

/// Exact test of x^alpha in I^k via bounded integer feasibility.
inline bool power_membership(const ExponentVector& alpha, const MonomialIdeal& ideal,
                             unsigned long k) {
  if (k == 0) throw std::invalid_argument("power_membership requires k >= 1");
  if (alpha.size() != ideal.nvars()) throw std::invalid_argument("dimension mismatch");
  return detail::power_combination_exists(alpha, ideal, k, /*strict=*/false);
}

/// Exact test of x^alpha in m * I^k (membership in I^k with slack somewhere).
inline bool m_power_membership(const ExponentVector& alpha, const MonomialIdeal& ideal,
                               unsigned long k) {
  if (k == 0) throw std::invalid_argument("m_power_membership requires k >= 1");
  if (alpha.size() != ideal.nvars()) throw std::invalid_argument("dimension mismatch");
  return detail::power_combination_exists(alpha, ideal, k, /*strict=*/true);
}

}  // namespace closures

#endif
