// Multivariate polynomials over a prime field F_p, terms kept in graded
// reverse lexicographic order (leading term first).
#ifndef CLOSURES_POLYFP_HPP
#define CLOSURES_POLYFP_HPP

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "closures/monomial_ideal.hpp"
#include "closures/rational.hpp"

namespace closures {

inline bool is_prime(unsigned long p) {
  if (p < 2) return false;
  for (unsigned long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

/// Strict weak order: a before b when a > b in graded reverse lex. Greater
/// total degree wins; on equal degree the monomial whose last nonzero
/// coordinate of the difference is negative is the larger one.
struct GrevlexDescending {
  bool operator()(const ExponentVector& a, const ExponentVector& b) const {
    Integer da = a.degree(), db = b.degree();
    if (da != db) return da > db;
    for (std::size_t j = a.size(); j-- > 0;) {
      if (a[j] == b[j]) continue;
      return a[j] < b[j];
    }
    return false;
  }
};

enum class MonomialOrder { GrevLex };

class PolyFp {
 public:
  using TermMap = std::map<ExponentVector, unsigned long, GrevlexDescending>;

  PolyFp(unsigned long p, std::size_t nvars) : p_(p), nvars_(nvars) {
    if (!is_prime(p)) throw std::invalid_argument("characteristic must be prime");
  }

  static PolyFp zero(unsigned long p, std::size_t nvars) { return PolyFp(p, nvars); }

  static PolyFp constant(unsigned long p, std::size_t nvars, unsigned long c) {
    PolyFp f(p, nvars);
    f.add_term(zero_vector(nvars), c);
    return f;
  }

  static PolyFp variable(unsigned long p, std::size_t nvars, std::size_t j) {
    PolyFp f(p, nvars);
    f.add_term(unit_vector(nvars, j), 1);
    return f;
  }

  static PolyFp monomial(unsigned long p, ExponentVector e, unsigned long c = 1) {
    PolyFp f(p, e.size());
    f.add_term(std::move(e), c);
    return f;
  }

  unsigned long characteristic() const { return p_; }
  std::size_t nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_origin());
  }

  unsigned long constant_term() const {
    auto it = terms_.find(zero_vector(nvars_));
    return it == terms_.end() ? 0 : it->second;
  }

  /// All terms share one total degree (zero counts as homogeneous).
  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    Integer d = terms_.begin()->first.degree();
    for (const auto& [e, c] : terms_)
      if (e.degree() != d) return false;
    return true;
  }

  const ExponentVector& leading_monomial() const {
    if (terms_.empty()) throw std::logic_error("leading term of zero");
    return terms_.begin()->first;
  }

  unsigned long leading_coefficient() const {
    if (terms_.empty()) throw std::logic_error("leading term of zero");
    return terms_.begin()->second;
  }

  void add_term(ExponentVector e, unsigned long c) {
    if (e.size() != nvars_) throw std::invalid_argument("dimension mismatch");
    c %= p_;
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(std::move(e), c);
    if (!inserted) {
      it->second = (it->second + c) % p_;
      if (it->second == 0) terms_.erase(it);
    }
  }

  PolyFp operator+(const PolyFp& other) const {
    check_ring(other);
    PolyFp out = *this;
    for (const auto& [e, c] : other.terms_) out.add_term(e, c);
    return out;
  }

  PolyFp operator-() const {
    PolyFp out(p_, nvars_);
    for (const auto& [e, c] : terms_) out.add_term(e, p_ - c);
    return out;
  }

  PolyFp operator-(const PolyFp& other) const { return *this + (-other); }

  PolyFp operator*(const PolyFp& other) const {
    check_ring(other);
    PolyFp out(p_, nvars_);
    for (const auto& [e1, c1] : terms_)
      for (const auto& [e2, c2] : other.terms_) out.add_term(e1 + e2, mulmod(c1, c2));
    return out;
  }

  PolyFp scaled(unsigned long c) const {
    PolyFp out(p_, nvars_);
    c %= p_;
    for (const auto& [e, k] : terms_) out.add_term(e, mulmod(k, c));
    return out;
  }

  /// c * x^shift * this
  PolyFp times_term(const ExponentVector& shift, unsigned long c) const {
    PolyFp out(p_, nvars_);
    for (const auto& [e, k] : terms_) out.add_term(e + shift, mulmod(k, c));
    return out;
  }

  PolyFp pow(unsigned long e) const {
    PolyFp acc = constant(p_, nvars_, 1);
    PolyFp base = *this;
    while (e > 0) {
      if (e & 1) acc = acc * base;
      base = base * base;
      e >>= 1;
    }
    return acc;
  }

  bool operator==(const PolyFp& other) const {
    return p_ == other.p_ && nvars_ == other.nvars_ && terms_ == other.terms_;
  }

  unsigned long mulmod(unsigned long a, unsigned long b) const {
    return static_cast<unsigned long>((static_cast<unsigned __int128>(a) * b) % p_);
  }

  unsigned long invmod(unsigned long a) const {
    if (a % p_ == 0) throw std::invalid_argument("inverse of zero");
    // Fermat
    unsigned long result = 1, base = a % p_, e = p_ - 2;
    while (e > 0) {
      if (e & 1) result = mulmod(result, base);
      base = mulmod(base, base);
      e >>= 1;
    }
    return result;
  }

  void check_ring(const PolyFp& other) const {
    if (p_ != other.p_) throw std::invalid_argument("characteristic mismatch");
    if (nvars_ != other.nvars_) throw std::invalid_argument("dimension mismatch");
  }

 private:
  unsigned long p_;
  std::size_t nvars_;
  TermMap terms_;
};

/// f^q for q a power of the characteristic, computed termwise: coefficients
/// are fixed by Frobenius on F_p and exponents scale by q.
inline PolyFp frobenius_element_power(const PolyFp& f, const Integer& q) {
  Integer rest = q;
  if (rest < 1) throw std::invalid_argument("q must be a positive power of p");
  while (rest > 1) {
    if (!mpz_divisible_ui_p(rest.get_mpz_t(), f.characteristic()))
      throw std::invalid_argument("q must be a power of the characteristic");
    rest /= static_cast<unsigned long>(f.characteristic());
  }
  PolyFp out(f.characteristic(), f.nvars());
  for (const auto& [e, c] : f.terms()) out.add_term(e.scaled(q), c);
  return out;
}

inline Integer integer_power(unsigned long base, unsigned long e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, e);
  return r;
}

}  // namespace closures

#endif
