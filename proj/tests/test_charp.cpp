#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "closures/grammar.hpp"
#include "closures/groebner.hpp"
#include "closures/instances.hpp"
#include "closures/polyfp.hpp"

using namespace closures;

namespace {

const std::vector<std::string> xyz = {"x", "y", "z"};
const std::vector<std::string> xy = {"x", "y"};

PolyFp poly(const std::string& text, unsigned long p, const std::vector<std::string>& names) {
  return parse_polynomial(text, p, names);
}

}  // namespace

TEST_CASE("term order is graded reverse lexicographic") {
  PolyFp f = poly("x + y^2 + x*y + 1", 5, xy);
  std::vector<std::string> in_order;
  for (const auto& [e, c] : f.terms()) in_order.push_back(format_monomial(e, xy));
  CHECK(in_order == std::vector<std::string>{"x*y", "y^2", "x", "1"});
  CHECK(format_polynomial(f, xy) == "x*y + y^2 + x + 1");
}

TEST_CASE("arithmetic is exact mod p") {
  PolyFp f = poly("2*x + 3", 5, xy);
  PolyFp g = poly("3*x + 2", 5, xy);
  CHECK(format_polynomial(f + g, xy) == "0");
  CHECK(format_polynomial(f * g, xy) == "x^2 + 3*x + 1");
  CHECK_THROWS_AS(poly("x", 5, xy) + poly("x", 7, xy), std::invalid_argument);
  CHECK_THROWS_AS(PolyFp(4, 2), std::invalid_argument);
}

TEST_CASE("ring axioms hold on random polynomials") {
  std::mt19937_64 rng(53);
  for (unsigned long p : {2ul, 3ul, 5ul}) {
    for (int round = 0; round < 60; ++round) {
      PolyFp f = random_polynomial(rng, p, 3, 3, 4);
      PolyFp g = random_polynomial(rng, p, 3, 3, 4);
      PolyFp h = random_polynomial(rng, p, 3, 3, 4);
      CHECK((f + g) + h == f + (g + h));
      CHECK((f * g) * h == f * (g * h));
      CHECK(f * (g + h) == f * g + f * h);
      CHECK(f.scaled(p).is_zero());  // characteristic p
    }
  }
}

TEST_CASE("frobenius powers act termwise") {
  PolyFp f = poly("y - z", 2, xyz);
  CHECK(frobenius_element_power(f, 2) == poly("y^2 + z^2", 2, xyz));
  CHECK(frobenius_element_power(f, 1) == f);
  CHECK(frobenius_element_power(poly("x + y", 3, xy), 3) == poly("x^3 + y^3", 3, xy));
  CHECK_THROWS_AS(frobenius_element_power(f, 3), std::invalid_argument);
  CHECK_THROWS_AS(frobenius_element_power(f, 0), std::invalid_argument);
}

TEST_CASE("frobenius power equals repeated multiplication") {
  std::mt19937_64 rng(59);
  for (unsigned long p : {2ul, 3ul}) {
    for (int round = 0; round < 30; ++round) {
      PolyFp f = random_polynomial(rng, p, 2, 2, 3);
      CHECK(frobenius_element_power(f, p) == f.pow(p));
      CHECK(frobenius_element_power(f, p * p) == f.pow(p * p));
    }
  }
}

TEST_CASE("freshman's dream") {
  std::mt19937_64 rng(61);
  for (unsigned long p : {2ul, 3ul, 5ul}) {
    for (int round = 0; round < 40; ++round) {
      PolyFp f = random_polynomial(rng, p, 3, 3, 4);
      PolyFp g = random_polynomial(rng, p, 3, 3, 4);
      for (unsigned long q : {p, p * p})
        CHECK(frobenius_element_power(f + g, q) ==
              frobenius_element_power(f, q) + frobenius_element_power(g, q));
    }
  }
}

TEST_CASE("normal form: worked instances") {
  // dropping x-divisible terms
  PolyFp f = poly("x^2*y + x + y^3 + 1", 2, xyz);
  CHECK(normal_form(f, {poly("x", 2, xyz)}) == poly("y^3 + 1", 2, xyz));

  // z^2 against the reduced basis of (x, y, x^3+y^3+z^3)
  auto gb = buchberger({poly("x", 2, xyz), poly("y", 2, xyz), poly("x^3 + y^3 + z^3", 2, xyz)});
  CHECK(normal_form(poly("z^2", 2, xyz), gb) == poly("z^2", 2, xyz));

  // membership of the generator itself
  CHECK(normal_form(poly("x^3 + y^3 + z^3", 2, xyz), gb).is_zero());

  CHECK_THROWS_AS(normal_form(poly("x", 2, xy), {poly("x", 3, xy)}), std::invalid_argument);
}

TEST_CASE("normal form is idempotent") {
  std::mt19937_64 rng(67);
  for (int round = 0; round < 40; ++round) {
    unsigned long p = round % 2 ? 2 : 3;
    PolyFp f = random_polynomial(rng, p, 2, 3, 4);
    std::vector<PolyFp> divisors = {random_polynomial(rng, p, 2, 2, 3),
                                    random_polynomial(rng, p, 2, 2, 3)};
    PolyFp once = normal_form(f, divisors);
    CHECK(normal_form(once, divisors) == once);
  }
}

TEST_CASE("buchberger: worked instances") {
  auto gb = buchberger({poly("x", 2, xyz), poly("y", 2, xyz), poly("x^3 + y^3 + z^3", 2, xyz)});
  REQUIRE(gb.basis.size() == 3);
  CHECK(gb.basis[0] == poly("x", 2, xyz));
  CHECK(gb.basis[1] == poly("y", 2, xyz));
  CHECK(gb.basis[2] == poly("z^3", 2, xyz));

  auto monomials = buchberger({poly("x^2", 2, xy), poly("x*y", 2, xy)});
  REQUIRE(monomials.basis.size() == 2);
  CHECK(monomials.basis[0] == poly("x^2", 2, xy));
  CHECK(monomials.basis[1] == poly("x*y", 2, xy));

  auto linear = buchberger({poly("x + y", 2, xy), poly("y", 2, xy)});
  REQUIRE(linear.basis.size() == 2);
  CHECK(linear.basis[0] == poly("x", 2, xy));
  CHECK(linear.basis[1] == poly("y", 2, xy));
}

TEST_CASE("buchberger output is a reduced basis with zero S-polynomial remainders") {
  std::mt19937_64 rng(71);
  for (int round = 0; round < 25; ++round) {
    unsigned long p = round % 2 ? 2 : 3;
    std::vector<PolyFp> gens;
    std::size_t count = 1 + draw(rng, 3);
    for (std::size_t i = 0; i < count; ++i) gens.push_back(random_polynomial(rng, p, 2, 3, 3));
    auto gb = buchberger(gens);

    for (const auto& f : gens) CHECK(normal_form(f, gb).is_zero());
    for (const auto& g : gb.basis) {
      CHECK(g.leading_coefficient() == 1);
      // no term reducible by the others
      std::vector<PolyFp> others;
      for (const auto& h : gb.basis)
        if (!(h == g)) others.push_back(h);
      CHECK(normal_form(g, others) == g);
    }
    for (std::size_t i = 0; i < gb.basis.size(); ++i)
      for (std::size_t j = i + 1; j < gb.basis.size(); ++j) {
        const auto& f = gb.basis[i];
        const auto& g = gb.basis[j];
        auto lcm = detail::exponent_lcm(f.leading_monomial(), g.leading_monomial());
        PolyFp s = f.times_term(detail::exponent_quotient(lcm, f.leading_monomial()), 1) -
                   g.times_term(detail::exponent_quotient(lcm, g.leading_monomial()), 1);
        CHECK(normal_form(s, gb).is_zero());
      }
  }
}

TEST_CASE("extended basis cofactors replay") {
  std::mt19937_64 rng(73);
  for (int round = 0; round < 20; ++round) {
    unsigned long p = round % 2 ? 2 : 5;
    std::vector<PolyFp> gens;
    std::size_t count = 1 + draw(rng, 3);
    for (std::size_t i = 0; i < count; ++i) gens.push_back(random_polynomial(rng, p, 2, 3, 3));
    auto ext = buchberger_extended(gens);
    REQUIRE(ext.cofactors.size() == ext.basis.basis.size());
    for (std::size_t k = 0; k < ext.basis.basis.size(); ++k) {
      PolyFp combo(p, 2);
      for (std::size_t i = 0; i < gens.size(); ++i)
        combo = combo + ext.cofactors[k][i] * gens[i];
      CHECK(combo == ext.basis.basis[k]);
    }
  }
}

TEST_CASE("quotient ring membership") {
  RingSpec spec = parse_ring("F2[x,y,z]/(x^3+y^3+z^3)");
  QuotientRing ring = spec.ring();
  CHECK(ring.characteristic() == 2);
  CHECK(ring.nvars() == 3);

  CHECK_FALSE(ideal_membership(poly("z^2", 2, xyz), {poly("x", 2, xyz), poly("y", 2, xyz)}, ring));
  CHECK(ideal_membership(poly("z^4", 2, xyz), {poly("x^2", 2, xyz), poly("y^2", 2, xyz)}, ring));
  CHECK(ideal_membership(ring.zero(), {poly("x", 2, xyz)}, ring));
  CHECK(ideal_membership(ring.zero(), {}, ring));

  // relations must avoid constant terms, and the unit ideal is rejected
  CHECK_THROWS_AS(QuotientRing(2, xyz, {poly("x + 1", 2, xyz)}), std::invalid_argument);
}

TEST_CASE("quotient reduction is canonical") {
  QuotientRing ring = parse_ring("F2[x,y,z]/(x^3+y^3+z^3)").ring();
  PolyFp rel = poly("x^3 + y^3 + z^3", 2, xyz);
  std::mt19937_64 rng(79);
  for (int round = 0; round < 20; ++round) {
    PolyFp f = random_polynomial(rng, 2, 3, 4, 4);
    PolyFp shifted = f + rel * random_polynomial(rng, 2, 3, 2, 2);
    CHECK(ring.reduce(f) == ring.reduce(shifted));
  }
}
