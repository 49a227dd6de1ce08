#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "closures/grammar.hpp"
#include "closures/instances.hpp"

using namespace closures;

namespace {
const std::vector<std::string> xy = {"x", "y"};
const std::vector<std::string> xyz = {"x", "y", "z"};
}  // namespace

TEST_CASE("monomial and ideal parsing") {
  CHECK(parse_monomial("x^2*y", xy) == ExponentVector{2, 1});
  CHECK(parse_monomial("x^2 y", xy) == ExponentVector{2, 1});
  CHECK(parse_monomial("x*x*y^3", xy) == ExponentVector{2, 3});
  CHECK(parse_monomial("1", xy) == ExponentVector{0, 0});

  auto ideal = parse_ideal("x^2, y^3", xy);
  CHECK(ideal == MonomialIdeal(2, {{2, 0}, {0, 3}}));
  CHECK(parse_ideal("x^2*y, y^3", xy) == MonomialIdeal(2, {{2, 1}, {0, 3}}));
  CHECK(parse_ideal("", xy).is_zero());

  CHECK_THROWS_AS(parse_monomial("w", xy), parse_error);
  CHECK_THROWS_AS(parse_monomial("x^", xy), parse_error);
  CHECK_THROWS_AS(parse_ideal("x,,y", xy), parse_error);
  CHECK_THROWS_AS(parse_ideal("x, 2y", xy), parse_error);
}

TEST_CASE("parse errors carry positions") {
  try {
    parse_ideal("x^2, q^3", xy);
    FAIL("expected parse_error");
  } catch (const parse_error& e) {
    CHECK(e.position() == 5);
  }
}

TEST_CASE("monomial formatting") {
  CHECK(format_monomial(ExponentVector{2, 1}, xy) == "x^2*y");
  CHECK(format_monomial(ExponentVector{0, 0}, xy) == "1");
  CHECK(format_ideal(MonomialIdeal(2, {{2, 0}, {1, 1}, {0, 2}}), xy) == "x^2, x*y, y^2");
  CHECK(format_ideal(MonomialIdeal(2), xy) == "0");
}

TEST_CASE("ideal text round-trips through the canonical form") {
  std::mt19937_64 rng(127);
  for (int round = 0; round < 50; ++round) {
    std::size_t nvars = 1 + draw(rng, 3);
    auto names = default_variable_names(nvars);
    auto ideal = random_monomial_ideal(rng, nvars, 6, 4);
    CHECK(parse_ideal(format_ideal(ideal, names), names) == ideal);
  }
}

TEST_CASE("polynomial parsing over F_p") {
  auto f = parse_polynomial("x^3 + y^3 + z^3", 2, xyz);
  CHECK(f.term_count() == 3);
  CHECK(f.is_homogeneous());

  CHECK(parse_polynomial("x - y", 3, xy) == parse_polynomial("x + 2*y", 3, xy));
  CHECK(parse_polynomial("5*x", 5, xy).is_zero());
  CHECK(parse_polynomial("2x + 1", 5, xy) == parse_polynomial("2*x + 1", 5, xy));
  CHECK(parse_polynomial("-x", 2, xy) == parse_polynomial("x", 2, xy));
  CHECK(parse_polynomial("7", 5, xy).constant_term() == 2);

  CHECK_THROWS_AS(parse_polynomial("x + ", 2, xy), parse_error);
  CHECK_THROWS_AS(parse_polynomial("x ^ y", 2, xy), parse_error);
}

TEST_CASE("polynomial text round-trips") {
  std::mt19937_64 rng(131);
  for (unsigned long p : {2ul, 3ul, 5ul}) {
    for (int round = 0; round < 30; ++round) {
      auto f = random_polynomial(rng, p, 3, 4, 5);
      CHECK(parse_polynomial(format_polynomial(f, xyz), p, xyz) == f);
    }
  }
}

TEST_CASE("ring specifications") {
  auto spec = parse_ring("F2[x,y,z]/(x^3+y^3+z^3)");
  CHECK(spec.p == 2);
  CHECK(spec.variables == xyz);
  REQUIRE(spec.relation_texts.size() == 1);
  CHECK(spec.text() == "F2[x,y,z]/(x^3 + y^3 + z^3)");
  CHECK(parse_ring(spec.text()) == spec);

  auto plain = parse_ring("F5[u, v]");
  CHECK(plain.p == 5);
  CHECK(plain.variables == std::vector<std::string>{"u", "v"});
  CHECK(plain.relation_texts.empty());
  CHECK(parse_ring(plain.text()) == plain);

  auto ring = spec.ring();
  CHECK(ring.characteristic() == 2);
  CHECK(ring.relations().basis.size() == 1);

  CHECK_THROWS_AS(parse_ring("F4[x]"), parse_error);
  CHECK_THROWS_AS(parse_ring("F2[x,x]"), parse_error);
  CHECK_THROWS_AS(parse_ring("Q[x]"), parse_error);
  CHECK_THROWS_AS(parse_ring("F2[x"), parse_error);
}

TEST_CASE("malformed input never crashes the parsers") {
  std::mt19937_64 rng(163);
  const std::string alphabet = "xyz123^*,+-/()F[] \t";
  for (int round = 0; round < 3000; ++round) {
    std::string text;
    std::size_t len = draw(rng, 14);
    for (std::size_t i = 0; i < len; ++i) text += alphabet[draw(rng, alphabet.size())];
    try {
      parse_ideal(text, xy);
    } catch (const parse_error&) {
    }
    try {
      parse_polynomial(text, 5, xyz);
    } catch (const parse_error&) {
    }
    try {
      parse_ring(text);
    } catch (const parse_error&) {
    }
  }
  CHECK(true);  // reaching here means no crash and no foreign exception
}

TEST_CASE("default variable names") {
  CHECK(default_variable_names(2) == xy);
  CHECK(default_variable_names(3) == xyz);
  CHECK(default_variable_names(4) ==
        std::vector<std::string>{"x1", "x2", "x3", "x4"});
}
