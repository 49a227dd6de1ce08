#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <string>
#include <vector>

#include "../tools/commands.hpp"
#include "closures/instances.hpp"
#include "closures/json_io.hpp"

using namespace closures;
using namespace closures::cli;

namespace {

Request parsed(std::vector<std::string> args) { return parse(args); }

}  // namespace

TEST_CASE("worked command lines") {
  auto integral = execute(parsed({"integral", "--vars", "x,y", "--ideal", "x^2,y^2"}));
  CHECK(integral.exit_code == kOk);
  CHECK(integral.text == "x^2, x*y, y^2");

  auto special = execute(parsed({"special-integral", "--vars", "x,y", "--ideal", "x^2,y^2"}));
  CHECK(special.text == "x^3, x^2*y, x*y^2, y^3");

  auto frobenius = execute(parsed({"frobenius", "--ring", "F2[x,y,z]/(x^3+y^3+z^3)", "--ideal",
                                   "x,y", "--element", "z^2", "--max-e", "3"}));
  CHECK(frobenius.exit_code == kOk);
  CHECK(frobenius.text == "In at e=1");

  auto missing = execute(parsed({"frobenius", "--ring", "F2[x,y,z]/(x^3+y^3+z^3)", "--ideal",
                                 "x,y", "--element", "z", "--max-e", "2"}));
  CHECK(missing.exit_code == kConditionFails);
  CHECK(missing.text == "NotIn up to e=2");

  auto decomposition = execute(parsed({"decomposition", "--vars", "x,y", "--ideal", "x^2,y^2"}));
  CHECK(decomposition.exit_code == kConditionFails);
  CHECK(decomposition.text == "fails (witness: x*y)");
  CHECK(execute(parsed({"decomposition", "--vars", "x,y", "--ideal", "x^2,y^3"})).exit_code == kOk);
}

TEST_CASE("help requests carry their text and exit cleanly") {
  CHECK_THROWS_AS(parsed({"--help"}), help_requested);
  CHECK_THROWS_AS(parsed({"integral", "--help"}), help_requested);
  try {
    parsed({"frobenius", "--help"});
  } catch (const help_requested& e) {
    CHECK(std::string(e.what()).find("--max-e") != std::string::npos);
  }
}

TEST_CASE("usage errors") {
  CHECK_THROWS_AS(parsed({"integral", "--ideal", "x^2"}), usage_error);
  CHECK_THROWS_AS(parsed({"unknown-command"}), usage_error);
  CHECK_THROWS_AS(parsed({"integral", "--vars", "x,y"}), usage_error);  // missing --ideal
  CHECK_THROWS_AS(parsed({"frobenius", "--vars", "x,y", "--ideal", "x", "--element", "x"}),
                  usage_error);
  CHECK_THROWS_AS(parsed({"axioms", "--vars", "x,y"}), usage_error);
  CHECK_THROWS_AS(parsed({"integral", "--vars", "x,y", "--ideal", "q^2"}), parse_error);
}

TEST_CASE("request text canonicalizes") {
  auto request = parsed({"integral", "--vars", "x,y", "--ideal", "y^2,  x^2 , x^3"});
  CHECK(request.ideal == "x^2, y^2");
  auto ring_request = parsed({"frobenius", "--ring", "F2[x,y]", "--ideal", "x+x, y , x",
                              "--element", "y+x+y"});
  // x+x collapses to the zero polynomial over F2 and is kept verbatim; the
  // membership routines themselves ignore zero generators
  CHECK(ring_request.ideal == "0, y, x");
  CHECK(ring_request.element == "x");
}

TEST_CASE("printer and parser round-trip") {
  std::mt19937_64 rng(137);
  std::vector<std::string> monomial_commands = {"integral",   "special-integral", "low-points",
                                                "decomposition", "reductions",    "spread",
                                                "bs-check",   "evolution",        "oracle-check"};
  for (int round = 0; round < 120; ++round) {
    Request request;
    std::size_t pick = draw(rng, monomial_commands.size() + 3);
    if (pick < monomial_commands.size()) {
      request.command = monomial_commands[pick];
      std::size_t nvars = 1 + draw(rng, 3);
      request.vars = default_variable_names(nvars);
      auto ideal = random_monomial_ideal(rng, nvars, 5, 4);
      request.ideal = format_ideal(ideal, request.vars);
      if (request.command == "bs-check") request.w = draw(rng, 3);
      if (request.command == "evolution" && draw(rng, 2)) request.n_max = 8 + draw(rng, 20);
      if (request.command == "oracle-check" && draw(rng, 2)) {
        request.q_max = 8 + draw(rng, 20);
        request.box = static_cast<long>(1 + draw(rng, 5));
      }
      if (draw(rng, 3) == 0) request.threads = 1 + static_cast<unsigned>(draw(rng, 3));
    } else if (pick == monomial_commands.size()) {
      request.command = "axioms";
      request.count = 5 + draw(rng, 40);
      request.samples = 50 + draw(rng, 200);
      request.seed = rng();
    } else {
      request.command = draw(rng, 2) ? "frobenius" : "f-spread";
      RingSpec spec;
      spec.p = 2;
      spec.variables = {"x", "y"};
      request.ring = spec;
      std::mt19937_64 poly_rng(rng());
      auto f = random_polynomial(poly_rng, 2, 2, 3, 3);
      while (f.is_zero()) f = random_polynomial(poly_rng, 2, 2, 3, 3);
      request.ideal = format_polynomial(f, spec.variables);
      if (request.command == "frobenius") {
        auto z = random_polynomial(poly_rng, 2, 2, 3, 3);
        request.element = format_polynomial(z, spec.variables);
        if (request.element == "0") request.element = "x";
      }
      if (draw(rng, 2)) request.e_max = 1 + draw(rng, 8);
    }
    if (draw(rng, 2)) request.json = true;

    auto reparsed = parse(print(request));
    CHECK(reparsed == request);
  }
}

TEST_CASE("json envelopes carry the schema version") {
  auto request = parsed({"integral", "--vars", "x,y", "--ideal", "x^2,y^2", "--json"});
  auto response = execute(request);
  auto body = nlohmann::json::parse(render(response, request));
  CHECK(body["schema_version"] == 1);
  CHECK(body["command"] == "integral");
  CHECK(body["text"] == "x^2, x*y, y^2");

  auto frobenius = parsed({"special-frobenius", "--ring", "F2[x,y,z]/(x^3+y^3+z^3)", "--ideal",
                           "x,y", "--element", "z^2", "--json"});
  auto verdict = nlohmann::json::parse(render(execute(frobenius), frobenius));
  CHECK(verdict["verdict"] == "In");
  CHECK(verdict["e"] == 1);
  CHECK(verdict["kind"] == "SpecialPart");
}

TEST_CASE("certificates serialize as exact rational strings") {
  auto I = MonomialIdeal(2, {{2, 0}, {0, 2}});
  auto result = contains_integral(I, {1, 1});
  REQUIRE(result.in());
  auto j = to_json(*result.certificate);
  CHECK(j["coefficients"] == nlohmann::json::array({"1/2", "1/2"}));
  auto back = certificate_from_json(j);
  CHECK(verify_certificate(I, {1, 1}, back));

  auto strict = contains_special_integral(I, {2, 1});
  auto js = to_json(*strict.certificate);
  CHECK(js.contains("strict_coordinate"));
  CHECK(verify_certificate(I, {2, 1}, certificate_from_json(js)));
}

TEST_CASE("oracle-check reports agreement on an m-primary instance") {
  auto request = parsed({"oracle-check", "--vars", "x,y", "--ideal", "x^2,y^2", "--box", "4"});
  auto response = execute(request);
  CHECK(response.exit_code == kOk);
  CHECK(response.payload["enumeration"]["disagreements"] == 0);
  CHECK(response.payload["power_search"]["contradictions"].empty());
}
