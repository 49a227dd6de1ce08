// Acceptance suite: one criterion per check, one pass/fail line each, all
// tolerances exact. Returns nonzero if any criterion fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "closures/closures.hpp"

using namespace closures;

namespace {

struct Criterion {
  std::string description;
  std::function<bool(std::string&)> check;  // fills a detail string on failure
};

MonomialIdeal ideal2(std::vector<ExponentVector> gens) { return MonomialIdeal(2, std::move(gens)); }

bool worked_example(std::string& detail) {
  auto I = ideal2({{2, 0}, {0, 2}});
  if (!(integral_closure(I) == ideal2({{2, 0}, {1, 1}, {0, 2}}))) {
    detail = "closure mismatch";
    return false;
  }
  if (!(special_integral_closure(I) == m_times(I))) {
    detail = "special part mismatch";
    return false;
  }
  auto report = decomposition_holds(I);
  if (report.holds || !report.witness || !(*report.witness == ExponentVector{1, 1})) {
    detail = "decomposition verdict mismatch";
    return false;
  }
  return true;
}

bool gcd_criterion(std::string& detail) {
  for (long a = 1; a <= 6; ++a)
    for (long b = 1; b <= 6; ++b) {
      bool holds = decomposition_holds(ideal2({{a, 0}, {0, b}})).holds;
      bool coprime = std::gcd(a, b) == 1;
      if (holds != coprime) {
        detail = "mismatch at a=" + std::to_string(a) + " b=" + std::to_string(b);
        return false;
      }
    }
  return true;
}

std::vector<MonomialIdeal> shared_instances() { return random_instances(20240817, 100, 3, 5, 4); }

bool disjoint_union(std::string& detail) {
  for (const auto& ideal : shared_instances()) {
    auto closure = integral_closure(ideal);
    auto special = special_integral_closure(ideal);
    auto low = low_points(ideal);
    auto bounds = ideal.coordinate_maxima();
    for (auto& b : bounds) b += 1;
    bool ok = true;
    detail::scan_box(
        bounds,
        [&](const ExponentVector& alpha) {
          bool in_closure = closure.contains(alpha);
          bool in_special = special.contains(alpha);
          bool in_low = std::find(low.begin(), low.end(), alpha) != low.end();
          if (in_closure != (in_special || in_low) || (in_special && in_low)) ok = false;
          return false;
        },
        1);
    if (!ok) {
      detail = "partition failed on " + format_ideal(ideal, default_variable_names(ideal.nvars()));
      return false;
    }
  }
  return true;
}

bool special_axioms(std::string& detail) {
  auto instances = shared_instances();
  auto report = check_special_axioms(integral_closure_operation(), instances, 500, 20240817);
  if (!report.all_passed()) {
    for (const auto& check : report.checks)
      if (!check.passed) detail += check.axiom + (check.witness ? " @ " + *check.witness : "") + "; ";
    return false;
  }
  for (const auto& ideal : instances) {
    Integer lowest = ideal.generators()[0].degree();
    for (const auto& g : ideal.generators())
      if (g.degree() < lowest) lowest = g.degree();
    auto special = special_integral_closure(ideal);
    for (const auto& g : special.generators())
      if (!(g.degree() > lowest)) {
        detail = "degree lemma failed on " +
                 format_ideal(ideal, default_variable_names(ideal.nvars()));
        return false;
      }
  }
  return true;
}

bool oracle_equivalence(std::string& detail) {
  // every proper nonzero minimal staircase in 2 variables with <= 3
  // generators and exponents <= 4, scanned over [0, max+1]^2
  std::vector<ExponentVector> points;
  for (long a = 0; a <= 4; ++a)
    for (long b = 0; b <= 4; ++b) points.push_back({a, b});

  std::vector<MonomialIdeal> ideals;
  auto keep = [&](MonomialIdeal candidate, std::size_t expected) {
    if (!candidate.is_zero() && candidate.is_proper() &&
        candidate.generator_count() == expected)
      ideals.push_back(std::move(candidate));
  };
  for (std::size_t i = 0; i < points.size(); ++i) {
    keep(MonomialIdeal(2, {points[i]}), 1);
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      keep(MonomialIdeal(2, {points[i], points[j]}), 2);
      for (std::size_t k = j + 1; k < points.size(); ++k)
        keep(MonomialIdeal(2, {points[i], points[j], points[k]}), 3);
    }
  }

  std::size_t scanned = 0;
  for (const auto& ideal : ideals) {
    auto bounds = ideal.coordinate_maxima();
    for (auto& b : bounds) b += 1;
    bool ok = true;
    detail::scan_box(
        bounds,
        [&](const ExponentVector& alpha) {
          ++scanned;
          if (contains_integral(ideal, alpha).in() !=
              enumerate_integral(ideal, alpha, 24).has_value())
            ok = false;
          if (contains_special_integral(ideal, alpha).in() !=
              enumerate_special(ideal, alpha, 24).has_value())
            ok = false;
          return false;
        },
        1);
    if (!ok) {
      detail = "disagreement on " + format_ideal(ideal, default_variable_names(2));
      return false;
    }
  }
  detail = std::to_string(ideals.size()) + " ideals, " + std::to_string(scanned) + " points";
  return true;
}

bool m_primary_equivalence(std::string& detail) {
  std::vector<MonomialIdeal> ideals = {ideal2({{2, 0}, {0, 2}}), ideal2({{3, 0}, {0, 2}}),
                                       power(ideal2({{1, 0}, {0, 1}}), 2)};
  for (const auto& ideal : ideals) {
    auto report = reesvalsp_equivalence_check(ideal, 5, 24);
    if (!report.ok()) {
      detail = "hard contradiction on " + format_ideal(ideal, default_variable_names(2));
      return false;
    }
  }
  return true;
}

bool frobenius_certificate(std::string& detail) {
  auto ring = parse_ring("F2[x,y,z]/(x^3+y^3+z^3)").ring();
  auto names = ring.variables();
  auto x = parse_polynomial("x", 2, names);
  auto y = parse_polynomial("y", 2, names);
  auto z2 = parse_polynomial("z^2", 2, names);
  std::vector<PolyFp> ideal = {x, y};

  auto closure = frobenius_member(z2, ideal, ring, 3);
  if (!closure.in() || closure.witness->e != 1) {
    detail = "frobenius_member != In(e=1)";
    return false;
  }
  auto special = special_frobenius_member(z2, ideal, ring, 3);
  if (!special.in() || special.witness->e != 1) {
    detail = "special_frobenius_member != In(e=1)";
    return false;
  }
  if (ideal_membership(z2, ideal, ring)) {
    detail = "z^2 wrongly in (x,y)";
    return false;
  }
  auto split = special_decompose(z2, ideal, ring, 3);
  if (!split.ideal_part.is_zero() || !(split.special_part == z2) || split.e != 1) {
    detail = "decomposition is not z^2 = 0 + z^2";
    return false;
  }
  return true;
}

bool f_spread_constant(std::string& detail) {
  QuotientRing plain(2, {"x", "y"});
  auto x = parse_polynomial("x", 2, plain.variables());
  auto y = parse_polynomial("y", 2, plain.variables());
  auto table = f_spread({x, y}, plain, 5);
  if (table.mu != std::vector<std::size_t>(6, 2) || !table.stable) {
    detail = "(x,y) spread table wrong";
    return false;
  }
  auto square = f_spread({parse_polynomial("x^2", 2, plain.variables()),
                          parse_polynomial("x*y", 2, plain.variables()),
                          parse_polynomial("y^2", 2, plain.variables())},
                         plain, 5);
  if (square.mu != std::vector<std::size_t>(6, 3) || !square.stable) {
    detail = "(x^2,xy,y^2) spread table wrong";
    return false;
  }
  return true;
}

bool briancon_skoda(std::string& detail) {
  for (const auto& ideal :
       {ideal2({{1, 0}, {0, 1}}), ideal2({{2, 0}, {0, 2}}), ideal2({{2, 0}, {1, 1}})})
    for (unsigned long w : {0ul, 1ul, 2ul}) {
      auto report = briancon_skoda_check(ideal, w);
      if (!report.ok()) {
        detail = "violation for " + format_ideal(ideal, default_variable_names(2)) +
                 " at w=" + std::to_string(w);
        return false;
      }
    }
  return true;
}

bool property_suites(std::string& detail) {
  std::mt19937_64 rng(0xC105);

  // freshman's dream, 1000 cases
  for (int round = 0; round < 1000; ++round) {
    unsigned long p = (round % 3 == 0) ? 2 : (round % 3 == 1 ? 3 : 5);
    auto f = random_polynomial(rng, p, 3, 3, 4);
    auto g = random_polynomial(rng, p, 3, 3, 4);
    unsigned long q = round % 2 ? p : p * p;
    if (!(frobenius_element_power(f + g, q) ==
          frobenius_element_power(f, q) + frobenius_element_power(g, q))) {
      detail = "freshman's dream failed";
      return false;
    }
  }

  // Buchberger S-polynomial reduction, 1000 cases
  for (int round = 0; round < 1000; ++round) {
    unsigned long p = round % 2 ? 2 : 3;
    std::vector<PolyFp> gens = {random_polynomial(rng, p, 2, 3, 3),
                                random_polynomial(rng, p, 2, 3, 3)};
    auto gb = buchberger(gens);
    for (const auto& f : gens)
      if (!normal_form(f, gb).is_zero()) {
        detail = "generator does not reduce to zero";
        return false;
      }
    for (std::size_t i = 0; i < gb.basis.size(); ++i)
      for (std::size_t j = i + 1; j < gb.basis.size(); ++j) {
        auto lcm = detail::exponent_lcm(gb.basis[i].leading_monomial(),
                                        gb.basis[j].leading_monomial());
        PolyFp s =
            gb.basis[i].times_term(detail::exponent_quotient(lcm, gb.basis[i].leading_monomial()), 1) -
            gb.basis[j].times_term(detail::exponent_quotient(lcm, gb.basis[j].leading_monomial()), 1);
        if (!normal_form(s, gb).is_zero()) {
          detail = "S-polynomial does not reduce to zero";
          return false;
        }
      }
  }

  // staircase idempotence and order independence, 1000 cases
  for (int round = 0; round < 1000; ++round) {
    std::size_t nvars = 1 + draw(rng, 3);
    std::vector<ExponentVector> gens;
    std::size_t count = 1 + draw(rng, 6);
    for (std::size_t i = 0; i < count; ++i) {
      std::vector<Integer> coords(nvars);
      for (auto& c : coords) c = static_cast<long>(draw(rng, 7));
      gens.emplace_back(std::move(coords));
    }
    MonomialIdeal once(nvars, gens);
    if (!(MonomialIdeal(nvars, once.generators()) == once)) {
      detail = "minimalize not idempotent";
      return false;
    }
    std::shuffle(gens.begin(), gens.end(), rng);
    if (!(MonomialIdeal(nvars, gens) == once)) {
      detail = "minimalize depends on order";
      return false;
    }
  }

  // witness monotonicity, 1000 cases
  auto ring = parse_ring("F2[x,y,z]/(x^3+y^3+z^3)").ring();
  auto x = parse_polynomial("x", 2, ring.variables());
  auto y = parse_polynomial("y", 2, ring.variables());
  std::vector<PolyFp> ideal = {x, y};
  int replayed = 0;
  for (int round = 0; round < 1000; ++round) {
    PolyFp z = random_polynomial(rng, 2, 3, 2, 3);
    auto verdict = frobenius_member(z, ideal, ring, 1);
    if (!verdict.in()) continue;
    Integer q = integer_power(2, verdict.witness->e + 1);
    std::vector<PolyFp> brackets;
    for (const auto& g : ideal) brackets.push_back(frobenius_element_power(g, q));
    if (!ideal_membership(frobenius_element_power(z, q), brackets, ring)) {
      detail = "witness did not replay at e+1";
      return false;
    }
    ++replayed;
  }
  if (replayed < 100) {
    detail = "too few membership witnesses sampled: " + std::to_string(replayed);
    return false;
  }
  return true;
}

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {"worked example: closure, special part and failing decomposition of (x^2, y^2)",
       worked_example},
      {"gcd criterion for (x^a, y^b), 1 <= a,b <= 6", gcd_criterion},
      {"disjoint union: closure = special part + low points on 100 random ideals",
       disjoint_union},
      {"special-part axioms 1-4 and the degree lemma on 100 random ideals", special_axioms},
      {"oracle equivalence: LP vs. enumeration on all small 2-variable staircases",
       oracle_equivalence},
      {"m-primary equivalence of special membership and the n -> I^(n+1) search",
       m_primary_equivalence},
      {"Frobenius certificate for z^2 over F2[x,y,z]/(x^3+y^3+z^3)", frobenius_certificate},
      {"F-spread constant at 2 and 3 for (x,y) and (x^2,xy,y^2)", f_spread_constant},
      {"Briancon-Skoda containments for three ideals and w in {0,1,2}", briancon_skoda},
      {"property suites at 1000 cases each (fixed seed)", property_suites},
  };

  bool all_passed = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    std::string detail;
    auto start = std::chrono::steady_clock::now();
    bool passed = false;
    try {
      passed = criteria[i].check(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%2zu] %s  %s (%.2f s)%s%s\n", i + 1, passed ? "PASS" : "FAIL",
                criteria[i].description.c_str(), seconds, detail.empty() ? "" : " -- ",
                detail.c_str());
    all_passed = all_passed && passed;
  }
  return all_passed ? 0 : 1;
}
