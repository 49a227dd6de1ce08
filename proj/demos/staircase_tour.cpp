// A short tour of the library API: staircase arithmetic, Newton-polyhedron
// memberships with certificates, the special part, and a Frobenius closure
// computation in a hypersurface ring.
#include <iostream>

#include "closures/closures.hpp"

using namespace closures;

int main() {
  const auto names = default_variable_names(2);

  MonomialIdeal I(2, {{3, 0}, {1, 1}, {0, 2}});
  std::cout << "I          = " << format_ideal(I, names) << "\n";
  std::cout << "I^2        = " << format_ideal(power(I, 2), names) << "\n";
  std::cout << "m I        = " << format_ideal(m_times(I), names) << "\n";

  auto closure = integral_closure(I);
  auto special = special_integral_closure(I);
  std::cout << "closure    = " << format_ideal(closure, names) << "\n";
  std::cout << "special    = " << format_ideal(special, names) << "\n";

  ExponentVector alpha{2, 1};
  auto membership = contains_integral(I, alpha);
  std::cout << format_monomial(alpha, names) << " in closure: "
            << (membership.in() ? "yes" : "no");
  if (membership.certificate) {
    std::cout << "  certificate = " << to_json(*membership.certificate).dump();
  }
  std::cout << "\n";

  auto report = decomposition_holds(I);
  std::cout << "closure = I + special: " << (report.holds ? "yes" : "no");
  if (report.witness) std::cout << "  (witness " << format_monomial(*report.witness, names) << ")";
  std::cout << "\n";

  for (const auto& facet : staircase_valuations_2d(I))
    std::cout << "facet normal (" << facet.normal_x.get_str() << "," << facet.normal_y.get_str()
              << ") with value " << facet.value.get_str() << "\n";

  QuotientRing ring = parse_ring("F2[x,y,z]/(x^3+y^3+z^3)").ring();
  auto x = parse_polynomial("x", 2, ring.variables());
  auto y = parse_polynomial("y", 2, ring.variables());
  auto z2 = parse_polynomial("z^2", 2, ring.variables());
  auto verdict = frobenius_member(z2, {x, y}, ring, 3);
  std::cout << "z^2 in (x,y)^F over " << parse_ring("F2[x,y,z]/(x^3+y^3+z^3)").text() << ": "
            << to_json(verdict).dump() << "\n";

  auto split = special_decompose(z2, {x, y}, ring, 3);
  std::cout << "z^2 = (" << format_polynomial(split.ideal_part, ring.variables()) << ") + ("
            << format_polynomial(split.special_part, ring.variables()) << ") at e=" << split.e
            << "\n";
  return 0;
}
