// Builds the genus-four lattice U(3), embeds it into the K3 lattice,
// and looks at the complement and a mu_3 action on it.

#include <iostream>

#include "occult/occult.hpp"

using namespace occult;

int main() {
  Lattice k3 = k3_lattice();
  Lattice l4 = parse_lattice_expression("U(3)");
  std::cout << "L_K3: signature " << signature(k3).str() << ", det " << determinant(k3) << '\n';

  auto e = find_primitive_embedding(l4, k3, SearchBox(3));
  if (!e) {
    std::cout << "no embedding in the box\n";
    return 1;
  }
  Lattice perp = *orthogonal_complement(*e).lattice;
  std::cout << "U(3)^perp: rank " << perp.rank() << ", signature " << signature(perp).str() << ", disc "
            << discriminant_group(perp).str() << '\n';
  std::cout << "matches U(3)+U+E8(-1)^2: " << std::boolalpha
            << invariants_match(perp, parse_lattice_expression("U(3)+U+E8(-1)^2")) << '\n';

  Lattice e8 = make_catalog(CatalogName::E8);
  Isometry g = power(coxeter_element(e8), 10);
  std::cout << "E8 Coxeter element^10: order " << *order_of(g) << ", profile " << cyclotomic_profile(g).str()
            << '\n';

  DValue d = d_value(l4, SearchBox(6));
  std::cout << "d(U(3)) = " << d.gcd << (d.exact() ? " (exact)" : "") << '\n';
}
