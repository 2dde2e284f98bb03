// Walks through the three worked examples: a line arrangement, an lcm-lattice,
// and the Hibi ideal of the divisors of 12.

#include <iostream>

#include "posets/posets.hpp"

int main() {
  using namespace posets;
  auto h = [](int a, int b, int c) { return Hyperplane{{Rational(a), Rational(b)}, Rational(c)}; };
  const Arrangement a(2, {h(1, 1, 0), h(1, 0, 0), h(1, -1, 0), h(0, 1, 1)});
  std::cout << "regions " << real_regions(a) << ", bounded " << bounded_regions(a) << ", betti";
  for (auto b : complement_betti(a)) std::cout << ' ' << b;
  std::cout << '\n';

  const MonomialIdeal m({"a", "b", "c", "d"}, {Monomial{{3, 2, 1, 0}}, Monomial{{3, 2, 0, 1}},
                                               Monomial{{2, 0, 1, 1}}, Monomial{{1, 1, 2, 1}},
                                               Monomial{{0, 2, 2, 1}}});
  const auto lattice = lcm_lattice(m);
  std::cout << "lcm-lattice " << lattice.poset.size() << " elements, top " << lattice.top << '\n';
  const auto interval = order_complex(open_interval(lattice.poset, "1", "a^3*b^2*c*d"));
  std::cout << "dim H~0 of (1, a^3*b^2*c*d): " << reduced_betti(interval, 0) << '\n';

  const Poset p = divisor_poset(12);
  std::cout << "Hibi betti";
  for (auto b : hibi_betti(cover_statistics(distributive_lattice(p)))) std::cout << ' ' << b;
  std::cout << ", dilworth " << dilworth_number(p) << '\n';
}
