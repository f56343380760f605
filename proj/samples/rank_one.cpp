// Rank one end to end: the GK coefficients of A1 against SL2 coset counts, and the
// spherical function of the fundamental coweight at u = 1/3.

#include <iostream>

#include <gksum/formulas.hpp>
#include <gksum/oracles/sl2.hpp>

int main() {
  using namespace gksum;
  const auto a1 = build_root_system('A', 1);

  const auto gk = finite_gk(a1, 4, FormalRing{2});
  for (const auto& [g, c] : gk.terms()) std::cout << "e^-" << g.str() << ": " << c.str() << '\n';

  for (int n = 1; n <= 3; ++n) {
    const auto c = oracles::sl2_gk_coefficient(3, n);
    std::cout << "q = 3, n = " << n << ": " << c.count << " cosets, " << c.normalized << " after q^-n\n";
  }

  const auto s = satake(a1, DominantCoweight({1}), 3, 3, 0);
  for (const auto& [g, c] : s.series.terms()) std::cout << "S(1) at e^-" << g.str() << ": " << c << '\n';
}
