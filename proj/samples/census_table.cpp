// Prints, for small cubes, the number of intersecting antichains inside the
// standard lower half of E^n next to the number inside E^{n-1}.

#include <iostream>

#include "kcube/kcube.hpp"

int main() {
  std::cout << "k n  lower-half  E^{n-1}\n";
  for (int k = 2; k <= 4; ++k)
    for (int n = 2; n <= 4; ++n) {
      const kcube::CubeParams p(k, n);
      const auto lower = kcube::enumerate_lower_half(kcube::LowerHalfSpec::standard(p));
      const auto cube = kcube::enumerate_cube(kcube::CubeParams(k, n - 1));
      std::cout << k << ' ' << n << "  " << kcube::count_intersecting_antichains(lower) << "  "
                << kcube::count_intersecting_antichains(cube) << '\n';
    }
}
