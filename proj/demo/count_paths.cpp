// Minimal library use: the first terms of D^(h,k) by the series route, and a
// spot check against exhaustive generation.
#include <iostream>

#include "valleyforge/valleyforge.hpp"

int main() {
  const valleyforge::ClassParams params(5, 3);
  const auto f = valleyforge::f_series(params, 12);
  for (const auto& c : f.coeffs()) std::cout << c << ' ';
  std::cout << '\n';

  const auto paths = valleyforge::generate(params, 8);
  std::cout << "generated " << paths.size() << " paths of semilength 8, series says " << f[8]
            << '\n';
  return paths.size() == f[8] ? 0 : 1;
}
