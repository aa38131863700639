#pragma once

#include <cmath>
#include <vector>

namespace fracvoigt::testdata {

// Classical RK4 for eta y' + E y = sigma(y), y(0) = 0, on [0, t_end] with
// `steps` steps; returns y at the `samples + 1` equispaced output times.
// `steps` must be a multiple of `samples`.
template <class F>
std::vector<double> classical_voigt_rk4(double eta, double e_mod, F sigma, double t_end, int steps,
                                        int samples) {
  auto rhs = [&](double y) { return (sigma(y) - e_mod * y) / eta; };
  const double h = t_end / steps;
  const int stride = steps / samples;
  std::vector<double> out{0.0};
  double y = 0.0;
  for (int i = 1; i <= steps; ++i) {
    const double k1 = rhs(y);
    const double k2 = rhs(y + 0.5 * h * k1);
    const double k3 = rhs(y + 0.5 * h * k2);
    const double k4 = rhs(y + h * k3);
    y += h / 6.0 * (k1 + 2 * k2 + 2 * k3 + k4);
    if (i % stride == 0) {
      out.push_back(y);
    }
  }
  return out;
}

}  // namespace fracvoigt::testdata
