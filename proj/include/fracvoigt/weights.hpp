#pragma once

#include <vector>

namespace fracvoigt::fracops {

// (m+1)^p - 2 m^p + (m-1)^p for m >= 1, p > 0.  Evaluated through the
// binomial series for large m, where the direct form cancels badly.
double power_second_difference(double m, double p);

// (j-1)^(g+1) - (j-1-g) j^g for j >= 1, g > 0.
double first_node_coefficient(double j, double g);

// Quadrature weights for a discrete Volterra convolution on a uniform grid:
//
//   out_0 = 0,
//   out_j = first[j] f_0 + sum_{k=1}^{j-1} interior[j-k] f_k + diagonal f_j.
//
// interior[0] is unused.  Every weight vector has n + 1 entries.
struct ConvolutionWeights {
  std::vector<double> first;
  std::vector<double> interior;
  double diagonal = 0.0;

  int n() const noexcept { return static_cast<int>(first.size()) - 1; }
};

// Weights that integrate (t_j - s)^(g-1) exactly against the piecewise-linear
// interpolant of f on a grid of n intervals and step h, scaled by `scale`:
//
//   scale * h^g / (g (g+1)) * { first_node_coefficient(j, g),
//                               power_second_difference(j-k, g+1), 1 }.
ConvolutionWeights power_kernel_weights(int n, double h, double g, double scale);

// Accumulates `scale * h^g/(g(g+1)) * coefficient * table[offset]` into w,
// i.e. the power-kernel weights with the regular factor table[j-k]
// interpolated together with f.  table has n + 1 entries.
void add_power_kernel_weights(ConvolutionWeights& w, double h, double g, double scale,
                              const std::vector<double>& table);

}  // namespace fracvoigt::fracops
