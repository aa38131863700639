#include "fracvoigt/weights.hpp"

#include <cmath>

namespace fracvoigt::fracops {

namespace {

constexpr double kSeriesThreshold = 16.0;

}  // namespace

double power_second_difference(double m, double p) {
  if (m < kSeriesThreshold) {
    const long double lm = m;
    const long double lp = p;
    return static_cast<double>(std::pow(lm + 1.0L, lp) - 2.0L * std::pow(lm, lp) +
                               std::pow(lm - 1.0L, lp));
  }
  // m^p * 2 * sum_{k even >= 2} C(p, k) m^-k
  const double u = 1.0 / m;
  double binom = p;  // C(p, 1)
  double u_pow = u;
  double sum = 0.0;
  for (int k = 2; k < 200; ++k) {
    binom *= (p - (k - 1)) / k;
    u_pow *= u;
    if (k % 2 == 1) {
      continue;
    }
    const double term = binom * u_pow;
    sum += term;
    if (std::abs(term) <= 1e-18 * std::abs(sum)) {
      break;
    }
  }
  return 2.0 * std::pow(m, p) * sum;
}

double first_node_coefficient(double j, double g) {
  if (j < kSeriesThreshold) {
    const long double lj = j;
    const long double lg = g;
    return static_cast<double>(std::pow(lj - 1.0L, lg + 1.0L) - (lj - 1.0L - lg) * std::pow(lj, lg));
  }
  // j^g [g u + (1-u) sum_{k>=2} C(g,k) (-1)^k u^(k-1)],  u = 1/j
  const double u = 1.0 / j;
  double binom = g;
  double u_pow = 1.0;
  double sum = 0.0;
  for (int k = 2; k < 200; ++k) {
    binom *= (g - (k - 1)) / k;
    u_pow *= u;
    const double term = ((k % 2 == 0) ? binom : -binom) * u_pow;
    sum += term;
    if (std::abs(term) <= 1e-18 * std::abs(sum)) {
      break;
    }
  }
  return std::pow(j, g) * (g * u + (1.0 - u) * sum);
}

ConvolutionWeights power_kernel_weights(int n, double h, double g, double scale) {
  ConvolutionWeights w;
  w.first.assign(static_cast<std::size_t>(n) + 1, 0.0);
  w.interior.assign(static_cast<std::size_t>(n) + 1, 0.0);
  const double base = scale * std::pow(h, g) / (g * (g + 1.0));
  for (int j = 1; j <= n; ++j) {
    w.first[static_cast<std::size_t>(j)] = base * first_node_coefficient(j, g);
  }
  for (int m = 1; m < n; ++m) {
    w.interior[static_cast<std::size_t>(m)] = base * power_second_difference(m, g + 1.0);
  }
  w.diagonal = base;
  return w;
}

void add_power_kernel_weights(ConvolutionWeights& w, double h, double g, double scale,
                              const std::vector<double>& table) {
  const int n = w.n();
  const double base = scale * std::pow(h, g) / (g * (g + 1.0));
  for (int j = 1; j <= n; ++j) {
    const auto js = static_cast<std::size_t>(j);
    w.first[js] += base * first_node_coefficient(j, g) * table[js];
  }
  for (int m = 1; m < n; ++m) {
    const auto ms = static_cast<std::size_t>(m);
    w.interior[ms] += base * power_second_difference(m, g + 1.0) * table[ms];
  }
  w.diagonal += base * table[0];
}

}  // namespace fracvoigt::fracops
