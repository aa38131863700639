#include "fracvoigt/gamma.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace fracvoigt::special {

namespace {

bool is_pole(double x) { return x <= 0.0 && x == std::floor(x); }

}  // namespace

LogGamma log_gamma(double x) {
  if (is_pole(x)) {
    return {std::numeric_limits<double>::infinity(), 0};
  }
  int sign = 1;
  const double value = ::lgamma_r(x, &sign);
  return {value, sign};
}

LogGamma log_reciprocal_gamma(double x) {
  const LogGamma g = log_gamma(x);
  if (g.sign == 0) {
    return {-std::numeric_limits<double>::infinity(), 0};
  }
  return {-g.log_abs, g.sign};
}

double reciprocal_gamma(double x) {
  if (is_pole(x)) {
    return 0.0;
  }
  if (x > -170.0 && x < 171.0) {
    return 1.0 / std::tgamma(x);
  }
  const LogGamma g = log_reciprocal_gamma(x);
  return g.sign * std::exp(g.log_abs);
}

}  // namespace fracvoigt::special
