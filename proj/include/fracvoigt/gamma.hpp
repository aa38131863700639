#pragma once

namespace fracvoigt::special {

// 1/Gamma(x) for any real x; zero at the poles x = 0, -1, -2, ...
double reciprocal_gamma(double x);

// log|Gamma(x)| and the sign of Gamma(x). At the poles the log is +inf and
// the sign is 0.
struct LogGamma {
  double log_abs;
  int sign;
};
LogGamma log_gamma(double x);

// log|1/Gamma(x)| and its sign, with sign 0 at the poles.  Valid for
// arguments far below the overflow range of tgamma (reflection formula).
LogGamma log_reciprocal_gamma(double x);

}  // namespace fracvoigt::special
