#include "fracvoigt/mittag_leffler.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include "fracvoigt/errors.hpp"
#include "fracvoigt/gamma.hpp"

namespace fracvoigt::special {

namespace {

constexpr double kPi = std::numbers::pi;

// Branch switch points, in terms of r = |z|^(1/alpha) on the negative axis.
// Below kSeriesLimit the series loses at most ~e^r / |E| to cancellation;
// above kAsymptoticLimit the remainder of the algebraic expansion is of
// order exp(-r).
constexpr double kSeriesLimit = 5.0;
constexpr double kAsymptoticLimit = 60.0;

// Relative size of the last retained term.
constexpr double kTermTolerance = 1e-17;

// Quadrature settings for the integral branches.
constexpr double kQuadTolerance = 1e-13;
constexpr unsigned kQuadDepth = 12;

// exp(-chi^(1/alpha)) is below exp(-kTailExponent) past the truncation point.
constexpr double kTailExponent = 80.0;

struct CompensatedSum {
  double sum = 0.0;
  double carry = 0.0;

  void add(double v) {
    const double t = sum + v;
    if (std::abs(sum) >= std::abs(v)) {
      carry += (sum - t) + v;
    } else {
      carry += (v - t) + sum;
    }
    sum = t;
  }

  double value() const { return sum + carry; }
};

std::string describe(const MLParams& p, double z) {
  std::ostringstream os;
  os.precision(17);
  os << "E_{" << p.alpha() << "," << p.beta() << "}(" << z << ")";
  return os.str();
}

template <class F>
double integrate(F&& f, double lo, double hi) {
  using boost::math::quadrature::gauss_kronrod;
  if (!(hi > lo)) {
    return 0.0;
  }
  double error = 0.0;
  return gauss_kronrod<double, 31>::integrate(f, lo, hi, kQuadDepth, kQuadTolerance, &error);
}

// Endpoint-singular integrand on [lo, hi] (singular or non-smooth at lo).
template <class F>
double integrate_singular(F&& f, double lo, double hi) {
  if (!(hi > lo)) {
    return 0.0;
  }
  thread_local boost::math::quadrature::tanh_sinh<double> rule;
  return rule.integrate(f, lo, hi, kQuadTolerance);
}

// Sum of integrals over consecutive breakpoints; the first piece may carry an
// endpoint singularity at its left end.
template <class F>
double integrate_pieces(F&& f, std::vector<double> breaks) {
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
  CompensatedSum total;
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    total.add(i == 0 ? integrate_singular(f, breaks[0], breaks[1])
                     : integrate(f, breaks[i], breaks[i + 1]));
  }
  return total.value();
}

double series_branch(double alpha, double beta, double z, const MLParams& p) {
  if (z == 0.0) {
    return reciprocal_gamma(beta);
  }
  const double x = std::abs(z);
  const double log_x = std::log(x);
  // Largest term sits near n = x^(1/alpha) / alpha.
  const double peak = std::pow(x, 1.0 / alpha) / alpha;
  const long n_max = static_cast<long>(2.0 * peak) + 600;

  CompensatedSum total;
  for (long n = 0; n <= n_max; ++n) {
    const double arg = alpha * static_cast<double>(n) + beta;
    const double log_mag = static_cast<double>(n) * log_x;
    double term;
    if (arg < 170.0 && log_mag < 700.0) {
      term = std::pow(z, static_cast<double>(n)) / std::tgamma(arg);
    } else {
      const double sign = (z < 0.0 && (n % 2 == 1)) ? -1.0 : 1.0;
      term = sign * std::exp(log_mag - std::lgamma(arg));
    }
    if (!std::isfinite(term)) {
      throw AccuracyError(describe(p, z) + " overflows double precision");
    }
    total.add(term);
    const double s = total.value();
    if (static_cast<double>(n) > peak &&
        (std::abs(term) <= kTermTolerance * std::abs(s) || std::abs(term) < 1e-300)) {
      if (!std::isfinite(s)) {
        throw AccuracyError(describe(p, z) + " overflows double precision");
      }
      return s;
    }
  }
  throw AccuracyError("power series for " + describe(p, z) + " did not converge");
}

// E(-x) ~ sum_{k>=1} (-1)^(k+1) x^(-k) / Gamma(beta - alpha k), alpha < 1.
double asymptotic_branch(double alpha, double beta, double x, const MLParams& p) {
  const double log_x = std::log(x);
  CompensatedSum total;
  double prev_bound = std::numeric_limits<double>::infinity();
  constexpr int kMaxTerms = 20000;
  for (int k = 1; k <= kMaxTerms; ++k) {
    const double arg = beta - alpha * k;
    const LogGamma rg = log_reciprocal_gamma(arg);
    if (rg.sign != 0) {
      const double sign = (k % 2 == 1 ? 1.0 : -1.0) * rg.sign;
      total.add(sign * std::exp(rg.log_abs - k * log_x));
    }
    if (arg >= 1.0) {
      continue;  // terms still governed by 1/Gamma of a large argument
    }
    // |1/Gamma(y)| <= Gamma(1 - y) / pi for y < 1; the bound also covers
    // terms skipped at poles.
    const double bound = std::exp(std::lgamma(1.0 - arg) - std::log(kPi) - k * log_x);
    const double s = total.value();
    if (s != 0.0 && bound < kTermTolerance * std::abs(s)) {
      return s;
    }
    if (arg < 0.0 && bound > prev_bound) {
      break;
    }
    prev_bound = bound;
  }
  throw AccuracyError("asymptotic expansion for " + describe(p, -x) + " did not converge");
}

// Integral representation on the negative real axis for 0 < alpha < 1:
//
//   E(-x) = int_0^inf K(chi) dchi,   beta < 1 + alpha,
//   K(chi) = chi^((1-beta)/alpha) exp(-chi^(1/alpha))
//            (chi sin(pi(1-beta)) + x sin(pi(1-beta+alpha)))
//            / (alpha pi ((chi + x cos(pi alpha))^2 + (x sin(pi alpha))^2)).
//
// Larger beta is reduced with E_{a,b}(z) = (E_{a,b-a}(z) - 1/Gamma(b-a)) / z.
double integral_branch(double alpha, double beta, double x) {
  if (beta >= 1.0 + alpha) {
    const double lower = integral_branch(alpha, beta - alpha, x);
    return (lower - reciprocal_gamma(beta - alpha)) / (-x);
  }
  const double c = std::cos(kPi * alpha);
  const double s = std::sin(kPi * alpha);
  const double s1 = std::sin(kPi * (1.0 - beta));
  const double s2 = std::sin(kPi * (1.0 - beta + alpha));
  const double power = (1.0 - beta) / alpha;
  const double scale = 1.0 / (alpha * kPi);
  const double xs2 = (x * s) * (x * s);

  auto regular = [=](double chi) {
    const double shifted = chi + x * c;
    return scale * std::exp(-std::pow(chi, 1.0 / alpha)) * (chi * s1 + x * s2) /
           (shifted * shifted + xs2);
  };

  const double chi_max = std::pow(kTailExponent, alpha);
  std::vector<double> chi_breaks{0.0, std::min(1.0, chi_max), chi_max};
  const double chi_peak = -x * c;
  if (chi_peak > 0.0 && chi_peak < chi_max) {
    const double width = x * s;
    for (double k : {-8.0, -1.0, 0.0, 1.0, 8.0}) {
      const double b = chi_peak + k * width;
      if (b > 0.0 && b < chi_max) {
        chi_breaks.push_back(b);
      }
    }
  }

  if (power >= 0.0) {
    return integrate_pieces([&](double chi) { return std::pow(chi, power) * regular(chi); },
                            chi_breaks);
  }
  // chi = u^(1/(1+power)) absorbs the integrable singularity chi^power.
  const double q = 1.0 + power;
  std::vector<double> u_breaks;
  u_breaks.reserve(chi_breaks.size());
  for (double b : chi_breaks) {
    u_breaks.push_back(std::pow(b, q));
  }
  return integrate_pieces([&](double u) { return regular(std::pow(u, 1.0 / q)); }, u_breaks) / q;
}

// alpha = 1, z = -x < 0.  For beta > 1
//   E_{1,beta}(-x) = 1/Gamma(beta-1) int_0^1 (1-s)^(beta-2) exp(-x s) ds.
double exp_integral_branch(double beta, double x) {
  if (beta == 1.0) {
    return std::exp(-x);
  }
  if (beta < 1.0) {
    return reciprocal_gamma(beta) - x * exp_integral_branch(beta + 1.0, x);
  }
  const double q = beta - 1.0;
  const double knee = std::min(0.5, 1.0 / x);
  double integral;
  if (q >= 1.0) {
    integral = integrate_pieces(
        [&](double s) { return std::pow(1.0 - s, q - 1.0) * std::exp(-x * s); },
        {0.0, knee, std::min(0.5, 10.0 * knee), 0.5, 1.0});
  } else {
    const double head = integrate_pieces(
        [&](double s) { return std::pow(1.0 - s, q - 1.0) * std::exp(-x * s); },
        {0.0, knee, std::min(0.5, 10.0 * knee), 0.5});
    // w = (1-s)^q on [1/2, 1].
    const double tail =
        integrate([&](double w) { return std::exp(-x * (1.0 - std::pow(w, 1.0 / q))); }, 0.0,
                  std::pow(0.5, q)) /
        q;
    integral = head + tail;
  }
  return integral * reciprocal_gamma(q);
}

void check_argument(const MLParams& p, double z) {
  if (!std::isfinite(z) || z < -kMaxNegativeArgument || z > kMaxPositiveArgument) {
    throw DomainError(describe(p, z) + ": argument outside [-100, 30]");
  }
}

}  // namespace

MLParams::MLParams(double alpha, double beta) : alpha_(alpha), beta_(beta) {
  if (!(alpha > 0.0 && alpha <= 2.0)) {
    throw DomainError("Mittag-Leffler alpha must lie in (0, 2], got " + std::to_string(alpha));
  }
  if (!(beta > 0.0) || !std::isfinite(beta)) {
    throw DomainError("Mittag-Leffler beta must be positive, got " + std::to_string(beta));
  }
}

std::string_view to_string(MLBranch branch) {
  switch (branch) {
    case MLBranch::Series:
      return "series";
    case MLBranch::Integral:
      return "integral";
    case MLBranch::Asymptotic:
      return "asymptotic";
    case MLBranch::ExpIntegral:
      return "exp-integral";
  }
  return "unknown";
}

MLBranch select_branch(const MLParams& p, double z) {
  if (z >= 0.0) {
    return MLBranch::Series;
  }
  const double r = std::pow(-z, 1.0 / p.alpha());
  if (r <= kSeriesLimit || p.alpha() > 1.0) {
    return MLBranch::Series;
  }
  if (p.alpha() == 1.0) {
    return MLBranch::ExpIntegral;
  }
  return r >= kAsymptoticLimit ? MLBranch::Asymptotic : MLBranch::Integral;
}

double ml_eval_branch(const MLParams& p, double z, MLBranch branch) {
  check_argument(p, z);
  const double alpha = p.alpha();
  const double beta = p.beta();
  if (branch == MLBranch::Series) {
    return series_branch(alpha, beta, z, p);
  }
  if (z >= 0.0) {
    throw DomainError(std::string(to_string(branch)) + " branch needs a negative argument");
  }
  switch (branch) {
    case MLBranch::Integral:
      if (alpha >= 1.0) {
        throw DomainError("integral branch needs alpha < 1");
      }
      return integral_branch(alpha, beta, -z);
    case MLBranch::Asymptotic:
      if (alpha >= 1.0) {
        throw DomainError("asymptotic branch needs alpha < 1");
      }
      return asymptotic_branch(alpha, beta, -z, p);
    case MLBranch::ExpIntegral:
      if (alpha != 1.0) {
        throw DomainError("exp-integral branch needs alpha == 1");
      }
      return exp_integral_branch(beta, -z);
    case MLBranch::Series:
      break;
  }
  return series_branch(alpha, beta, z, p);
}

double ml_eval(const MLParams& p, double z) {
  check_argument(p, z);
  if (z < 0.0 && p.alpha() > 1.0 && std::pow(-z, 1.0 / p.alpha()) > kSeriesLimit) {
    throw AccuracyError(describe(p, z) +
                        ": negative arguments this large are only supported for alpha <= 1");
  }
  return ml_eval_branch(p, z, select_branch(p, z));
}

double ml_one(double alpha, double z) { return ml_eval(MLParams(alpha, 1.0), z); }

double ml_deriv_sign_probe(const MLParams& p, double x, int n, double h) {
  if (n < 0 || n > 3) {
    throw DomainError("derivative order must be in 0..3, got " + std::to_string(n));
  }
  if (!(h > 0.0)) {
    throw DomainError("finite-difference step must be positive");
  }
  if (!(x >= 0.0)) {
    throw DomainError("probe point must be nonnegative");
  }
  if (p.alpha() > 1.0 || p.beta() < p.alpha()) {
    throw DomainError("probe requires 0 < alpha <= 1 and beta >= alpha");
  }
  const MLBranch branch = select_branch(p, -x);
  auto f = [&](double t) { return ml_eval_branch(p, -t, branch); };
  if (n == 0) {
    return f(x);
  }
  static constexpr std::array<std::array<double, 4>, 4> kBinomial{{
      {1, 0, 0, 0},
      {1, 1, 0, 0},
      {1, 2, 1, 0},
      {1, 3, 3, 1},
  }};
  double acc = 0.0;
  for (int k = 0; k <= n; ++k) {
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    acc += sign * kBinomial[n][k] * f(x + (0.5 * n - k) * h);
  }
  return acc / std::pow(h, n);
}

}  // namespace fracvoigt::special
