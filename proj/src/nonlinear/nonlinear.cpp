#include "fracvoigt/nonlinear.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "fracvoigt/errors.hpp"

namespace fracvoigt::nonlinear {

ConstitutiveLaw::ConstitutiveLaw(Kind kind, std::string description, std::function<double(double)> f,
                                 double bound)
    : kind_(kind), description_(std::move(description)), f_(std::move(f)), bound_(bound) {}

std::vector<std::string> ConstitutiveLaw::builtin_names() {
  return {"zero", "constant", "reciprocal", "exp-decay"};
}

ConstitutiveLaw ConstitutiveLaw::builtin(const std::string& name) {
  constexpr double inf = std::numeric_limits<double>::infinity();
  if (name == "zero") {
    return {Kind::Builtin, name, [](double) { return 0.0; }, inf};
  }
  if (name == "constant") {
    return {Kind::Builtin, name, [](double) { return 1.0; }, inf};
  }
  if (name == "reciprocal") {
    return {Kind::Builtin, name, [](double e) { return 1.0 / (1.0 + e); }, inf};
  }
  if (name == "exp-decay") {
    return {Kind::Builtin, name, [](double e) { return std::exp(-e); }, inf};
  }
  throw DomainError("unknown constitutive law '" + name + "'");
}

ConstitutiveLaw ConstitutiveLaw::expression(const expr::Expr& e) {
  return {Kind::Expression, e.to_string(), [e](double x) { return e(x); },
          std::numeric_limits<double>::infinity()};
}

ConstitutiveLaw ConstitutiveLaw::table(std::vector<double> strain, std::vector<double> stress) {
  if (strain.size() < 2 || strain.size() != stress.size()) {
    throw DomainError("constitutive table needs at least two (strain, stress) pairs");
  }
  if (strain.front() != 0.0) {
    throw DomainError("constitutive table must start at strain 0");
  }
  for (std::size_t i = 1; i < strain.size(); ++i) {
    if (!(strain[i] > strain[i - 1])) {
      throw DomainError("constitutive table strains must be strictly increasing");
    }
  }
  const double bound = strain.back();
  auto f = [x = std::move(strain), y = std::move(stress)](double e) {
    if (!(e >= x.front() && e <= x.back())) {
      throw EvaluationError("strain " + std::to_string(e) + " outside the table range [0, " +
                            std::to_string(x.back()) + "]");
    }
    const auto hi = std::upper_bound(x.begin() + 1, x.end() - 1, e);
    const std::size_t k = static_cast<std::size_t>(hi - x.begin());
    const double w = (e - x[k - 1]) / (x[k] - x[k - 1]);
    return (1.0 - w) * y[k - 1] + w * y[k];
  };
  return {Kind::Table, "table", std::move(f), bound};
}

double ConstitutiveLaw::operator()(double eps) const {
  const double v = f_(eps);
  if (!std::isfinite(v)) {
    throw EvaluationError("constitutive law '" + description_ + "' is not finite at strain " +
                          std::to_string(eps));
  }
  return v;
}

Signal apply_T(const fracops::MLKernelConvolution& plan, const ConstitutiveLaw& law, const Signal& eps) {
  std::vector<double> stress(eps.size());
  for (std::size_t i = 0; i < stress.size(); ++i) {
    stress[i] = law(eps[i]);
  }
  return plan.apply(Signal(eps.grid(), std::move(stress)));
}

Signal apply_T(const VoigtParams& p, const ConstitutiveLaw& law, const Signal& eps) {
  return apply_T(fracops::MLKernelConvolution(p, eps.grid()), law, eps);
}

voigt::PicardResult solve_nonlinear(const VoigtParams& p, const ConstitutiveLaw& law, const Grid& grid,
                                    const voigt::SolverConfig& cfg) {
  cfg.validate();
  const fracops::MLKernelConvolution plan(p, grid);
  voigt::PicardResult result{Signal::zeros(grid), 0, 0.0, false, {}};
  while (result.iterations < cfg.max_iter) {
    Signal next = apply_T(plan, law, result.solution);
    if (cfg.damping != 1.0) {
      next = linear_combination(1.0 - cfg.damping, result.solution, cfg.damping, next);
    }
    result.final_diff = sup_distance(next, result.solution);
    result.diff_history.push_back(result.final_diff);
    result.solution = std::move(next);
    ++result.iterations;
    if (result.final_diff < cfg.tol) {
      result.converged = true;
      break;
    }
  }
  return result;
}

double residual(const VoigtParams& p, const ConstitutiveLaw& law, const Signal& eps) {
  return sup_distance(eps, apply_T(p, law, eps));
}

void ProbeConfig::validate() const {
  if (!(eps_small > 0.0 && eps_small < upper) || !std::isfinite(upper)) {
    throw DomainError("probe range needs 0 < eps_small < upper < inf");
  }
  if (samples < 3) {
    throw DomainError("probe needs at least 3 samples");
  }
  if (!(tol >= 0.0)) {
    throw DomainError("probe tolerance must be nonnegative");
  }
}

HypothesisReport check_hypotheses(const ConstitutiveLaw& law, const ProbeConfig& probe) {
  probe.validate();
  const int n = probe.samples;
  const double log_lo = std::log(probe.eps_small);
  const double log_hi = std::log(probe.upper);
  std::vector<double> x(static_cast<std::size_t>(n));
  std::vector<double> y(x.size());
  for (int i = 0; i < n; ++i) {
    const auto k = static_cast<std::size_t>(i);
    x[k] = (i == n - 1) ? probe.upper
                        : (i == 0 ? probe.eps_small : std::exp(log_lo + (log_hi - log_lo) * i / (n - 1)));
    y[k] = law(x[k]);
  }

  HypothesisReport r;
  r.is_decreasing = true;
  for (std::size_t i = 1; i < x.size(); ++i) {
    if (y[i] > y[i - 1] + probe.tol) {
      r.is_decreasing = false;
      break;
    }
  }
  r.is_convex = true;
  for (std::size_t i = 0; i < x.size() && r.is_convex; ++i) {
    for (std::size_t j = i + 1; j < x.size(); ++j) {
      if (law(0.5 * (x[i] + x[j])) > 0.5 * (y[i] + y[j]) + probe.tol) {
        r.is_convex = false;
        break;
      }
    }
  }
  r.sigma_at_zero = law(0.0);
  r.e0_estimate = y.front() / probe.eps_small;
  r.e_inf_estimate = y.back() / probe.upper;
  r.verdict = r.is_decreasing && r.is_convex && r.sigma_at_zero > 0.0 &&
              r.e0_estimate >= kSlopeAtZeroThreshold && r.e_inf_estimate <= kSlopeAtInfinityThreshold;
  return r;
}

}  // namespace fracvoigt::nonlinear
