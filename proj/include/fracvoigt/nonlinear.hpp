#pragma once

#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "fracvoigt/expr.hpp"
#include "fracvoigt/fracops.hpp"
#include "fracvoigt/grid.hpp"
#include "fracvoigt/voigt.hpp"
#include "fracvoigt/voigt_params.hpp"

namespace fracvoigt::nonlinear {

// Stress as a function of strain.  The evaluator is checked at every call:
// a non-finite value, or a strain outside [0, bound] for tables, raises
// EvaluationError.
class ConstitutiveLaw {
 public:
  enum class Kind { Builtin, Expression, Table };

  // "zero", "constant" (1), "reciprocal" (1/(1+eps)), "exp-decay" (exp(-eps)).
  static ConstitutiveLaw builtin(const std::string& name);
  static ConstitutiveLaw expression(const expr::Expr& e);
  // Piecewise-linear interpolation of (strain, stress) samples; strains must
  // be strictly increasing and start at 0.  bound() is the last strain.
  static ConstitutiveLaw table(std::vector<double> strain, std::vector<double> stress);

  static std::vector<std::string> builtin_names();

  double operator()(double eps) const;

  Kind kind() const noexcept { return kind_; }
  const std::string& description() const noexcept { return description_; }
  double bound() const noexcept { return bound_; }

 private:
  ConstitutiveLaw(Kind kind, std::string description, std::function<double(double)> f, double bound);

  Kind kind_;
  std::string description_;
  std::function<double(double)> f_;
  double bound_;
};

// T eps = K (sigma o eps), K the fractional Voigt convolution.
Signal apply_T(const fracops::MLKernelConvolution& plan, const ConstitutiveLaw& law, const Signal& eps);
Signal apply_T(const VoigtParams& p, const ConstitutiveLaw& law, const Signal& eps);

// Fixed-point iteration eps_{k+1} = (1 - d) eps_k + d T eps_k from eps_0 = 0,
// d = cfg.damping.  Stops when sup |eps_{k+1} - eps_k| < cfg.tol.
voigt::PicardResult solve_nonlinear(const VoigtParams& p, const ConstitutiveLaw& law, const Grid& grid,
                                    const voigt::SolverConfig& cfg = {});

// sup |eps - T eps|.
double residual(const VoigtParams& p, const ConstitutiveLaw& law, const Signal& eps);

struct ProbeConfig {
  double eps_small = 1e-8;
  double upper = 1e8;
  int samples = 200;
  double tol = 1e-12;

  void validate() const;  // throws DomainError
};

// Heuristic limits standing in for sigma(eps)/eps -> inf at 0 and -> 0 at inf.
inline constexpr double kSlopeAtZeroThreshold = 1e6;
inline constexpr double kSlopeAtInfinityThreshold = 1e-6;

struct HypothesisReport {
  bool is_decreasing = false;
  bool is_convex = false;
  double sigma_at_zero = 0.0;
  double e0_estimate = 0.0;      // sigma(eps_small) / eps_small
  double e_inf_estimate = 0.0;   // sigma(upper) / upper
  bool verdict = false;
};

// Samples the law on a log-spaced set of `samples` strains in
// [eps_small, upper].  Decreasing: no adjacent increase larger than tol.
// Convex: midpoint inequality within tol on every pair of samples.  This is a
// sanity check on the existence hypotheses, not a proof.
HypothesisReport check_hypotheses(const ConstitutiveLaw& law, const ProbeConfig& probe = {});

}  // namespace fracvoigt::nonlinear
