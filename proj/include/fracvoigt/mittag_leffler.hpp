#pragma once

#include <string_view>

namespace fracvoigt::special {

// Supported argument range of ml_eval.
inline constexpr double kMaxNegativeArgument = 100.0;
inline constexpr double kMaxPositiveArgument = 30.0;

// Parameter pair (alpha, beta) of E_{alpha,beta}.  Construction validates
// 0 < alpha <= 2 and beta > 0.
class MLParams {
 public:
  MLParams(double alpha, double beta);

  double alpha() const noexcept { return alpha_; }
  double beta() const noexcept { return beta_; }

 private:
  double alpha_;
  double beta_;
};

// Evaluation strategies for real arguments.
enum class MLBranch {
  Series,       // power series; any sign of z, small |z| when z < 0
  Integral,     // integral representation on the negative axis, alpha < 1
  Asymptotic,   // algebraic expansion on the negative axis, alpha < 1
  ExpIntegral,  // alpha == 1 on the negative axis (Euler-type integral)
};

std::string_view to_string(MLBranch branch);

/// Two-parameter Mittag-Leffler function
///
///     E_{a,b}(z) = sum_{n>=0} z^n / Gamma(a n + b)
///
/// for real z with -100 <= z <= 30.  Accuracy is about 1e-13 relative on
/// the negative axis for alpha <= 1; for 1 < alpha <= 2 only the power
/// series is available and large negative arguments raise AccuracyError.
///
/// Throws DomainError when z lies outside the supported range and
/// AccuracyError when the value overflows a double.
double ml_eval(const MLParams& p, double z);

// E_alpha(z) = E_{alpha,1}(z).
double ml_one(double alpha, double z);

// Branch ml_eval uses for (p, z).
MLBranch select_branch(const MLParams& p, double z);

// Evaluate with a forced branch.  Exposed so branch agreement can be tested
// at the switch points; throws DomainError if the branch cannot handle (p, z).
double ml_eval_branch(const MLParams& p, double z, MLBranch branch);

/// n-th central finite difference quotient (0 <= n <= 3) of
/// t -> E_{a,b}(-t) at t = x with step h, i.e. an approximation to
/// d^n/dt^n E_{a,b}(-t).  All stencil points are evaluated on the branch
/// selected at the centre so that branch switches do not pollute the
/// difference.  Requires x >= 0, h > 0, 0 < alpha <= 1, beta >= alpha.
double ml_deriv_sign_probe(const MLParams& p, double x, int n, double h);

}  // namespace fracvoigt::special
