#pragma once

#include <vector>

#include "fracvoigt/grid.hpp"
#include "fracvoigt/voigt_params.hpp"

namespace fracvoigt::voigt {

// Stopping rule shared by the linear and nonlinear fixed-point solvers.
// `damping` only affects the nonlinear solver.
struct SolverConfig {
  double tol = 1e-8;
  int max_iter = 200;
  double damping = 1.0;

  void validate() const;  // throws DomainError
};

inline constexpr int kDefaultIntervals = 256;

// Outcome of a fixed-point iteration.  Non-convergence is not an error: the
// last iterate and the full difference history are returned either way.
struct PicardResult {
  Signal solution;
  int iterations = 0;
  double final_diff = 0.0;
  bool converged = false;
  std::vector<double> diff_history;
};

// Strain under a prescribed stress history, evaluated as the convolution of
// the stress with the fractional Voigt kernel.  eps(0) = 0.
Signal linear_strain(const VoigtParams& p, const Signal& stress);

// Creep function k(t) = (tau/eta)^a (1 - E_a(-(t/tau)^a)).  Throws
// DomainError for t < 0.
double creep_function(const VoigtParams& p, double t);

// Same function through k(t) = t^a / eta^a E_{a,a+1}(-(t/tau)^a).
double creep_function_alt(const VoigtParams& p, double t);

// Successive approximations for the integral form of the linear model:
//
//   eps_0 = I^a sigma / eta^a,
//   eps_m = I^a sigma / eta^a - tau^-a I^a eps_{m-1}.
//
// Stops when sup |eps_m - eps_{m-1}| < cfg.tol; `iterations` is the index m
// of the returned iterate.
PicardResult picard_linear(const VoigtParams& p, const Signal& stress, const SolverConfig& cfg = {});

}  // namespace fracvoigt::voigt
