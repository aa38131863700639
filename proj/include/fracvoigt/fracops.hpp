#pragma once

#include "fracvoigt/grid.hpp"
#include "fracvoigt/voigt_params.hpp"
#include "fracvoigt/weights.hpp"

namespace fracvoigt::fracops {

enum class Execution { Serial, Parallel };

/// Riemann-Liouville integral
///
///     (I^a f)(t) = 1/Gamma(a) int_0^t (t-s)^(a-1) f(s) ds,   0 < a <= 1,
///
/// by product trapezoid: f is replaced by its piecewise-linear interpolant
/// and each moment of (t-s)^(a-1) is integrated in closed form.  Exact for
/// piecewise-linear data; the value at t = 0 is 0.
///
/// The weights depend only on (a, grid), so a plan can be reused across many
/// applications (Picard iteration).
class RLIntegral {
 public:
  RLIntegral(double alpha, const Grid& grid);

  Signal apply(const Signal& f, Execution exec = Execution::Parallel) const;

  double alpha() const noexcept { return alpha_; }
  const Grid& grid() const noexcept { return grid_; }
  const ConvolutionWeights& weights() const noexcept { return weights_; }

 private:
  double alpha_;
  Grid grid_;
  ConvolutionWeights weights_;
};

/// Convolution with the fractional Voigt kernel
///
///     (K f)(t) = eta^-a int_0^t (t-s)^(a-1) E_{a,a}(-((t-s)/tau)^a) f(s) ds.
///
/// E_{a,a}(-(u/tau)^a) is only Hoelder-continuous (like u^a) at u = 0, so
/// interpolating it linearly caps the error at O(h^(2a)).  The term-shift
/// identity E_{a,b}(z) = 1/Gamma(b) + z E_{a,a+b}(z) is applied M times,
///
///     u^(a-1) E_{a,a}(-l u^a)
///       = sum_{i<M} (-l)^i u^((i+1)a-1) / Gamma((i+1)a)
///         + (-l)^M u^((M+1)a-1) E_{a,(M+1)a}(-l u^a),   l = tau^-a,
///
/// with M = ceil(1/a - 1).  Each power term is integrated exactly against the
/// piecewise-linear interpolant of f; in the remainder the singular power is
/// integrated exactly and the regular factor E_{a,(M+1)a}(...) f(s) is
/// interpolated.  The quadrature error is O(h^(1+a)) or better; for a = 1 the
/// scheme is the ordinary trapezoid rule on exp(-(t-s)/tau) f(s).
///
/// Kernel values are tabulated once per grid offset (n + 1 evaluations).
class MLKernelConvolution {
 public:
  MLKernelConvolution(const VoigtParams& params, const Grid& grid);

  Signal apply(const Signal& f, Execution exec = Execution::Parallel) const;

  const VoigtParams& params() const noexcept { return params_; }
  const Grid& grid() const noexcept { return grid_; }
  const ConvolutionWeights& weights() const noexcept { return weights_; }
  int split_terms() const noexcept { return split_terms_; }

 private:
  VoigtParams params_;
  Grid grid_;
  int split_terms_;
  ConvolutionWeights weights_;
};

// Number M of leading power terms split off the kernel for order alpha.
int kernel_split_terms(double alpha);

Signal rl_integral(double alpha, const Signal& f);
Signal ml_kernel_convolve(const VoigtParams& params, const Signal& f);

}  // namespace fracvoigt::fracops
