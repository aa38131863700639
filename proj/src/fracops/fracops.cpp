#include "fracvoigt/fracops.hpp"

#include <cmath>
#include <exception>
#include <string>
#include <vector>

#include "fracvoigt/errors.hpp"
#include "fracvoigt/gamma.hpp"
#include "fracvoigt/kernels.hpp"
#include "fracvoigt/mittag_leffler.hpp"

namespace fracvoigt::fracops {

namespace {

void check_order(double alpha) {
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    throw DomainError("fractional order must lie in (0, 1], got " + std::to_string(alpha));
  }
}

Signal run(const ConvolutionWeights& w, const Grid& grid, const Signal& f, Execution exec) {
  if (!(f.grid() == grid)) {
    throw DomainError("signal grid does not match the operator grid");
  }
  std::vector<double> out(grid.size());
  if (exec == Execution::Parallel) {
    kernels::convolve_parallel(w, f.values(), out);
  } else {
    kernels::convolve_serial(w, f.values(), out);
  }
  return Signal(grid, std::move(out));
}

// R_m = (-l)^M E_{a,(M+1)a}(-l (m h)^a), m = 0..n.
std::vector<double> remainder_table(const VoigtParams& p, const Grid& grid, int split) {
  const double alpha = p.alpha();
  const double lambda = p.inverse_tau_pow();
  const special::MLParams ml(alpha, (split + 1) * alpha);
  const double factor = std::pow(-lambda, split);
  const double h = grid.step();
  const int n = grid.n();
  std::vector<double> table(grid.size());
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 16)
  for (int m = 0; m <= n; ++m) {
    try {
      const double u = m * h;
      table[static_cast<std::size_t>(m)] = factor * special::ml_eval(ml, -lambda * std::pow(u, alpha));
    } catch (...) {
#pragma omp critical(fracvoigt_kernel_table)
      if (!failure) {
        failure = std::current_exception();
      }
    }
  }
  if (failure) {
    std::rethrow_exception(failure);
  }
  return table;
}

}  // namespace

int kernel_split_terms(double alpha) {
  check_order(alpha);
  return static_cast<int>(std::ceil(1.0 / alpha - 1.0 - 1e-9));
}

RLIntegral::RLIntegral(double alpha, const Grid& grid)
    : alpha_(alpha), grid_(grid), weights_() {
  check_order(alpha);
  weights_ = power_kernel_weights(grid.n(), grid.step(), alpha, special::reciprocal_gamma(alpha));
}

Signal RLIntegral::apply(const Signal& f, Execution exec) const {
  return run(weights_, grid_, f, exec);
}

MLKernelConvolution::MLKernelConvolution(const VoigtParams& params, const Grid& grid)
    : params_(params), grid_(grid), split_terms_(kernel_split_terms(params.alpha())) {
  const double alpha = params.alpha();
  const double lambda = params.inverse_tau_pow();
  const double scale = 1.0 / params.eta_pow();
  const double h = grid.step();

  weights_.first.assign(grid.size(), 0.0);
  weights_.interior.assign(grid.size(), 0.0);
  for (int i = 0; i < split_terms_; ++i) {
    const double g = (i + 1) * alpha;
    const ConvolutionWeights term =
        power_kernel_weights(grid.n(), h, g, scale * std::pow(-lambda, i) * special::reciprocal_gamma(g));
    for (std::size_t k = 0; k < grid.size(); ++k) {
      weights_.first[k] += term.first[k];
      weights_.interior[k] += term.interior[k];
    }
    weights_.diagonal += term.diagonal;
  }
  const double g_rem = (split_terms_ + 1) * alpha;
  add_power_kernel_weights(weights_, h, g_rem, scale, remainder_table(params, grid, split_terms_));
}

Signal MLKernelConvolution::apply(const Signal& f, Execution exec) const {
  return run(weights_, grid_, f, exec);
}

Signal rl_integral(double alpha, const Signal& f) { return RLIntegral(alpha, f.grid()).apply(f); }

Signal ml_kernel_convolve(const VoigtParams& params, const Signal& f) {
  return MLKernelConvolution(params, f.grid()).apply(f);
}

}  // namespace fracvoigt::fracops
