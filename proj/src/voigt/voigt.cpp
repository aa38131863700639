#include "fracvoigt/voigt.hpp"

#include <cmath>
#include <string>

#include "fracvoigt/errors.hpp"
#include "fracvoigt/fracops.hpp"
#include "fracvoigt/mittag_leffler.hpp"

namespace fracvoigt {

VoigtParams::VoigtParams(double eta, double e_mod, double alpha)
    : eta_(eta), e_mod_(e_mod), alpha_(alpha) {
  if (!(eta > 0.0) || !std::isfinite(eta)) {
    throw DomainError("viscosity eta must be positive, got " + std::to_string(eta));
  }
  if (!(e_mod > 0.0) || !std::isfinite(e_mod)) {
    throw DomainError("elastic modulus must be positive, got " + std::to_string(e_mod));
  }
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    throw DomainError("fractional order must lie in (0, 1], got " + std::to_string(alpha));
  }
}

double VoigtParams::eta_pow() const { return std::pow(eta_, alpha_); }

double VoigtParams::inverse_tau_pow() const { return std::pow(tau(), -alpha_); }

namespace voigt {

namespace {

void check_time(double t) {
  if (!(t >= 0.0) || !std::isfinite(t)) {
    throw DomainError("time must be finite and nonnegative, got " + std::to_string(t));
  }
}

}  // namespace

void SolverConfig::validate() const {
  if (!(tol > 0.0)) {
    throw DomainError("solver tolerance must be positive");
  }
  if (max_iter < 1) {
    throw DomainError("solver needs max_iter >= 1");
  }
  if (!(damping > 0.0 && damping <= 1.0)) {
    throw DomainError("damping factor must lie in (0, 1]");
  }
}

Signal linear_strain(const VoigtParams& p, const Signal& stress) {
  return fracops::ml_kernel_convolve(p, stress);
}

double creep_function(const VoigtParams& p, double t) {
  check_time(t);
  const double a = p.alpha();
  const double z = -std::pow(t / p.tau(), a);
  return std::pow(p.tau() / p.eta(), a) * (1.0 - special::ml_one(a, z));
}

double creep_function_alt(const VoigtParams& p, double t) {
  check_time(t);
  if (t == 0.0) {
    return 0.0;
  }
  const double a = p.alpha();
  const double z = -std::pow(t / p.tau(), a);
  return std::pow(t / p.eta(), a) * special::ml_eval(special::MLParams(a, a + 1.0), z);
}

PicardResult picard_linear(const VoigtParams& p, const Signal& stress, const SolverConfig& cfg) {
  cfg.validate();
  const fracops::RLIntegral integral(p.alpha(), stress.grid());
  const double lambda = p.inverse_tau_pow();

  Signal forcing = integral.apply(stress);
  forcing = linear_combination(1.0 / p.eta_pow(), forcing, 0.0, forcing);

  PicardResult result{forcing, 0, 0.0, false, {}};
  while (result.iterations < cfg.max_iter) {
    Signal next = linear_combination(1.0, forcing, -lambda, integral.apply(result.solution));
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

}  // namespace voigt

}  // namespace fracvoigt
