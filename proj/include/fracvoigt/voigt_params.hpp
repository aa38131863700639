#pragma once

namespace fracvoigt {

// Material constants of the fractional Voigt element: viscosity eta, elastic
// modulus E and fractional order alpha in (0, 1].  The retardation time
// tau = eta / E is derived and cannot be set independently.
class VoigtParams {
 public:
  VoigtParams(double eta, double e_mod, double alpha);

  double eta() const noexcept { return eta_; }
  double e_mod() const noexcept { return e_mod_; }
  double alpha() const noexcept { return alpha_; }
  double tau() const noexcept { return eta_ / e_mod_; }

  // eta^alpha and tau^-alpha, the two coefficients of the integral form.
  double eta_pow() const;
  double inverse_tau_pow() const;

 private:
  double eta_;
  double e_mod_;
  double alpha_;
};

}  // namespace fracvoigt
