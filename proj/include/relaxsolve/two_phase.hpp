#pragma once

#include "relaxsolve/model.hpp"

namespace relaxsolve {

// Homogeneous relaxation model for a liquid-vapour mixture of two perfect
// gases at thermal and mechanical equilibrium:
//   W = (rho, rho u, rho E, rho phi), k = 3, Q(W^(1)) = rho phi_eq(rho),
//   p = (gamma(phi) - 1) rho e,  gamma(phi) = gamma1 phi + gamma2 (1 - phi).
class TwoPhaseModel final : public Model {
 public:
  TwoPhaseModel(double gamma1, double gamma2);

  double gamma1() const { return gamma1_; }
  double gamma2() const { return gamma2_; }
  double rho1_star() const { return rho1_star_; }
  double rho2_star() const { return rho2_star_; }
  double tau1_star() const { return 1.0 / rho1_star_; }
  double tau2_star() const { return 1.0 / rho2_star_; }

  double mixture_gamma(double phi) const { return gamma1_ * phi + gamma2_ * (1.0 - phi); }

  // Equilibrium mass fraction; DomainError for rho <= 0.
  double phi_eq(double rho) const;
  // p(rho, e, phi_eq(rho)) evaluated branch-wise; DomainError for rho <= 0 or e <= 0.
  double equilibrium_pressure(double rho, double e) const;
  double pressure(double rho, double e, double phi) const {
    return (mixture_gamma(phi) - 1.0) * rho * e;
  }
  double sound_speed(const StateVector& w) const;

  // Conservative state from (rho, u, p) with phi at equilibrium.
  StateVector from_equilibrium_primitive(double rho, double u, double p) const;

  std::string_view id() const override { return "twophase"; }
  std::size_t size() const override { return 4; }
  std::size_t conserved_size() const override { return 3; }
  StateVector flux(const StateVector& w) const override;
  StateVector equilibrium_map(const StateVector& w1) const override;
  double max_wave_speed(const StateVector& w) const override;
  bool flux2_constant_along_source() const override { return false; }
  std::optional<std::string> admissibility_violation(const StateVector& w) const override;
  // (rho, u, p, phi)
  std::vector<std::string> primitive_names() const override { return {"rho", "u", "p", "phi"}; }
  StateVector to_primitive(const StateVector& w) const override;
  StateVector from_primitive(const StateVector& p) const override;

 private:
  double gamma1_;
  double gamma2_;
  double rho1_star_;
  double rho2_star_;
};

}  // namespace relaxsolve
