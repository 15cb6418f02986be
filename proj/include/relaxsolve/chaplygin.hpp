#pragma once

#include "relaxsolve/model.hpp"

namespace relaxsolve {

// Suliciu-type relaxation of the p-system with p(T) = T^-gamma:
//   d_t tau - d_x u = 0,
//   d_t u + d_x (p(T) + a^2 (T - tau)) = 0,
//   d_t T = (tau - T) / eps.
// W = (tau, u, T), k = 2, Q(tau, u) = tau. Eigenvalues {-a, 0, a}.
class ChaplyginModel final : public Model {
 public:
  ChaplyginModel(double a, double gamma);

  double a() const { return a_; }
  double gamma() const { return gamma_; }
  double pressure(double covolume) const;
  // -p'(T) = gamma T^(-gamma-1).
  double pressure_slope(double covolume) const;
  bool subcharacteristic(double covolume) const { return a_ * a_ > pressure_slope(covolume); }

  // Convex entropy of the relaxation system,
  //   H = u^2/2 + T^(1-gamma)/(gamma-1) + p(T)(T - tau) + a^2/2 (T - tau)^2,
  // and its production grad H . R = -(a^2 - gamma T^(-gamma-1)) (T - tau)^2.
  // Both throw DomainError unless tau > 0 and T > 0.
  double entropy_at(double tau, double u, double t) const;
  double entropy_source_at(double tau, double u, double t) const;

  std::string_view id() const override { return "chaplygin"; }
  std::size_t size() const override { return 3; }
  std::size_t conserved_size() const override { return 2; }
  StateVector flux(const StateVector& w) const override;
  StateVector equilibrium_map(const StateVector& w1) const override { return {w1[0]}; }
  double max_wave_speed(const StateVector&) const override { return a_; }
  bool flux2_constant_along_source() const override { return true; }
  std::optional<std::string> admissibility_violation(const StateVector& w) const override;
  std::optional<double> entropy(const StateVector& w) const override {
    return entropy_at(w[0], w[1], w[2]);
  }
  std::optional<double> entropy_source(const StateVector& w) const override {
    return entropy_source_at(w[0], w[1], w[2]);
  }
  std::vector<std::string> primitive_names() const override { return {"tau", "u", "T"}; }
  StateVector to_primitive(const StateVector& w) const override { return w; }
  StateVector from_primitive(const StateVector& p) const override { return p; }

 private:
  double a_;
  double gamma_;
};

}  // namespace relaxsolve
