#pragma once

#include "relaxsolve/model.hpp"

namespace relaxsolve {

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  bool contains(double x, double tol = 0.0) const { return x >= lo - tol && x <= hi + tol; }
};

// Scalar equilibrium flux g of d_t u + d_x g(u) = 0.
class ScalarFlux {
 public:
  enum class Kind { burgers, linear };

  static ScalarFlux burgers() { return ScalarFlux(Kind::burgers, 0.0); }
  static ScalarFlux linear(double speed) { return ScalarFlux(Kind::linear, speed); }

  Kind kind() const { return kind_; }
  double operator()(double u) const { return kind_ == Kind::burgers ? 0.5 * u * u : speed_ * u; }
  double derivative(double u) const { return kind_ == Kind::burgers ? u : speed_; }
  // max |g'(u)| over an interval.
  double max_speed(const Interval& k) const;

 private:
  ScalarFlux(Kind kind, double speed) : kind_(kind), speed_(speed) {}
  Kind kind_;
  double speed_;
};

// Jin-Xin relaxation of a scalar conservation law:
//   d_t u + d_x v = 0,  d_t v + lambda^2 d_x u = (g(u) - v) / eps.
// W = (u, v), k = 1, Q(u) = g(u).
class JinXinModel final : public Model {
 public:
  // Throws ConfigError unless lambda > max_{u in K} |g'(u)|.
  JinXinModel(double lambda, ScalarFlux g, Interval admissible_u);

  double lambda() const { return lambda_; }
  const ScalarFlux& g() const { return g_; }
  const Interval& admissible_interval() const { return k_; }

  // h_+(u) = u + g(u)/lambda, h_-(u) = u - g(u)/lambda, and the images of K.
  double h_plus(double u) const { return u + g_(u) / lambda_; }
  double h_minus(double u) const { return u - g_(u) / lambda_; }
  Interval k_plus() const { return {h_plus(k_.lo), h_plus(k_.hi)}; }
  Interval k_minus() const { return {h_minus(k_.lo), h_minus(k_.hi)}; }
  // (u, v) in D_K^lambda: u + v/lambda in K_+ and u - v/lambda in K_-.
  bool in_invariant_domain(const StateVector& w, double tol = 0.0) const;

  std::string_view id() const override { return "jinxin"; }
  std::size_t size() const override { return 2; }
  std::size_t conserved_size() const override { return 1; }
  StateVector flux(const StateVector& w) const override;
  StateVector equilibrium_map(const StateVector& w1) const override;
  double max_wave_speed(const StateVector&) const override { return lambda_; }
  bool flux2_constant_along_source() const override { return true; }
  std::optional<std::string> admissibility_violation(const StateVector& w) const override;
  std::vector<std::string> primitive_names() const override { return {"u", "v"}; }
  StateVector to_primitive(const StateVector& w) const override { return w; }
  StateVector from_primitive(const StateVector& p) const override { return p; }

 private:
  double lambda_;
  ScalarFlux g_;
  Interval k_;
};

// (v, lambda^2 u).
StateVector jinxin_flux(double u, double v, double lambda);

}  // namespace relaxsolve
