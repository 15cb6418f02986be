#include "relaxsolve/two_phase.hpp"

#include <cmath>
#include <sstream>

namespace relaxsolve {

namespace {
constexpr double kFractionTolerance = 1e-12;
}  // namespace

TwoPhaseModel::TwoPhaseModel(double gamma1, double gamma2) : gamma1_(gamma1), gamma2_(gamma2) {
  if (!(gamma1 > 1.0) || !(gamma2 > 1.0) || !std::isfinite(gamma1) || !std::isfinite(gamma2)) {
    throw ConfigError("twophase: gamma1 and gamma2 must exceed 1");
  }
  if (gamma1 == gamma2) throw ConfigError("twophase: gamma1 and gamma2 must differ");
  const double ratio = (gamma2_ - 1.0) / (gamma1_ - 1.0);
  const double span = gamma2_ - gamma1_;
  rho1_star_ = std::exp(-1.0) * std::pow(ratio, gamma2_ / span);
  rho2_star_ = std::exp(-1.0) * std::pow(ratio, gamma1_ / span);
  if (!(rho1_star_ < rho2_star_)) {
    throw ConfigError("twophase: saturation densities out of order (rho1* >= rho2*)");
  }
}

double TwoPhaseModel::phi_eq(double rho) const {
  if (!(rho > 0.0)) throw DomainError("phi_eq: density must be positive");
  if (rho <= rho1_star_) return 1.0;
  if (rho >= rho2_star_) return 0.0;
  return (1.0 / rho - tau2_star()) / (tau1_star() - tau2_star());
}

double TwoPhaseModel::equilibrium_pressure(double rho, double e) const {
  if (!(rho > 0.0) || !(e > 0.0)) {
    throw DomainError("equilibrium_pressure: density and internal energy must be positive");
  }
  if (rho <= rho1_star_) return (gamma1_ - 1.0) * rho * e;
  if (rho <= rho2_star_) return (gamma1_ - 1.0) * rho1_star_ * e;
  return (gamma2_ - 1.0) * rho * e;
}

StateVector TwoPhaseModel::flux(const StateVector& w) const {
  const double rho = w[0];
  const double u = w[1] / rho;
  const double phi = w[3] / rho;
  const double e = w[2] / rho - 0.5 * u * u;
  const double p = pressure(rho, e, phi);
  return {w[1], w[1] * u + p, (w[2] + p) * u, w[3] * u};
}

StateVector TwoPhaseModel::equilibrium_map(const StateVector& w1) const {
  return {w1[0] * phi_eq(w1[0])};
}

double TwoPhaseModel::sound_speed(const StateVector& w) const {
  const double rho = w[0];
  const double u = w[1] / rho;
  const double phi = w[3] / rho;
  const double e = w[2] / rho - 0.5 * u * u;
  const double gamma = mixture_gamma(phi);
  return std::sqrt(gamma * pressure(rho, e, phi) / rho);
}

double TwoPhaseModel::max_wave_speed(const StateVector& w) const {
  return std::abs(w[1] / w[0]) + sound_speed(w);
}

std::optional<std::string> TwoPhaseModel::admissibility_violation(const StateVector& w) const {
  static const char* const kNames[] = {"rho", "rho u", "rho E", "rho phi"};
  for (std::size_t i = 0; i < 4; ++i) {
    if (!std::isfinite(w[i])) return std::string(kNames[i]) + " is not finite";
  }
  std::ostringstream msg;
  msg.precision(17);
  if (!(w[0] > 0.0)) {
    msg << "rho = " << w[0] << " is not positive";
    return msg.str();
  }
  const StateVector prim = to_primitive(w);
  if (!(prim[2] > 0.0)) {
    msg << "p = " << prim[2] << " is not positive";
    return msg.str();
  }
  if (prim[3] < -kFractionTolerance || prim[3] > 1.0 + kFractionTolerance) {
    msg << "phi = " << prim[3] << " outside [0, 1]";
    return msg.str();
  }
  return std::nullopt;
}

StateVector TwoPhaseModel::to_primitive(const StateVector& w) const {
  const double rho = w[0];
  const double u = w[1] / rho;
  const double phi = w[3] / rho;
  const double e = w[2] / rho - 0.5 * u * u;
  return {rho, u, pressure(rho, e, phi), phi};
}

StateVector TwoPhaseModel::from_primitive(const StateVector& p) const {
  const double rho = p[0];
  const double u = p[1];
  const double phi = p[3];
  const double e = p[2] / ((mixture_gamma(phi) - 1.0) * rho);
  return {rho, rho * u, rho * (e + 0.5 * u * u), rho * phi};
}

StateVector TwoPhaseModel::from_equilibrium_primitive(double rho, double u, double p) const {
  return from_primitive({rho, u, p, phi_eq(rho)});
}

}  // namespace relaxsolve
