#include "relaxsolve/chaplygin.hpp"

#include <cmath>
#include <sstream>

namespace relaxsolve {

ChaplyginModel::ChaplyginModel(double a, double gamma) : a_(a), gamma_(gamma) {
  if (!(a > 0.0) || !std::isfinite(a)) throw ConfigError("chaplygin: a must be positive");
  if (!(gamma > 1.0) || !std::isfinite(gamma)) throw ConfigError("chaplygin: gamma must exceed 1");
}

double ChaplyginModel::pressure(double covolume) const { return std::pow(covolume, -gamma_); }

double ChaplyginModel::pressure_slope(double covolume) const {
  return gamma_ * std::pow(covolume, -gamma_ - 1.0);
}

StateVector ChaplyginModel::flux(const StateVector& w) const {
  const double tau = w[0];
  const double u = w[1];
  const double t = w[2];
  return {-u, pressure(t) + a_ * a_ * (t - tau), 0.0};
}

double ChaplyginModel::entropy_at(double tau, double u, double t) const {
  if (!(tau > 0.0) || !(t > 0.0)) throw DomainError("chaplygin entropy: tau and T must be positive");
  const double gap = t - tau;
  return 0.5 * u * u + std::pow(t, 1.0 - gamma_) / (gamma_ - 1.0) + pressure(t) * gap +
         0.5 * a_ * a_ * gap * gap;
}

double ChaplyginModel::entropy_source_at(double tau, double /*u*/, double t) const {
  if (!(tau > 0.0) || !(t > 0.0)) {
    throw DomainError("chaplygin entropy source: tau and T must be positive");
  }
  const double gap = t - tau;
  return -(a_ * a_ - pressure_slope(t)) * gap * gap;
}

std::optional<std::string> ChaplyginModel::admissibility_violation(const StateVector& w) const {
  for (std::size_t i = 0; i < 3; ++i) {
    if (!std::isfinite(w[i])) return primitive_names()[i] + " is not finite";
  }
  std::ostringstream msg;
  msg.precision(17);
  if (!(w[0] > 0.0)) {
    msg << "tau = " << w[0] << " is not positive";
    return msg.str();
  }
  if (!(w[2] > 0.0)) {
    msg << "T = " << w[2] << " is not positive";
    return msg.str();
  }
  if (!subcharacteristic(w[2])) {
    msg << "T = " << w[2] << " violates a^2 > gamma T^(-gamma-1)";
    return msg.str();
  }
  return std::nullopt;
}

}  // namespace relaxsolve
