#include "relaxsolve/jin_xin.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace relaxsolve {

namespace {
// Slack on the interval membership test; the discrete invariant-domain
// property holds up to round-off only.
constexpr double kIntervalTolerance = 1e-12;
}  // namespace

double ScalarFlux::max_speed(const Interval& k) const {
  if (kind_ == Kind::linear) return std::abs(speed_);
  return std::max(std::abs(k.lo), std::abs(k.hi));
}

StateVector jinxin_flux(double u, double v, double lambda) { return {v, lambda * lambda * u}; }

JinXinModel::JinXinModel(double lambda, ScalarFlux g, Interval admissible_u)
    : lambda_(lambda), g_(g), k_(admissible_u) {
  if (!(k_.hi >= k_.lo) || !std::isfinite(k_.lo) || !std::isfinite(k_.hi)) {
    throw ConfigError("jinxin: admissible interval requires finite bounds with lo <= hi");
  }
  if (!(lambda > 0.0) || !std::isfinite(lambda)) throw ConfigError("jinxin: lambda must be positive");
  const double g_speed = g_.max_speed(k_);
  if (!(lambda_ > g_speed)) {
    std::ostringstream msg;
    msg << "jinxin: subcharacteristic condition violated, lambda = " << lambda_
        << " <= max |g'(u)| = " << g_speed << " on [" << k_.lo << ", " << k_.hi << "]";
    throw ConfigError(msg.str());
  }
}

bool JinXinModel::in_invariant_domain(const StateVector& w, double tol) const {
  const double r = w[0] + w[1] / lambda_;
  const double s = w[0] - w[1] / lambda_;
  return k_plus().contains(r, tol) && k_minus().contains(s, tol);
}

StateVector JinXinModel::flux(const StateVector& w) const { return jinxin_flux(w[0], w[1], lambda_); }

StateVector JinXinModel::equilibrium_map(const StateVector& w1) const { return {g_(w1[0])}; }

std::optional<std::string> JinXinModel::admissibility_violation(const StateVector& w) const {
  if (!std::isfinite(w[0])) return "u is not finite";
  if (!std::isfinite(w[1])) return "v is not finite";
  if (!k_.contains(w[0], kIntervalTolerance)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "u = " << w[0] << " outside K = [" << k_.lo << ", " << k_.hi << "]";
    return msg.str();
  }
  return std::nullopt;
}

}  // namespace relaxsolve
