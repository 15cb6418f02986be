#include "relaxsolve/model.hpp"

#include <algorithm>
#include <cmath>

namespace relaxsolve {

double decay_minus_one(double x) { return std::expm1(-x); }

double decay_minus_one_over(double x) {
  if (x == 0.0) return -1.0;
  if (std::isinf(x)) return 0.0;
  return std::expm1(-x) / x;
}

StateVector Model::source(const StateVector& w) const {
  StateVector r(size());
  const StateVector q = equilibrium_of(w);
  const std::size_t k = conserved_size();
  for (std::size_t i = 0; i < q.size(); ++i) r[k + i] = q[i] - w[k + i];
  return r;
}

StateVector Model::exact_source_solution(const StateVector& w, double t, double eps) const {
  const StateVector q = equilibrium_of(w);
  // W2 + (Q - W2)(1 - e^{-t/eps}); exact identity at t = 0 and on the manifold.
  const double relaxed = -decay_minus_one(t / eps);
  StateVector out = w;
  const std::size_t k = conserved_size();
  for (std::size_t i = 0; i < q.size(); ++i) out[k + i] = w[k + i] + (q[i] - w[k + i]) * relaxed;
  return out;
}

double Model::max_wave_speed(std::span<const StateVector> cells) const {
  double s = 0.0;
  for (const auto& w : cells) s = std::max(s, max_wave_speed(w));
  return s;
}

}  // namespace relaxsolve
