#include "relaxsolve/schemes.hpp"

namespace relaxsolve {

StateVector hll_flux(const StateVector& w_left, const StateVector& w_right, const ArsSpeeds& speeds,
                     const Model& model) {
  speeds.validate();
  const double ll = speeds.left;
  const double lr = speeds.right;
  const StateVector fl = model.flux(w_left);
  const StateVector fr = model.flux(w_right);
  StateVector out(model.size());
  for (std::size_t c = 0; c < out.size(); ++c) {
    out[c] = (lr * fl[c] - ll * fr[c] + lr * ll * (w_right[c] - w_left[c])) / (lr - ll);
  }
  return out;
}

StateVector implicit_source_step(const StateVector& w, double dt, double eps, const Model& model) {
  const std::size_t k = model.conserved_size();
  const StateVector q = model.equilibrium_of(w);
  const double keep = 1.0 / (1.0 + dt / eps);
  StateVector out = w;
  for (std::size_t r = 0; r < q.size(); ++r) out[k + r] = q[r] + (w[k + r] - q[r]) * keep;
  return out;
}

FieldState splitting_step(const FieldState& field, double dt, double eps, const ArsSpeeds& speeds,
                          const Model& model) {
  const std::size_t n = field.cells.size();
  const double ratio = dt / field.grid.dx();
  const std::vector<StateVector> ext = apply_neumann_ghosts(field.cells, 1);
  std::vector<StateVector> flux(n + 1);
  for (std::size_t i = 0; i <= n; ++i) flux[i] = hll_flux(ext[i], ext[i + 1], speeds, model);

  FieldState next{field.grid, field.cells, field.time + dt};
  for (std::size_t j = 0; j < n; ++j) {
    StateVector w = field.cells[j];
    for (std::size_t c = 0; c < w.size(); ++c) w[c] -= ratio * (flux[j + 1][c] - flux[j][c]);
    next.cells[j] = implicit_source_step(w, dt, eps, model);
  }
  return next;
}

}  // namespace relaxsolve
