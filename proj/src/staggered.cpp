#include <cmath>

#include "relaxsolve/schemes.hpp"

namespace relaxsolve {

HalfStepField staggered_half_step(std::span<const StateVector> cells, double dt_half, double dx,
                                  double eps, const Model& model) {
  if (cells.size() < 2) throw std::invalid_argument("staggered_half_step: need at least two states");
  const std::size_t k = model.conserved_size();
  const std::size_t m = model.relaxing_size();
  const double ratio = dt_half / dx;
  // 1 / (1 + dt_half/eps), the implicit source weight.
  const double keep = 1.0 / (1.0 + dt_half / eps);

  HalfStepField out;
  out.states.resize(cells.size() - 1);

  StateVector flux_left = model.flux(model.exact_source_solution(cells[0], dt_half, eps));
  for (std::size_t j = 1; j < cells.size(); ++j) {
    const StateVector& wl = cells[j - 1];
    const StateVector& wr = cells[j];
    const StateVector flux_right = model.flux(model.exact_source_solution(wr, dt_half, eps));

    StateVector w(model.size());
    for (std::size_t i = 0; i < k; ++i) {
      w[i] = 0.5 * (wl[i] + wr[i]) - ratio * (flux_right[i] - flux_left[i]);
    }
    const StateVector q = model.equilibrium_map(w.slice(0, k));
    for (std::size_t i = 0; i < m; ++i) {
      const std::size_t c = k + i;
      const double explicit_part = 0.5 * (wl[c] + wr[c]) - ratio * (flux_right[c] - flux_left[c]);
      w[c] = q[i] + (explicit_part - q[i]) * keep;
    }
    out.states[j - 1] = w;
    flux_left = flux_right;
  }
  return out;
}

FieldState staggered_step(const FieldState& field, double dt, double eps, const Model& model,
                          std::vector<StateVector>* interfaces) {
  const double dx = field.grid.dx();
  const double dt_half = 0.5 * dt;
  const std::vector<StateVector> extended = apply_neumann_ghosts(field.cells, 1);
  // n_cells + 1 interface states x_{-1/2} .. x_{N-1/2}; the boundary ones see
  // the ghost copies, so no further extension is needed for the second half.
  HalfStepField half = staggered_half_step(extended, dt_half, dx, eps, model);
  half.time = field.time + dt_half;
  HalfStepField full = staggered_half_step(half.states, dt_half, dx, eps, model);

  FieldState next{field.grid, std::move(full.states), field.time + dt};
  if (interfaces) *interfaces = std::move(half.states);
  return next;
}

}  // namespace relaxsolve
