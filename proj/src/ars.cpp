#include <cmath>
#include <sstream>

#include "relaxsolve/schemes.hpp"

namespace relaxsolve {

void ArsSpeeds::validate() const {
  if (!(left < 0.0 && right > 0.0) || !std::isfinite(left) || !std::isfinite(right)) {
    std::ostringstream msg;
    msg << "wave-speed bounds must satisfy left < 0 < right, got (" << left << ", " << right << ")";
    throw ConfigError(msg.str());
  }
}

StateVector ars_intermediate_state(const StateVector& w_left, const StateVector& w_right,
                                   const ArsSpeeds& speeds, double dt, double dx, double eps,
                                   const StateVector& q_closure, const Model& model) {
  speeds.validate();
  const std::size_t k = model.conserved_size();
  const std::size_t m = model.relaxing_size();
  const double ll = speeds.left;
  const double lr = speeds.right;
  const double jump = lr - ll;

  const StateVector f_left = model.flux(model.exact_source_solution(w_left, dt, eps));
  const StateVector f_right = model.flux(model.exact_source_solution(w_right, dt, eps));

  StateVector star(model.size());
  for (std::size_t i = 0; i < k; ++i) {
    star[i] = (lr * w_right[i] - ll * w_left[i] - (f_right[i] - f_left[i])) / jump;
  }
  const double em1 = decay_minus_one(dt / eps);
  // eps (e^{-dt/eps} - 1) / dt
  const double relaxed_flux_weight = decay_minus_one_over(dt / eps);
  const double average_weight = dx * em1 / (dt * jump);
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t c = k + i;
    star[c] = average_weight * 0.5 * (w_left[c] + w_right[c]) +
              relaxed_flux_weight / jump * (f_right[c] - f_left[c]) -
              (ll * w_left[c] - lr * w_right[c]) / jump - average_weight * q_closure[i];
  }
  return star;
}

StateVector q_brace(const StateVector& w_prev, const StateVector& w_cur, const StateVector& w_next,
                    const StateVector& w1_next_cur, const ArsSpeeds& speeds, double dt, double dx,
                    const Model& model) {
  const double ll = speeds.left;
  const double lr = speeds.right;
  const double jump = lr - ll;
  if (jump == 0.0 || !std::isfinite(jump)) throw ConfigError("q_brace: degenerate wave speeds");
  const std::size_t k = model.conserved_size();
  const StateVector q = model.equilibrium_map(w1_next_cur);
  StateVector out(model.relaxing_size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    const std::size_t c = k + i;
    out[i] = q[i] - w_cur[c] + lr / jump * 0.5 * (w_prev[c] + w_cur[c]) -
             ll / jump * 0.5 * (w_next[c] + w_cur[c]) +
             dt / dx * (lr * ll / jump) * (w_prev[c] - 2.0 * w_cur[c] + w_next[c]);
  }
  return out;
}

FieldState ars_step(const FieldState& field, double dt, double eps, const ArsSpeeds& speeds,
                    const Model& model) {
  speeds.validate();
  const std::size_t n = field.cells.size();
  const std::size_t k = model.conserved_size();
  const std::size_t m = model.relaxing_size();
  const double ll = speeds.left;
  const double lr = speeds.right;
  const double jump = lr - ll;
  const double ratio = dt / field.grid.dx();
  const double em1 = decay_minus_one(dt / eps);
  const double decay = 1.0 + em1;
  const double relaxed_flux_weight = decay_minus_one_over(dt / eps);
  const double dissipation = lr * ll / jump;

  const std::vector<StateVector> ext = apply_neumann_ghosts(field.cells, 1);
  // (i) fluxes of the source-relaxed cell states W(dt); W^L_{j+1/2} and
  // W^R_{j-1/2} are both the relaxed W_j.
  std::vector<StateVector> relaxed_flux(ext.size());
  for (std::size_t i = 0; i < ext.size(); ++i) {
    relaxed_flux[i] = model.flux(model.exact_source_solution(ext[i], dt, eps));
  }

  // Interface i + 1/2 between ext[i] and ext[i + 1], i = 0..n.
  std::vector<StateVector> flux1(n + 1, StateVector(k));
  std::vector<StateVector> flux2(n + 1, StateVector(m));
  for (std::size_t i = 0; i <= n; ++i) {
    const StateVector& wl = ext[i];
    const StateVector& wr = ext[i + 1];
    const StateVector& fl = relaxed_flux[i];
    const StateVector& fr = relaxed_flux[i + 1];
    for (std::size_t c = 0; c < k; ++c) {
      flux1[i][c] = dissipation * (wr[c] - wl[c]) - (ll * fr[c] - lr * fl[c]) / jump;
    }
    for (std::size_t r = 0; r < m; ++r) {
      const std::size_t c = k + r;
      flux2[i][r] = decay * dissipation * (wr[c] - wl[c]) +
                    relaxed_flux_weight / jump * (ll * fr[c] - lr * fl[c]);
    }
  }

  FieldState next{field.grid, field.cells, field.time + dt};
  for (std::size_t j = 0; j < n; ++j) {
    const StateVector& w = field.cells[j];
    StateVector& out = next.cells[j];
    // (ii) conserved update.
    for (std::size_t c = 0; c < k; ++c) out[c] = w[c] - ratio * (flux1[j + 1][c] - flux1[j][c]);
    // (iii) equilibrium at the new conserved state, (iv) relaxing update.
    const StateVector q = model.equilibrium_map(out.slice(0, k));
    for (std::size_t r = 0; r < m; ++r) {
      const std::size_t c = k + r;
      out[c] = w[c] - ratio * (flux2[j + 1][r] - flux2[j][r]) - em1 * (q[r] - w[c]);
    }
  }
  return next;
}

}  // namespace relaxsolve
