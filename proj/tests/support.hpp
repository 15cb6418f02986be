#pragma once

// Independent reference implementations used as test oracles. Nothing here
// calls the library's scheme code; only model fluxes and equilibrium maps.

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <vector>

#include "relaxsolve/chaplygin.hpp"
#include "relaxsolve/jin_xin.hpp"
#include "relaxsolve/model.hpp"
#include "relaxsolve/state.hpp"
#include "relaxsolve/two_phase.hpp"

namespace oracle {

using relaxsolve::FieldState;
using relaxsolve::Grid1D;
using relaxsolve::Model;
using relaxsolve::StateVector;

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

// Random admissible states. `spread` controls the distance from equilibrium.
inline StateVector random_jinxin(std::mt19937_64& rng, const relaxsolve::JinXinModel& m,
                                 double spread = 0.3) {
  const auto k = m.admissible_interval();
  const double u = uniform(rng, k.lo, k.hi);
  return {u, m.g()(u) + uniform(rng, -spread, spread)};
}

inline StateVector random_chaplygin(std::mt19937_64& rng, double spread = 0.1) {
  const double tau = uniform(rng, 0.8, 1.2);
  return {tau, uniform(rng, -0.3, 0.3), tau * (1.0 + uniform(rng, -spread, spread))};
}

inline StateVector random_two_phase(std::mt19937_64& rng, const relaxsolve::TwoPhaseModel& m) {
  const double rho = uniform(rng, 0.7, 1.2);
  const double phi = uniform(rng, 0.2, 0.9);
  return m.from_primitive({rho, uniform(rng, -0.3, 0.5), uniform(rng, 0.08, 0.2), phi});
}

inline FieldState random_field(std::mt19937_64& rng, const Model& model, std::size_t n,
                               double x_min = -1.0, double x_max = 1.0) {
  FieldState f{Grid1D(x_min, x_max, n), std::vector<StateVector>(n), 0.0};
  for (auto& w : f.cells) {
    if (const auto* jx = dynamic_cast<const relaxsolve::JinXinModel*>(&model)) {
      w = random_jinxin(rng, *jx);
    } else if (const auto* tp = dynamic_cast<const relaxsolve::TwoPhaseModel*>(&model)) {
      w = random_two_phase(rng, *tp);
    } else {
      w = random_chaplygin(rng);
    }
  }
  return f;
}

inline std::vector<StateVector> with_copy_ghosts(const std::vector<StateVector>& cells) {
  std::vector<StateVector> ext;
  ext.push_back(cells.front());
  ext.insert(ext.end(), cells.begin(), cells.end());
  ext.push_back(cells.back());
  return ext;
}

inline StateVector axpy(const StateVector& a, double s, const StateVector& b) {
  StateVector out = a;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += s * b[i];
  return out;
}

using FluxFn = std::function<StateVector(const StateVector&)>;

// Conservative update W_j - dt/dx (F_{j+1/2} - F_{j-1/2}) with copy ghosts.
inline std::vector<StateVector> conservative_update(
    const std::vector<StateVector>& cells, double dt, double dx,
    const std::function<StateVector(const StateVector&, const StateVector&)>& flux) {
  const auto ext = with_copy_ghosts(cells);
  std::vector<StateVector> out(cells.size());
  for (std::size_t j = 0; j < cells.size(); ++j) {
    const StateVector fr = flux(ext[j + 1], ext[j + 2]);
    const StateVector fl = flux(ext[j], ext[j + 1]);
    StateVector w = cells[j];
    for (std::size_t c = 0; c < w.size(); ++c) w[c] -= dt / dx * (fr[c] - fl[c]);
    out[j] = w;
  }
  return out;
}

// FORCE: average of the Lax-Friedrichs and the two-step Lax-Wendroff fluxes.
inline std::vector<StateVector> force_step(const std::vector<StateVector>& cells, double dt, double dx,
                                           const FluxFn& f) {
  return conservative_update(cells, dt, dx, [&](const StateVector& a, const StateVector& b) {
    const StateVector fa = f(a);
    const StateVector fb = f(b);
    StateVector lf(a.size());
    StateVector mid(a.size());
    for (std::size_t c = 0; c < a.size(); ++c) {
      lf[c] = 0.5 * (fa[c] + fb[c]) - 0.5 * dx / dt * (b[c] - a[c]);
      mid[c] = 0.5 * (a[c] + b[c]) - 0.5 * dt / dx * (fb[c] - fa[c]);
    }
    const StateVector lw = f(mid);
    StateVector out(a.size());
    for (std::size_t c = 0; c < a.size(); ++c) out[c] = 0.5 * (lf[c] + lw[c]);
    return out;
  });
}

inline std::vector<StateVector> hll_step(const std::vector<StateVector>& cells, double dt, double dx,
                                         double sl, double sr, const FluxFn& f) {
  return conservative_update(cells, dt, dx, [&](const StateVector& a, const StateVector& b) {
    const StateVector fa = f(a);
    const StateVector fb = f(b);
    StateVector out(a.size());
    for (std::size_t c = 0; c < a.size(); ++c) {
      out[c] = (sr * fa[c] - sl * fb[c] + sl * sr * (b[c] - a[c])) / (sr - sl);
    }
    return out;
  });
}

// Scalar schemes on Burgers, g(u) = u^2/2, with copy ghosts.
inline std::vector<double> rusanov_burgers_step(const std::vector<double>& u, double dt, double dx,
                                                double speed) {
  const std::size_t n = u.size();
  auto at = [&](std::ptrdiff_t j) { return u[std::clamp<std::ptrdiff_t>(j, 0, n - 1)]; };
  std::vector<double> out(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double um = at(j - 1), u0 = at(j), up = at(j + 1);
    out[j] = u0 - dt / dx * (-0.5 * speed * (up - 2.0 * u0 + um) + 0.5 * (0.5 * up * up - 0.5 * um * um));
  }
  return out;
}

inline std::vector<double> force_burgers_step(const std::vector<double>& u, double dt, double dx) {
  const std::size_t n = u.size();
  auto at = [&](std::ptrdiff_t j) { return u[std::clamp<std::ptrdiff_t>(j, 0, n - 1)]; };
  auto g = [](double x) { return 0.5 * x * x; };
  auto flux = [&](double a, double b) {
    const double lf = 0.5 * (g(a) + g(b)) - 0.5 * dx / dt * (b - a);
    const double lw = g(0.5 * (a + b) - 0.5 * dt / dx * (g(b) - g(a)));
    return 0.5 * (lf + lw);
  };
  std::vector<double> out(n);
  for (std::size_t j = 0; j < n; ++j) {
    const auto i = static_cast<std::ptrdiff_t>(j);
    out[j] = u[j] - dt / dx * (flux(at(i), at(i + 1)) - flux(at(i - 1), at(i)));
  }
  return out;
}

// Classical RK4 on dW2/dt = (Q(W1) - W2)/eps.
inline StateVector rk4_source(const Model& m, const StateVector& w0, double t, double eps,
                              int substeps) {
  const std::size_t k = m.conserved_size();
  auto rhs = [&](const StateVector& w) {
    StateVector d(w.size());
    const StateVector q = m.equilibrium_map(w.slice(0, k));
    for (std::size_t r = 0; r < q.size(); ++r) d[k + r] = (q[r] - w[k + r]) / eps;
    return d;
  };
  StateVector w = w0;
  const double h = t / substeps;
  for (int s = 0; s < substeps; ++s) {
    const StateVector k1 = rhs(w);
    const StateVector k2 = rhs(axpy(w, 0.5 * h, k1));
    const StateVector k3 = rhs(axpy(w, 0.5 * h, k2));
    const StateVector k4 = rhs(axpy(w, h, k3));
    for (std::size_t i = 0; i < w.size(); ++i) w[i] += h / 6.0 * (k1[i] + 2 * k2[i] + 2 * k3[i] + k4[i]);
  }
  return w;
}

inline StateVector relax(const Model& m, const StateVector& w, double t, double eps) {
  const std::size_t k = m.conserved_size();
  const StateVector q = m.equilibrium_map(w.slice(0, k));
  StateVector out = w;
  const double decay = std::exp(-t / eps);
  for (std::size_t r = 0; r < q.size(); ++r) out[k + r] = q[r] + (w[k + r] - q[r]) * decay;
  return out;
}

// General per-interface source closure with speeds (l_m, r_m) at j-1/2 and
// (l_p, r_p) at j+1/2.
inline StateVector q_general(const Model& m, const StateVector& wm, const StateVector& w0,
                             const StateVector& wp, const StateVector& w1_next, double l_m, double r_m,
                             double l_p, double r_p, double dt, double dx) {
  const std::size_t k = m.conserved_size();
  const double jm = r_m - l_m;
  const double jp = r_p - l_p;
  const StateVector q = m.equilibrium_map(w1_next);
  StateVector out(m.relaxing_size());
  for (std::size_t r = 0; r < out.size(); ++r) {
    const std::size_t c = k + r;
    const double num = jm * jp * (-q[r] + w0[c]) -
                       dt / dx * (r_m * l_m * jp * (wm[c] - w0[c]) + l_p * r_p * jm * (wp[c] - w0[c])) -
                       r_m * jp * 0.5 * (wm[c] + w0[c]) + l_p * jm * 0.5 * (wp[c] + w0[c]);
    out[r] = num / (l_p * jm - r_m * jp);
  }
  return out;
}

// Three-state solver intermediate state written out from its definition.
inline StateVector intermediate(const Model& m, const StateVector& wl, const StateVector& wr, double sl,
                                double sr, double dt, double dx, double eps, const StateVector& qc) {
  const std::size_t k = m.conserved_size();
  const StateVector fl = m.flux(relax(m, wl, dt, eps));
  const StateVector fr = m.flux(relax(m, wr, dt, eps));
  const double jump = sr - sl;
  const double e = std::expm1(-dt / eps);
  StateVector star(m.size());
  for (std::size_t c = 0; c < k; ++c) star[c] = -(fr[c] - fl[c]) / jump + (sr * wr[c] - sl * wl[c]) / jump;
  for (std::size_t r = 0; r < m.relaxing_size(); ++r) {
    const std::size_t c = k + r;
    star[c] = dx / (dt * jump) * e * 0.5 * (wl[c] + wr[c]) + e * eps / (dt * jump) * (fr[c] - fl[c]) -
              (sl * wl[c] - sr * wr[c]) / jump - e * dx / (dt * jump) * qc[r];
  }
  return star;
}

// Godunov projection of juxtaposed three-state solvers, {Q} per cell from the
// general closure (uniform speeds here).
inline std::vector<StateVector> projection_step(const Model& m, const std::vector<StateVector>& cells,
                                                double dt, double dx, double eps, double sl, double sr) {
  const std::size_t n = cells.size();
  const std::size_t k = m.conserved_size();
  const auto ext = with_copy_ghosts(cells);
  std::vector<StateVector> out(n);
  for (std::size_t j = 0; j < n; ++j) {
    const StateVector& wm = ext[j];
    const StateVector& w0 = ext[j + 1];
    const StateVector& wp = ext[j + 2];
    // W1 at the new time only needs the conserved intermediate states.
    const StateVector zero(m.relaxing_size());
    const StateVector sm1 = intermediate(m, wm, w0, sl, sr, dt, dx, eps, zero);
    const StateVector sp1 = intermediate(m, w0, wp, sl, sr, dt, dx, eps, zero);
    StateVector w1_next(k);
    for (std::size_t c = 0; c < k; ++c) {
      w1_next[c] = w0[c] - dt / dx * (sr * (w0[c] - sm1[c]) - sl * (w0[c] - sp1[c]));
    }
    const StateVector qc = q_general(m, wm, w0, wp, w1_next, sl, sr, sl, sr, dt, dx);
    const StateVector sm = intermediate(m, wm, w0, sl, sr, dt, dx, eps, qc);
    const StateVector sp = intermediate(m, w0, wp, sl, sr, dt, dx, eps, qc);
    StateVector w(m.size());
    for (std::size_t c = 0; c < m.size(); ++c) {
      w[c] = w0[c] - dt / dx * (sr * (w0[c] - sm[c]) - sl * (w0[c] - sp[c]));
    }
    out[j] = w;
  }
  return out;
}

inline double max_diff(const std::vector<StateVector>& a, const std::vector<StateVector>& b) {
  double m = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) {
    for (std::size_t c = 0; c < a[j].size(); ++c) m = std::max(m, std::abs(a[j][c] - b[j][c]));
  }
  return m;
}

}  // namespace oracle
