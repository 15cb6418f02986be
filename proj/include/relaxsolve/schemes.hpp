#pragma once

#include <span>
#include <vector>

#include "relaxsolve/core.hpp"
#include "relaxsolve/model.hpp"
#include "relaxsolve/state.hpp"

namespace relaxsolve {

// Wave-speed bounds of a three-state solver, left < 0 < right.
struct ArsSpeeds {
  double left = -1.0;
  double right = 1.0;

  static ArsSpeeds symmetric(double speed) { return {-speed, speed}; }
  // Throws ConfigError unless left < 0 < right.
  void validate() const;
};

// ---------------------------------------------------------------------------
// Staggered scheme.

struct HalfStepField {
  std::vector<StateVector> states;
  double time = 0.0;
};

// One staggered half-step over consecutive pairs of `cells`: interface j - 1/2
// sits between cells[j-1] and cells[j] and receives
//   W1* = (W1_{j-1} + W1_j)/2 - (dt_half/dx) (f1(W_R') - f1(W_L'))
//   W2* = Q(W1*) + (a - Q(W1*)) / (1 + dt_half/eps),
//   a   = (W2_{j-1} + W2_j)/2 - (dt_half/dx) (f2(W_R') - f2(W_L')),
// where W_L', W_R' are the neighbours relaxed by the exact source solution
// over dt_half. Output has cells.size() - 1 entries.
HalfStepField staggered_half_step(std::span<const StateVector> cells, double dt_half, double dx,
                                  double eps, const Model& model);

// Full step: half-step on the ghost-extended cells, then the same half-step on
// the interface states. `interfaces`, when non-null, receives the first
// half-step states.
FieldState staggered_step(const FieldState& field, double dt, double eps, const Model& model,
                          std::vector<StateVector>* interfaces = nullptr);

// ---------------------------------------------------------------------------
// Source-aware approximate Riemann solver.

// Intermediate state W* of the three-state solver between w_left and w_right,
// for a given interface source closure {Q} (an (n-k)-vector).
StateVector ars_intermediate_state(const StateVector& w_left, const StateVector& w_right,
                                   const ArsSpeeds& speeds, double dt, double dx, double eps,
                                   const StateVector& q_closure, const Model& model);

// {Q} for cell j under uniform speeds, chosen so that the eps -> 0 update lands
// on W2_j^{n+1} = Q(W1_j^{n+1}). ConfigError for degenerate speeds.
StateVector q_brace(const StateVector& w_prev, const StateVector& w_cur, const StateVector& w_next,
                    const StateVector& w1_next_cur, const ArsSpeeds& speeds, double dt, double dx,
                    const Model& model);

// Flux-form update: conserved fluxes first, then Q(W1^{n+1}), then the
// relaxing fluxes with the exponential source correction.
FieldState ars_step(const FieldState& field, double dt, double eps, const ArsSpeeds& speeds,
                    const Model& model);

// ---------------------------------------------------------------------------
// Splitting reference: HLL convection followed by an implicit source step.

StateVector hll_flux(const StateVector& w_left, const StateVector& w_right, const ArsSpeeds& speeds,
                     const Model& model);

// Implicit relaxation of w over dt (W1 frozen):
//   W2 <- (W2 + (dt/eps) Q(W1)) / (1 + dt/eps).
StateVector implicit_source_step(const StateVector& w, double dt, double eps, const Model& model);

FieldState splitting_step(const FieldState& field, double dt, double eps, const ArsSpeeds& speeds,
                          const Model& model);

// ---------------------------------------------------------------------------

// One step of `kind` with the symmetric speed bound of the field. Uses the
// vectorised Jin-Xin/Burgers kernels when the policy and model allow it.
FieldState advance(SchemeKind kind, const FieldState& field, double dt, double eps,
                   const Model& model, KernelPolicy policy = KernelPolicy::automatic,
                   std::vector<StateVector>* interfaces = nullptr);

}  // namespace relaxsolve
