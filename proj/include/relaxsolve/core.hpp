#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string_view>
#include <vector>

#include "relaxsolve/model.hpp"
#include "relaxsolve/state.hpp"

namespace relaxsolve {

enum class SchemeKind { staggered, ars, splitting };

std::string_view to_string(SchemeKind kind);
// Accepts "staggered", "ars", "splitting"; throws ConfigError otherwise.
SchemeKind parse_scheme_kind(std::string_view name);

struct TimeControls {
  double cfl_number = 0.9;
  double t_final = 0.0;
  SchemeKind scheme = SchemeKind::staggered;

  // 0 < cfl <= 1, t_final >= 0 (t_final = 0 is a no-op run).
  void validate() const;
};

// Interior cells with `width` copies of the end cells prepended/appended
// (homogeneous Neumann condition).
std::vector<StateVector> apply_neumann_ghosts(std::span<const StateVector> cells, std::size_t width);

// Stable step for the selected scheme, clipped so that the last step lands on
// t_final:
//   staggered, splitting: dt = cfl dx / s
//   ars:                  dt = cfl dx / (2 s)
// with s = max wave speed over the field. ConfigError if s is zero or not finite.
double compute_dt(const FieldState& field, const Model& model, const TimeControls& controls);

// Kernel selection for the scheme updates. `automatic` routes models with a
// vectorised implementation to it; `generic` always uses the model interface.
enum class KernelPolicy { automatic, generic };

struct StepRecord {
  const FieldState& before;
  const FieldState& after;
  double dt;
  // Interface states of the staggered scheme's first half-step (n_cells + 1
  // entries); empty for the other schemes.
  std::span<const StateVector> interface_states;
};

using StepObserver = std::function<void(const StepRecord&)>;

struct RunOptions {
  KernelPolicy kernels = KernelPolicy::automatic;
  StepObserver observer;
};

// Marches `initial` to controls.t_final. Each step: ghosts, dt, scheme update,
// time += dt, admissibility check. Throws AdmissibilityError naming the cell
// and component on the first inadmissible state.
FieldState run(const Model& model, const FieldState& initial, const TimeControls& controls,
               double eps, const RunOptions& options = {});

// Admissibility of every cell; throws AdmissibilityError on the first failure.
void check_admissible(const Model& model, std::span<const StateVector> cells);

}  // namespace relaxsolve
