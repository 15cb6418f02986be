#include "relaxsolve/core.hpp"

#include <cmath>
#include <sstream>
#include <string>

#include "relaxsolve/schemes.hpp"

namespace relaxsolve {

std::string_view to_string(SchemeKind kind) {
  switch (kind) {
    case SchemeKind::staggered: return "staggered";
    case SchemeKind::ars: return "ars";
    case SchemeKind::splitting: return "splitting";
  }
  return "unknown";
}

SchemeKind parse_scheme_kind(std::string_view name) {
  if (name == "staggered") return SchemeKind::staggered;
  if (name == "ars") return SchemeKind::ars;
  if (name == "splitting") return SchemeKind::splitting;
  throw ConfigError("unknown scheme '" + std::string(name) + "' (expected staggered, ars or splitting)");
}

void TimeControls::validate() const {
  if (!(cfl_number > 0.0 && cfl_number <= 1.0)) {
    throw ConfigError("cfl number must lie in (0, 1], got " + std::to_string(cfl_number));
  }
  if (!(t_final >= 0.0) || !std::isfinite(t_final)) {
    throw ConfigError("t_final must be finite and non-negative");
  }
}

std::vector<StateVector> apply_neumann_ghosts(std::span<const StateVector> cells, std::size_t width) {
  if (width == 0) throw std::invalid_argument("apply_neumann_ghosts: width must be >= 1");
  if (cells.empty()) throw std::invalid_argument("apply_neumann_ghosts: no interior cells");
  std::vector<StateVector> out;
  out.reserve(cells.size() + 2 * width);
  out.insert(out.end(), width, cells.front());
  out.insert(out.end(), cells.begin(), cells.end());
  out.insert(out.end(), width, cells.back());
  return out;
}

double compute_dt(const FieldState& field, const Model& model, const TimeControls& controls) {
  const double speed = model.max_wave_speed(field.cells);
  if (!(speed > 0.0) || !std::isfinite(speed)) {
    std::ostringstream msg;
    msg << "compute_dt: maximal wave speed must be positive and finite, got " << speed;
    throw ConfigError(msg.str());
  }
  double dt = controls.cfl_number * field.grid.dx() / speed;
  if (controls.scheme == SchemeKind::ars) dt *= 0.5;
  const double remaining = controls.t_final - field.time;
  // Merge a would-be sliver into the last step.
  if (remaining <= dt * (1.0 + 1e-12)) dt = remaining;
  return dt;
}

void check_admissible(const Model& model, std::span<const StateVector> cells) {
  for (std::size_t j = 0; j < cells.size(); ++j) {
    if (auto why = model.admissibility_violation(cells[j])) throw AdmissibilityError(j, *why);
  }
}

FieldState run(const Model& model, const FieldState& initial, const TimeControls& controls,
               double eps, const RunOptions& options) {
  controls.validate();
  if (!(eps > 0.0)) throw ConfigError("relaxation parameter eps must be positive");
  if (initial.cells.size() != initial.grid.n_cells()) {
    throw ConfigError("initial field does not match its grid");
  }
  for (const auto& w : initial.cells) {
    if (w.size() != model.size()) throw ConfigError("initial state size does not match the model");
  }
  check_admissible(model, initial.cells);

  FieldState field = initial;
  std::vector<StateVector> interfaces;
  const bool want_interfaces = controls.scheme == SchemeKind::staggered && bool(options.observer);
  while (field.time < controls.t_final) {
    const double dt = compute_dt(field, model, controls);
    if (!(dt > 0.0)) break;
    FieldState next = advance(controls.scheme, field, dt, eps, model, options.kernels,
                              want_interfaces ? &interfaces : nullptr);
    // Land exactly on t_final on the last step.
    next.time = (controls.t_final - field.time == dt) ? controls.t_final : field.time + dt;
    check_admissible(model, next.cells);
    if (options.observer) {
      options.observer(StepRecord{field, next, dt,
                                  want_interfaces ? std::span<const StateVector>(interfaces)
                                                  : std::span<const StateVector>()});
    }
    field = std::move(next);
  }
  return field;
}

}  // namespace relaxsolve
