#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "relaxsolve/config.hpp"
#include "relaxsolve/state.hpp"

namespace relaxsolve {

// sqrt(sum_j (a_j - b_j)^2 dx) and max_j |a_j - b_j| on one component.
// ConfigError unless the grids coincide.
double l2_error(const FieldState& a, const FieldState& b, std::size_t component);
double linf_error(const FieldState& a, const FieldState& b, std::size_t component);

// sum_j w_j[component] dx
double total(const FieldState& field, std::size_t component);

// Cell averages of `fine` over the cells of `coarse`; the fine cell count must
// be an integer multiple of the coarse one on the same interval.
FieldState restrict_to(const FieldState& fine, const Grid1D& coarse);

// u = x / (1 + t).
double burgers_exact_smooth(double t, double x);

// Entropy solution of Burgers for one jump at x0.
double burgers_riemann_exact(double t, double x, double u_left, double u_right, double x0 = 0.0);

// Entropy solution of Burgers for u = left | middle | right with jumps at
// x1 < x2, for left > middle < right (shock followed by a rarefaction), valid
// through the shock/fan interaction.
struct ThreeStateData {
  double left = 0.0;
  double middle = -1.0;
  double right = 0.5;
  double x1 = 0.3;
  double x2 = 0.7;
};
double burgers_three_state_exact(double t, double x, const ThreeStateData& data = {});

// Cell averages of u(x) (midpoint rule, `samples` points per cell) with
// v = g(u_j) attached, i.e. an equilibrium Jin-Xin field.
FieldState equilibrium_cell_averages(const Grid1D& grid, double t, const std::function<double(double)>& u,
                                     const std::function<double(double)>& g, std::size_t samples = 64);

// log(e_coarse / e_fine) / log(dx_coarse / dx_fine).
double convergence_rate(double dx_coarse, double e_coarse, double dx_fine, double e_fine);

struct SweepRow {
  double parameter = 0.0;
  double l2 = 0.0;
  double linf = 0.0;
  std::optional<double> rate;
  double runtime_s = 0.0;
  std::string error;  // non-empty when the run failed; norms are then NaN
};

struct SweepResult {
  std::string parameter_name;  // "eps" or "dx"
  std::vector<SweepRow> rows;  // ascending parameter
};

// Reference the runs of `config` are measured against, on the run's grid.
// Exact for burgers-smooth under `automatic` (and for jinxin-3state when the
// kind is `exact`), otherwise a fine-mesh splitting run restricted to the grid.
FieldState reference_solution(const RunConfig& config);

struct SweepOptions {
  std::size_t threads = 1;
};

// One run per epsilon, all on config's grid.
SweepResult epsilon_sweep(const RunConfig& config, const std::vector<double>& eps_values,
                          const SweepOptions& options = {});

// One run per mesh size; dx must divide the domain length into an integer
// number of cells (to 1e-9 relative).
SweepResult refinement_sweep(const RunConfig& config, const std::vector<double>& dx_values,
                             const SweepOptions& options = {});

// Fills `rate` on every successful row against the next coarser successful
// row (rows sorted by ascending dx); failed rows are skipped.
void fill_rates(SweepResult& result);

}  // namespace relaxsolve
