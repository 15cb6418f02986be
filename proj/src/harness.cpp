#include "relaxsolve/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <limits>
#include <thread>

#include "relaxsolve/core.hpp"
#include "relaxsolve/jin_xin.hpp"

namespace relaxsolve {

namespace {

void require_same_grid(const FieldState& a, const FieldState& b, std::size_t component) {
  if (!(a.grid == b.grid) || a.cells.size() != b.cells.size()) {
    throw ConfigError("error norm: fields live on different grids");
  }
  for (std::size_t j = 0; j < a.cells.size(); ++j) {
    if (component >= a.cells[j].size() || component >= b.cells[j].size()) {
      throw ConfigError("error norm: component index out of range");
    }
  }
}

}  // namespace

double l2_error(const FieldState& a, const FieldState& b, std::size_t component) {
  require_same_grid(a, b, component);
  double sum = 0.0;
  for (std::size_t j = 0; j < a.cells.size(); ++j) {
    const double d = a.cells[j][component] - b.cells[j][component];
    sum += d * d;
  }
  return std::sqrt(sum * a.grid.dx());
}

double linf_error(const FieldState& a, const FieldState& b, std::size_t component) {
  require_same_grid(a, b, component);
  double m = 0.0;
  for (std::size_t j = 0; j < a.cells.size(); ++j) {
    m = std::max(m, std::abs(a.cells[j][component] - b.cells[j][component]));
  }
  return m;
}

double total(const FieldState& field, std::size_t component) {
  double sum = 0.0;
  for (const auto& w : field.cells) sum += w[component];
  return sum * field.grid.dx();
}

FieldState restrict_to(const FieldState& fine, const Grid1D& coarse) {
  const std::size_t nf = fine.grid.n_cells();
  const std::size_t nc = coarse.n_cells();
  if (nf % nc != 0) throw ConfigError("restrict_to: fine cell count is not a multiple of the coarse one");
  const double tol = 1e-12 * coarse.length();
  if (std::abs(fine.grid.x_min() - coarse.x_min()) > tol ||
      std::abs(fine.grid.x_max() - coarse.x_max()) > tol) {
    throw ConfigError("restrict_to: grids cover different intervals");
  }
  const std::size_t ratio = nf / nc;
  FieldState out{coarse, std::vector<StateVector>(nc), fine.time};
  for (std::size_t j = 0; j < nc; ++j) {
    StateVector sum(fine.cells[j * ratio].size());
    for (std::size_t i = 0; i < ratio; ++i) sum += fine.cells[j * ratio + i];
    sum *= 1.0 / static_cast<double>(ratio);
    out.cells[j] = sum;
  }
  return out;
}

double burgers_exact_smooth(double t, double x) { return x / (1.0 + t); }

double burgers_riemann_exact(double t, double x, double u_left, double u_right, double x0) {
  const double y = x - x0;
  if (t <= 0.0) return y < 0.0 ? u_left : u_right;
  if (u_left > u_right) return y < 0.5 * (u_left + u_right) * t ? u_left : u_right;
  return std::clamp(y / t, u_left, u_right);
}

double burgers_three_state_exact(double t, double x, const ThreeStateData& d) {
  const double a = d.left;
  const double b = d.middle;
  const double c = d.right;
  if (!(a > b && b < c && d.x1 < d.x2)) {
    throw std::invalid_argument("burgers_three_state_exact: needs left > middle < right and x1 < x2");
  }
  if (t <= 0.0) return x < d.x1 ? a : (x < d.x2 ? b : c);

  const double t_meet = (d.x2 - d.x1) / (0.5 * (a - b));
  if (t <= t_meet) {
    if (x < d.x1 + 0.5 * (a + b) * t) return a;
    if (x < d.x2 + b * t) return b;
    return std::min((x - d.x2) / t, c);
  }
  // The shock runs into the fan and decelerates,
  //   x_s = x2 + a t + (b - a) sqrt(t_meet t),
  // until it leaves the fan's head (only when a > c).
  const double t_exit = a > c ? t_meet * ((a - b) / (a - c)) * ((a - b) / (a - c))
                              : std::numeric_limits<double>::infinity();
  if (t <= t_exit) {
    const double x_shock = d.x2 + a * t + (b - a) * std::sqrt(t_meet * t);
    if (x < x_shock) return a;
    return std::min((x - d.x2) / t, c);
  }
  const double x_shock = d.x2 + c * t_exit + 0.5 * (a + c) * (t - t_exit);
  return x < x_shock ? a : c;
}

FieldState equilibrium_cell_averages(const Grid1D& grid, double t, const std::function<double(double)>& u,
                                     const std::function<double(double)>& g, std::size_t samples) {
  if (samples == 0) throw std::invalid_argument("equilibrium_cell_averages: samples must be positive");
  FieldState out{grid, std::vector<StateVector>(grid.n_cells()), t};
  const double dx = grid.dx();
  for (std::size_t j = 0; j < grid.n_cells(); ++j) {
    const double left = grid.center(j) - 0.5 * dx;
    double sum = 0.0;
    for (std::size_t s = 0; s < samples; ++s) {
      sum += u(left + (static_cast<double>(s) + 0.5) * dx / static_cast<double>(samples));
    }
    const double avg = sum / static_cast<double>(samples);
    out.cells[j] = StateVector{avg, g(avg)};
  }
  return out;
}

double convergence_rate(double dx_coarse, double e_coarse, double dx_fine, double e_fine) {
  return std::log(e_coarse / e_fine) / std::log(dx_coarse / dx_fine);
}

namespace {

bool uses_exact_oracle(const RunConfig& config) {
  switch (config.reference.kind) {
    case OracleKind::exact: return true;
    case OracleKind::splitting: return false;
    case OracleKind::automatic: return config.initial.name == "burgers-smooth";
  }
  return false;
}

FieldState exact_reference(const RunConfig& config, const Grid1D& grid) {
  const auto model = make_model(config.model);
  const auto* jx = dynamic_cast<const JinXinModel*>(model.get());
  if (jx == nullptr || jx->g().kind() != ScalarFlux::Kind::burgers) {
    throw ConfigError("exact reference: needs the jinxin model with burgers flux");
  }
  const double t = config.t_final;
  const auto g = [jx](double u) { return jx->g()(u); };
  if (config.initial.name == "burgers-smooth") {
    return equilibrium_cell_averages(grid, t, [t](double x) { return burgers_exact_smooth(t, x); }, g);
  }
  if (config.initial.name == "jinxin-3state") {
    return equilibrium_cell_averages(grid, t, [t](double x) { return burgers_three_state_exact(t, x); },
                                     g);
  }
  throw ConfigError("exact reference: no exact solution for initial condition '" +
                    config.initial.name + "'");
}

FieldState splitting_reference(const RunConfig& config, std::size_t cells) {
  RunConfig ref = config;
  ref.scheme = SchemeKind::splitting;
  ref.cells = cells;
  const auto model = make_model(ref.model);
  const Grid1D grid = ref.grid();
  return run(*model, make_initial(*model, ref.initial, grid), ref.controls(), ref.eps,
             RunOptions{ref.kernels, {}});
}

std::size_t reference_cells(const RunConfig& config, std::size_t coarse_cells) {
  return config.reference.cells != 0 ? config.reference.cells : 10 * coarse_cells;
}

struct Timed {
  FieldState field;
  double seconds;
};

Timed timed_run(const RunConfig& config) {
  const auto model = make_model(config.model);
  const FieldState initial = make_initial(*model, config.initial, config.grid());
  const auto start = std::chrono::steady_clock::now();
  FieldState result = run(*model, initial, config.controls(), config.eps, RunOptions{config.kernels, {}});
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
  return {std::move(result), elapsed.count()};
}

template <class Task>
void run_rows(std::size_t count, std::size_t threads, Task&& task) {
  const std::size_t workers = std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(count, 1));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) task(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) task(i);
    });
  }
  for (auto& th : pool) th.join();
}

SweepRow failed_row(double parameter, const std::string& what) {
  const double nan = std::numeric_limits<double>::quiet_NaN();
  return SweepRow{parameter, nan, nan, std::nullopt, 0.0, what.empty() ? "unknown error" : what};
}

void sort_rows(SweepResult& result) {
  std::stable_sort(result.rows.begin(), result.rows.end(),
                   [](const SweepRow& a, const SweepRow& b) { return a.parameter < b.parameter; });
}

}  // namespace

FieldState reference_solution(const RunConfig& config) {
  const Grid1D grid = config.grid();
  if (uses_exact_oracle(config)) return exact_reference(config, grid);
  return restrict_to(splitting_reference(config, reference_cells(config, config.cells)), grid);
}

SweepResult epsilon_sweep(const RunConfig& config, const std::vector<double>& eps_values,
                          const SweepOptions& options) {
  SweepResult result{"eps", std::vector<SweepRow>(eps_values.size())};
  const std::size_t component = config.sweep.component;
  std::optional<FieldState> shared_exact;
  if (!eps_values.empty() && uses_exact_oracle(config)) shared_exact = exact_reference(config, config.grid());

  run_rows(eps_values.size(), options.threads, [&](std::size_t i) {
    const double eps = eps_values[i];
    try {
      RunConfig row = config;
      row.eps = eps;
      row.validate();
      const Timed t = timed_run(row);
      const FieldState reference = shared_exact ? *shared_exact : reference_solution(row);
      result.rows[i] = SweepRow{eps, l2_error(t.field, reference, component),
                                linf_error(t.field, reference, component), std::nullopt, t.seconds, {}};
    } catch (const std::exception& e) {
      result.rows[i] = failed_row(eps, e.what());
    }
  });
  sort_rows(result);
  return result;
}

SweepResult refinement_sweep(const RunConfig& config, const std::vector<double>& dx_values,
                             const SweepOptions& options) {
  SweepResult result{"dx", std::vector<SweepRow>(dx_values.size())};
  const std::size_t component = config.sweep.component;
  const double length = config.x_max - config.x_min;

  auto cells_for = [&](double dx) -> std::size_t {
    if (!(dx > 0.0) || !std::isfinite(dx)) throw ConfigError("refinement sweep: dx must be positive");
    const double n = std::round(length / dx);
    if (n < 1.0 || std::abs(n * dx - length) > 1e-9 * length) {
      throw ConfigError("refinement sweep: dx does not divide the domain into whole cells");
    }
    if (n > static_cast<double>(kMaxCells)) throw ConfigError("refinement sweep: too many cells");
    return static_cast<std::size_t>(n);
  };

  // A splitting reference is computed once on a mesh fine enough for every row.
  std::optional<FieldState> fine_reference;
  std::string reference_failure;
  if (!dx_values.empty() && !uses_exact_oracle(config)) {
    try {
      std::size_t finest = 0;
      for (double dx : dx_values) {
        try {
          finest = std::max(finest, cells_for(dx));
        } catch (const ConfigError&) {
        }
      }
      if (finest == 0) throw ConfigError("refinement sweep: no valid mesh size");
      fine_reference = splitting_reference(config, reference_cells(config, finest));
    } catch (const std::exception& e) {
      reference_failure = e.what();
    }
  }

  run_rows(dx_values.size(), options.threads, [&](std::size_t i) {
    const double dx = dx_values[i];
    try {
      RunConfig row = config;
      row.cells = cells_for(dx);
      row.validate();
      if (!uses_exact_oracle(config) && !fine_reference) throw ConfigError(reference_failure);
      const Timed t = timed_run(row);
      const FieldState reference = fine_reference ? restrict_to(*fine_reference, row.grid())
                                                  : exact_reference(row, row.grid());
      result.rows[i] = SweepRow{dx, l2_error(t.field, reference, component),
                                linf_error(t.field, reference, component), std::nullopt, t.seconds, {}};
    } catch (const std::exception& e) {
      result.rows[i] = failed_row(dx, e.what());
    }
  });
  sort_rows(result);
  fill_rates(result);
  return result;
}

void fill_rates(SweepResult& result) {
  auto usable = [](const SweepRow& r) { return r.error.empty() && std::isfinite(r.l2) && r.l2 > 0.0; };
  for (std::size_t i = 0; i < result.rows.size(); ++i) {
    SweepRow& fine = result.rows[i];
    fine.rate.reset();
    if (!usable(fine)) continue;
    for (std::size_t j = i + 1; j < result.rows.size(); ++j) {
      const SweepRow& coarse = result.rows[j];
      if (!usable(coarse) || !(coarse.parameter > fine.parameter)) continue;
      fine.rate = convergence_rate(coarse.parameter, coarse.l2, fine.parameter, fine.l2);
      break;
    }
  }
}

}  // namespace relaxsolve
