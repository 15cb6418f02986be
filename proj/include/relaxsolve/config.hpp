#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "relaxsolve/core.hpp"
#include "relaxsolve/model.hpp"
#include "relaxsolve/state.hpp"

namespace relaxsolve {

struct ModelSpec {
  std::string name = "jinxin";  // jinxin | chaplygin | twophase
  // jinxin
  double lambda = 2.0;
  std::string flux = "burgers";  // burgers | linear
  double flux_speed = 1.0;
  double k_min = -1.0;
  double k_max = 1.0;
  // chaplygin
  double a = 1.8;
  double gamma = 1.4;
  // twophase
  double gamma1 = 1.6;
  double gamma2 = 1.5;

  friend bool operator==(const ModelSpec&, const ModelSpec&) = default;
};

std::unique_ptr<Model> make_model(const ModelSpec& spec);

// Named initial data:
//   jinxin-3state   u = 0 | -1 | 1/2 with jumps at 0.3 and 0.7, v = g(u)
//   burgers-smooth  u = x, v = g(u)
//   riemann         primitive `left` for x < x0, `right` otherwise; for the
//                   two-phase model a 3-entry (rho, u, p) state puts phi at
//                   phi_eq(rho).
struct InitialSpec {
  std::string name = "riemann";
  std::vector<double> left;
  std::vector<double> right;
  double x0 = 0.0;

  friend bool operator==(const InitialSpec&, const InitialSpec&) = default;
};

FieldState make_initial(const Model& model, const InitialSpec& spec, const Grid1D& grid);

enum class OracleKind { automatic, exact, splitting };

struct ReferenceSpec {
  OracleKind kind = OracleKind::automatic;
  std::size_t cells = 0;  // 0: ten times the run's cells
};

struct SweepSpec {
  std::string axis;  // eps | dx
  std::vector<double> values;
  std::size_t component = 0;  // state component the errors are measured on
};

struct OutputSpec {
  std::string profile = "profile.csv";
  std::string sweep = "sweep.csv";
  std::string plot = "sweep.gp";
  std::string compare = "compare.csv";
};

struct RunConfig {
  ModelSpec model;
  SchemeKind scheme = SchemeKind::staggered;
  KernelPolicy kernels = KernelPolicy::automatic;
  double eps = 1e-6;
  double cfl = 0.9;
  double t_final = 0.1;
  double x_min = -1.0;
  double x_max = 1.0;
  std::size_t cells = 500;
  InitialSpec initial;
  ReferenceSpec reference;
  SweepSpec sweep;
  OutputSpec output;

  Grid1D grid() const { return Grid1D(x_min, x_max, cells); }
  TimeControls controls() const { return TimeControls{cfl, t_final, scheme}; }
  // Cheap consistency checks; runs before any field is allocated.
  void validate() const;
};

// Upper bound on cells accepted from a configuration file.
inline constexpr std::size_t kMaxCells = 50'000'000;

// INI-style text: `[section]` headers, `key = value` lines, `#` or `;`
// comments. Unknown sections or keys are errors. ConfigError messages carry
// `source:line` or `[section] key` diagnostics.
RunConfig parse_config(const std::string& text, const std::string& source = "<config>");
RunConfig load_config(const std::string& path);

// Comma-separated reals, as accepted for list-valued keys.
std::vector<double> parse_real_list(const std::string& text);

}  // namespace relaxsolve
