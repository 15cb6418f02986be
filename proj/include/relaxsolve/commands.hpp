#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "relaxsolve/config.hpp"
#include "relaxsolve/csv.hpp"
#include "relaxsolve/harness.hpp"

namespace relaxsolve {

// --threads wins, then RELAXSOLVE_THREADS, then 1. ConfigError on junk.
std::size_t resolve_threads(std::optional<std::size_t> flag);

// Runs the configuration and writes the profile CSV into `output_dir`.
// Returns the path written.
std::string cmd_run(const RunConfig& config, const std::string& output_dir);

struct SweepOutput {
  SweepResult result;
  std::string csv_path;
  std::string plot_path;
};

// Sweeps config.sweep.axis over config.sweep.values.
SweepOutput cmd_sweep(const RunConfig& config, const std::string& output_dir, std::size_t threads);

struct CompareOutput {
  CsvTable table;  // run, scheme, eps, cells, variable, l2, linf
  std::string csv_path;
};

// Runs `a` and `b` and measures each against the reference restricted to its
// grid, per primitive variable. Without `reference`, the reference is a
// splitting run of `a` on a.reference.cells (default 10x) cells. ConfigError
// when the configurations disagree on model, initial data, domain or t_final.
CompareOutput cmd_compare(const RunConfig& a, const RunConfig& b,
                          const std::optional<RunConfig>& reference, const std::string& output_dir,
                          std::size_t threads);

}  // namespace relaxsolve
