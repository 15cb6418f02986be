#pragma once

#include <string>
#include <vector>

#include "relaxsolve/harness.hpp"
#include "relaxsolve/model.hpp"
#include "relaxsolve/state.hpp"

namespace relaxsolve {

// Shortest round-trippable form with at most 17 significant digits.
std::string format_real(double value);

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

std::string to_csv(const CsvTable& table);
CsvTable parse_csv(const std::string& text);

// Header x plus the model's primitive names, one row per cell.
CsvTable profile_table(const Model& model, const FieldState& field);

// parameter, l2, linf, rate, runtime_s, error
CsvTable sweep_table(const SweepResult& result);

// Gnuplot script plotting l2 and linf against the parameter on log-log axes.
std::string sweep_plot_script(const SweepResult& result, const std::string& csv_name);

// Writes to a temporary sibling and renames it over `path`; on failure the
// temporary is removed and `path` is left untouched.
void write_file_atomic(const std::string& path, const std::string& contents);
std::string read_file(const std::string& path);

}  // namespace relaxsolve
