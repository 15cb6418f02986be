#include "relaxsolve/commands.hpp"

#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <future>

#include "relaxsolve/core.hpp"

namespace relaxsolve {

namespace {

std::string output_path(const std::string& dir, const std::string& name) {
  namespace fs = std::filesystem;
  if (dir.empty()) return name;
  fs::create_directories(dir);
  return (fs::path(dir) / name).string();
}

FieldState run_config(const RunConfig& config) {
  const auto model = make_model(config.model);
  return run(*model, make_initial(*model, config.initial, config.grid()), config.controls(), config.eps,
             RunOptions{config.kernels, {}});
}

FieldState primitive_field(const Model& model, const FieldState& field) {
  FieldState out = field;
  for (auto& w : out.cells) w = model.to_primitive(w);
  return out;
}

void require_comparable(const RunConfig& a, const RunConfig& b, const std::string& what) {
  if (!(a.model == b.model)) throw ConfigError("compare: " + what + " uses a different model");
  if (!(a.initial == b.initial)) throw ConfigError("compare: " + what + " uses different initial data");
  if (a.x_min != b.x_min || a.x_max != b.x_max) {
    throw ConfigError("compare: " + what + " uses a different domain");
  }
  if (a.t_final != b.t_final) throw ConfigError("compare: " + what + " uses a different t_final");
}

}  // namespace

std::size_t resolve_threads(std::optional<std::size_t> flag) {
  if (flag) {
    if (*flag == 0) throw ConfigError("--threads must be positive");
    return *flag;
  }
  const char* env = std::getenv("RELAXSOLVE_THREADS");
  if (env == nullptr || *env == '\0') return 1;
  const std::string text(env);
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || value == 0) {
    throw ConfigError("RELAXSOLVE_THREADS must be a positive integer, got '" + text + "'");
  }
  return value;
}

std::string cmd_run(const RunConfig& config, const std::string& output_dir) {
  config.validate();
  const auto model = make_model(config.model);
  const FieldState result = run_config(config);
  const std::string path = output_path(output_dir, config.output.profile);
  write_file_atomic(path, to_csv(profile_table(*model, result)));
  return path;
}

SweepOutput cmd_sweep(const RunConfig& config, const std::string& output_dir, std::size_t threads) {
  config.validate();
  if (config.sweep.axis.empty()) throw ConfigError("[sweep] axis: required for the sweep command");
  SweepOutput out;
  const SweepOptions options{threads};
  out.result = config.sweep.axis == "eps" ? epsilon_sweep(config, config.sweep.values, options)
                                          : refinement_sweep(config, config.sweep.values, options);
  out.csv_path = output_path(output_dir, config.output.sweep);
  out.plot_path = output_path(output_dir, config.output.plot);
  write_file_atomic(out.csv_path, to_csv(sweep_table(out.result)));
  const std::string csv_name = std::filesystem::path(out.csv_path).filename().string();
  write_file_atomic(out.plot_path, sweep_plot_script(out.result, csv_name));
  return out;
}

CompareOutput cmd_compare(const RunConfig& a, const RunConfig& b,
                          const std::optional<RunConfig>& reference, const std::string& output_dir,
                          std::size_t threads) {
  a.validate();
  b.validate();
  require_comparable(a, b, "second configuration");
  RunConfig ref_config = a;
  if (reference) {
    reference->validate();
    require_comparable(a, *reference, "reference configuration");
    ref_config = *reference;
  } else {
    ref_config.scheme = SchemeKind::splitting;
    ref_config.cells = a.reference.cells != 0 ? a.reference.cells : 10 * a.cells;
    ref_config.validate();
  }

  const auto policy = threads > 1 ? std::launch::async : std::launch::deferred;
  auto ja = std::async(policy, run_config, std::cref(a));
  auto jb = std::async(policy, run_config, std::cref(b));
  const FieldState fref = run_config(ref_config);
  const FieldState fa = ja.get();
  const FieldState fb = jb.get();

  const auto model = make_model(a.model);
  const auto names = model->primitive_names();
  CompareOutput out;
  out.table.header = {"run", "scheme", "eps", "cells", "variable", "l2", "linf"};
  const std::pair<const RunConfig*, const FieldState*> runs[] = {{&a, &fa}, {&b, &fb}};
  for (std::size_t r = 0; r < 2; ++r) {
    const auto& [config, field] = runs[r];
    const FieldState prim = primitive_field(*model, *field);
    const FieldState ref_prim = primitive_field(*model, restrict_to(fref, config->grid()));
    for (std::size_t c = 0; c < names.size(); ++c) {
      out.table.rows.push_back({r == 0 ? "A" : "B", std::string(to_string(config->scheme)),
                                format_real(config->eps), std::to_string(config->cells), names[c],
                                format_real(l2_error(prim, ref_prim, c)),
                                format_real(linf_error(prim, ref_prim, c))});
    }
  }
  out.csv_path = output_path(output_dir, a.output.compare);
  write_file_atomic(out.csv_path, to_csv(out.table));
  return out;
}

}  // namespace relaxsolve
