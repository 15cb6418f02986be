#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "relaxsolve/commands.hpp"
#include "relaxsolve/config.hpp"

namespace {

enum Exit { ok = 0, failure = 1, config_error = 2, run_error = 3 };

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"relaxsolve: finite-volume solvers for hyperbolic systems with stiff relaxation"};
  app.require_subcommand(1);

  std::vector<std::string> configs;
  std::string reference;
  std::optional<std::size_t> threads;
  std::string output_dir = ".";
  std::string axis;
  std::string values;

  auto* run = app.add_subcommand("run", "run one configuration and write the profile CSV");
  run->add_option("--config", configs, "configuration file")->required()->expected(1);

  auto* sweep = app.add_subcommand("sweep", "epsilon or mesh sweep against the configured oracle");
  sweep->add_option("--config", configs, "configuration file")->required()->expected(1);
  sweep->add_option("--axis", axis, "override [sweep] axis")->check(CLI::IsMember({"eps", "dx"}));
  sweep->add_option("--values", values, "override [sweep] values (comma separated)");

  auto* compare = app.add_subcommand("compare", "two schemes against a fine-mesh reference");
  compare->add_option("--config", configs, "configuration A, then B")->required()->expected(2);
  compare->add_option("--reference", reference, "reference configuration (default: splitting, 10x cells)");

  for (auto* sub : {run, sweep, compare}) {
    sub->add_option("--output", output_dir, "output directory");
    sub->add_option("--threads", threads, "worker threads (fallback: RELAXSOLVE_THREADS)");
  }

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) {
      relaxsolve::resolve_threads(threads);
      const auto config = relaxsolve::load_config(configs.at(0));
      const std::string path = relaxsolve::cmd_run(config, output_dir);
      std::printf("wrote %s\n", path.c_str());
    } else if (sweep->parsed()) {
      auto config = relaxsolve::load_config(configs.at(0));
      if (!axis.empty()) config.sweep.axis = axis;
      if (!values.empty()) config.sweep.values = relaxsolve::parse_real_list(values);
      const auto out = relaxsolve::cmd_sweep(config, output_dir, relaxsolve::resolve_threads(threads));
      std::size_t failed = 0;
      for (const auto& row : out.result.rows) failed += row.error.empty() ? 0 : 1;
      std::printf("wrote %s and %s (%zu rows, %zu failed)\n", out.csv_path.c_str(), out.plot_path.c_str(),
                  out.result.rows.size(), failed);
    } else if (compare->parsed()) {
      const auto a = relaxsolve::load_config(configs.at(0));
      const auto b = relaxsolve::load_config(configs.at(1));
      std::optional<relaxsolve::RunConfig> ref;
      if (!reference.empty()) ref = relaxsolve::load_config(reference);
      const auto out = relaxsolve::cmd_compare(a, b, ref, output_dir, relaxsolve::resolve_threads(threads));
      std::printf("wrote %s\n", out.csv_path.c_str());
    }
  } catch (const relaxsolve::ConfigError& e) {
    std::fprintf(stderr, "configuration error: %s\n", e.what());
    return config_error;
  } catch (const relaxsolve::AdmissibilityError& e) {
    std::fprintf(stderr, "run aborted: %s\n", e.what());
    return run_error;
  } catch (const relaxsolve::DomainError& e) {
    std::fprintf(stderr, "run aborted: %s\n", e.what());
    return run_error;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return failure;
  }
  return ok;
}
