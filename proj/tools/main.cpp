#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "nonlocal/config.hpp"
#include "nonlocal/errors.hpp"
#include "nonlocal/mesh.hpp"
#include "nonlocal/runner.hpp"

namespace fs = std::filesystem;
using namespace nonlocal;

namespace {

struct CommonArgs {
  std::string config;
  std::string out = "out";
  bool force = false;
  std::string scheme;
};

std::optional<SchemeKind> scheme_override(const CommonArgs& args) {
  if (args.scheme.empty()) return std::nullopt;
  try {
    return parse_scheme(args.scheme);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("--scheme: ") + e.what());
  }
}

void print_warnings(const std::vector<std::string>& warnings, std::size_t m) {
  for (const auto& w : warnings) std::fprintf(stderr, "warning (M = %zu): %s\n", m, w.c_str());
}

int cmd_run(const CommonArgs& args, std::optional<std::size_t> mesh, bool correction) {
  const auto config = load_config(args.config);
  RunOptions opts;
  opts.force = args.force;
  opts.scheme = scheme_override(args);
  opts.record_correction = correction;
  std::vector<std::size_t> meshes = mesh ? std::vector<std::size_t>{*mesh} : config.mesh_list;
  std::printf("%-6s %8s %10s %14s %14s %12s %12s\n", "scheme", "M", "steps", "mass drift", "min rho", "TV(T)",
              "wall (s)");
  for (std::size_t m : meshes) {
    const auto run = run_single(config, m, opts);
    const std::string tag = std::string(to_string(run.scheme)) + "_M" + std::to_string(m);
    emit_profile(run.final_state, run.grid, fs::path(args.out) / ("profile_" + tag + ".dat"));
    emit_series(run.report, fs::path(args.out) / ("series_" + tag + ".csv"));
    const auto& r = run.report;
    double min_rho = r.min_series.front();
    for (double v : r.min_series) min_rho = std::min(min_rho, v);
    const double m0 = r.mass_series.front();
    const double drift = m0 != 0.0 ? (r.mass_series.back() - m0) / std::abs(m0) : r.mass_series.back();
    std::printf("%-6s %8zu %10zu %14.6e %14.6e %12.6f %12.4f\n", std::string(to_string(run.scheme)).c_str(), m,
                r.steps(), drift, min_rho, r.tv_series.back(), r.wall_time);
    if (correction && !r.correction_max_series.empty()) {
      double emax = 0.0;
      for (double e : r.correction_max_series) emax = std::max(emax, e);
      std::printf("       max |e| = %.6e\n", emax);
    }
    print_warnings(r.warnings, m);
  }
  return 0;
}

int cmd_convergence(const CommonArgs& args, std::size_t jobs, bool no_cache) {
  const auto config = load_config(args.config);
  ConvergenceOptions opts;
  opts.run.force = args.force;
  opts.run.scheme = scheme_override(args);
  opts.jobs = jobs;
  if (!no_cache) opts.cache_dir = fs::path(args.out) / "cache";
  const auto result = run_convergence(config, opts);
  std::fprintf(stderr, "reference: MH, M = %zu%s\n", *config.reference_M,
               result.reference_from_cache ? " (cached)" : "");
  if (!result.rows.empty()) {
    const std::string scheme = result.rows.front().scheme;
    emit_csv(result.rows, fs::path(args.out) / ("convergence_" + scheme + ".csv"));
    std::cout << emit_table(result.rows);
  }
  emit_profile(result.reference, result.reference_grid,
               fs::path(args.out) / ("reference_M" + std::to_string(*config.reference_M) + ".dat"));
  if (!result.complete) {
    std::fprintf(stderr, "sweep incomplete: %s\n", result.failure.c_str());
    return 2;
  }
  return 0;
}

int cmd_compare(const CommonArgs& args, std::optional<std::size_t> mesh) {
  const auto config = load_config(args.config);
  const std::size_t m = mesh.value_or(config.mesh_list.back());
  const fs::path csv_path = fs::path(args.out) / ("compare_M" + std::to_string(m) + ".csv");
  fs::create_directories(args.out);
  std::ofstream csv(csv_path);
  if (!csv) throw std::runtime_error("cannot write " + csv_path.string());
  csv << "scheme,M,steps,wall_time_s,wall_time_per_step_s,mass_drift,min_rho,tv_final\n";
  std::printf("%-6s %8s %10s %12s %16s\n", "scheme", "M", "steps", "wall (s)", "per step (s)");
  for (SchemeKind kind : {SchemeKind::FO, SchemeKind::MH, SchemeKind::RK2}) {
    RunOptions opts;
    opts.force = args.force;
    opts.scheme = kind;
    const auto run = run_single(config, m, opts);
    const auto& r = run.report;
    const std::string name(to_string(kind));
    emit_profile(run.final_state, run.grid, fs::path(args.out) / ("profile_" + name + "_M" + std::to_string(m) + ".dat"));
    double min_rho = r.min_series.front();
    for (double v : r.min_series) min_rho = std::min(min_rho, v);
    const double per_step = r.steps() ? r.wall_time / static_cast<double>(r.steps()) : 0.0;
    char line[256];
    std::snprintf(line, sizeof line, "%s,%zu,%zu,%.17g,%.17g,%.17g,%.17g,%.17g\n", name.c_str(), m, r.steps(),
                  r.wall_time, per_step, r.mass_series.back() - r.mass_series.front(), min_rho, r.tv_series.back());
    csv << line;
    std::printf("%-6s %8zu %10zu %12.4f %16.6e\n", name.c_str(), m, r.steps(), r.wall_time, per_step);
    print_warnings(r.warnings, m);
  }
  return 0;
}

int cmd_check_cfl(const std::string& config_path, double alpha, double lip) {
  std::optional<ExperimentConfig> config;
  if (!config_path.empty()) {
    config = load_config(config_path);
    alpha = config->alpha;
    lip = config->flux_model().lip_rho;
  }
  const auto terms = cfl_bracket_terms(alpha, lip);
  const std::size_t binding = cfl_binding_term(alpha, lip);
  const char* names[] = {"(8 - 27 alpha) / (27 L)", "2 / (27 L)", "alpha / L"};
  std::printf("alpha = %.17g, L = %.17g\n", alpha, lip);
  for (std::size_t i = 0; i < terms.size(); ++i) {
    std::printf("  %-24s = %.17g%s\n", names[i], terms[i], i == binding ? "   <- binding" : "");
  }
  std::printf("max dt/dx = %.17g\n", terms[binding]);
  int status = 0;
  if (config) {
    for (std::size_t m : config->mesh_list) {
      const double dx = config->grid(m).dx;
      const double dt = config->dt_rule.dt(dx);
      const bool ok = check_cfl(dt, dx, alpha, lip);
      std::printf("  M = %-6zu dt/dx = %-12.6g %s\n", m, dt / dx, ok ? "ok" : "VIOLATED");
      if (!ok) status = 2;
    }
  }
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite-volume solvers for non-local conservation laws"};
  app.require_subcommand(1);

  CommonArgs common;
  std::size_t mesh = 0;
  bool correction = false;
  std::size_t jobs = 1;
  bool no_cache = false;
  double alpha = 0.16;
  double lip = 1.0;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", common.config, "Experiment config file")->required()->check(CLI::ExistingFile);
    sub->add_option("--out", common.out, "Output directory");
    sub->add_flag("--force", common.force, "Downgrade CFL violations to warnings");
    sub->add_option("--scheme", common.scheme, "Override the configured scheme (MH, FO, RK2)");
  };

  auto* run = app.add_subcommand("run", "Run each mesh of the config and write profiles");
  add_common(run);
  run->add_option("--mesh", mesh, "Run only this number of cells");
  run->add_flag("--correction", correction, "Record the MH correction term each step");

  auto* conv = app.add_subcommand("convergence", "Error sweep against an MH reference");
  add_common(conv);
  conv->add_option("--jobs", jobs, "Worker threads (0 = all cores)");
  conv->add_flag("--no-cache", no_cache, "Always recompute the reference");

  auto* cmp = app.add_subcommand("compare", "Run FO, MH and RK2 on one mesh");
  add_common(cmp);
  cmp->add_option("--mesh", mesh, "Number of cells (default: finest in mesh_list)");

  auto* cfl = app.add_subcommand("check-cfl", "Print the CFL bracket terms");
  std::string cfl_config;
  cfl->add_option("--config", cfl_config, "Also check the config's time steps")->check(CLI::ExistingFile);
  cfl->add_option("--alpha", alpha, "Dissipation coefficient");
  cfl->add_option("--lip", lip, "Lipschitz constant of f in rho");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  const std::optional<std::size_t> mesh_opt = mesh > 0 ? std::optional<std::size_t>(mesh) : std::nullopt;
  try {
    if (*run) return cmd_run(common, mesh_opt, correction);
    if (*conv) return cmd_convergence(common, jobs, no_cache);
    if (*cmp) return cmd_compare(common, mesh_opt);
    if (*cfl) return cmd_check_cfl(cfl_config, alpha, lip);
  } catch (const ConfigError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return 1;
  } catch (const SolverError& e) {
    std::fprintf(stderr, "solver error: %s\n", e.what());
    return 2;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 0;
}
