#include "nonlocal/runner.hpp"

#include <atomic>
#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "nonlocal/errors.hpp"

namespace nonlocal {

namespace {

std::string format_g17(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::ofstream open_for_write(const std::filesystem::path& path) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  return out;
}

}  // namespace

SingleRun run_single(const ExperimentConfig& config, std::size_t num_cells, const RunOptions& options) {
  SingleRun run;
  SchemeConfig sc = config.scheme_config();
  if (options.scheme) sc.scheme = *options.scheme;
  run.scheme = sc.scheme;
  run.grid = config.grid(num_cells);

  const KernelSpec spec = config.kernel_spec();
  DiscreteKernel kernel = sample_kernel(spec, run.grid.dx);
  const FluxModel model = config.flux_model();
  run.initial = init_cell_averages(config.initial_condition(), run.grid);

  const double dt = config.dt_rule.dt(run.grid.dx);
  AdvanceOptions adv;
  adv.record_correction = options.record_correction;
  if (spec.smooth()) {
    adv.linf_growth_rate = linf_growth_rate(sc.alpha, dt / run.grid.dx, model.lip_rho, model.m_const, sc.theta(),
                                            spec.derivative_sup_norm(), l1_norm(run.initial.cells, run.grid.dx));
  }
  std::string kernel_warning = kernel.warning;
  Stepper stepper(sc, model, std::move(kernel), config.bc, num_cells, options.force);
  auto result = advance_to_time(run.initial, config.t_final, stepper, dt, adv);
  run.final_state = std::move(result.state);
  run.report = std::move(result.report);
  if (!kernel_warning.empty()) run.report.warnings.insert(run.report.warnings.begin(), kernel_warning);
  if (!spec.smooth()) run.report.warnings.insert(run.report.warnings.begin(), "kernel is not C^2 at its support ends");
  return run;
}

std::string reference_hash(const ExperimentConfig& config) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016" PRIx64, fnv1a64(config.reference_key()));
  return buf;
}

std::filesystem::path reference_cache_path(const std::filesystem::path& cache_dir, const ExperimentConfig& config) {
  return cache_dir / ("reference_" + reference_hash(config) + "_M" + std::to_string(config.reference_M.value_or(0)) + ".dat");
}

std::optional<std::vector<double>> load_cached_reference(const std::filesystem::path& path, const std::string& hash,
                                                         std::size_t reference_M) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  std::string header;
  std::getline(in, header);
  std::ostringstream expected;
  expected << "# reference hash=" << hash << " reference_M=" << reference_M;
  if (header != expected.str()) return std::nullopt;
  std::vector<double> cells;
  cells.reserve(reference_M);
  for (double v; in >> v;) cells.push_back(v);
  if (cells.size() != reference_M) return std::nullopt;
  return cells;
}

void store_cached_reference(const std::filesystem::path& path, const std::string& hash, std::size_t reference_M,
                            const std::vector<double>& cells) {
  auto out = open_for_write(path);
  out << "# reference hash=" << hash << " reference_M=" << reference_M << '\n';
  for (double v : cells) out << format_g17(v) << '\n';
}

ConvergenceResult run_convergence(const ExperimentConfig& config, const ConvergenceOptions& options) {
  if (!config.reference_M) throw ConfigError("reference_M: required for a convergence sweep");
  config.validate();
  const std::size_t ref_m = *config.reference_M;

  ConvergenceResult result;
  result.reference_grid = config.grid(ref_m);
  const std::string hash = reference_hash(config);
  std::filesystem::path cache_file;
  if (!options.cache_dir.empty()) {
    cache_file = reference_cache_path(options.cache_dir, config);
    if (auto cached = load_cached_reference(cache_file, hash, ref_m)) {
      result.reference = {config.t_final, std::move(*cached)};
      result.reference_from_cache = true;
    }
  }
  if (!result.reference_from_cache) {
    RunOptions ref_options = options.run;
    ref_options.scheme = SchemeKind::MH;
    ref_options.record_correction = false;
    result.reference = run_single(config, ref_m, ref_options).final_state;
    if (!cache_file.empty()) store_cached_reference(cache_file, hash, ref_m, result.reference.cells);
  }

  const std::size_t n = config.mesh_list.size();
  std::vector<std::optional<SingleRun>> runs(n);
  std::vector<std::string> errors(n);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        runs[i] = run_single(config, config.mesh_list[i], options.run);
      } catch (const std::exception& e) {
        errors[i] = "M = " + std::to_string(config.mesh_list[i]) + ": " + e.what();
      }
    }
  };
  std::size_t jobs = options.jobs == 0 ? std::max(1u, std::thread::hardware_concurrency()) : options.jobs;
  jobs = std::min(jobs, std::max<std::size_t>(n, 1));
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  const KernelSpec spec = config.kernel_spec();
  SchemeKind kind = options.run.scheme.value_or(config.scheme_kind());
  for (std::size_t i = 0; i < n; ++i) {
    if (!runs[i]) {
      result.complete = false;
      result.failure = errors[i];
      break;
    }
    const SingleRun& r = *runs[i];
    ConvergenceRow row;
    row.scheme = std::string(to_string(kind));
    row.kernel = spec.name();
    row.a = spec.a();
    row.b = spec.b();
    row.M = config.mesh_list[i];
    row.dx = r.grid.dx;
    row.l1_error = config.error_norm == ErrorNorm::averaged
                       ? l1_distance_to_averaged_reference(r.final_state.cells, r.grid, result.reference.cells,
                                                           result.reference_grid)
                       : l1_distance_to_reference(r.final_state.cells, r.grid, result.reference.cells,
                                                  result.reference_grid);
    if (!result.rows.empty() && result.rows.back().l1_error > 0.0 && row.l1_error > 0.0) {
      row.eoa = eoa(result.rows.back().l1_error, row.l1_error);
    }
    row.wall_time_s = r.report.wall_time;
    result.rows.push_back(row);
  }
  return result;
}

void emit_csv(const std::vector<ConvergenceRow>& rows, std::ostream& out) {
  if (rows.empty()) throw std::invalid_argument("emit_csv: no rows");
  out << csv_header << '\n';
  for (const auto& r : rows) {
    out << r.scheme << ',' << r.kernel << ',' << format_g17(r.a) << ',' << format_g17(r.b) << ',' << r.M << ','
        << format_g17(r.dx) << ',' << format_g17(r.l1_error) << ',' << (r.eoa ? format_g17(*r.eoa) : "") << ','
        << format_g17(r.wall_time_s) << '\n';
  }
}

void emit_csv(const std::vector<ConvergenceRow>& rows, const std::filesystem::path& path) {
  auto out = open_for_write(path);
  emit_csv(rows, out);
  if (!out) throw std::runtime_error("error writing " + path.string());
}

std::vector<ConvergenceRow> parse_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != csv_header) throw std::runtime_error("parse_csv: unexpected header");
  std::vector<ConvergenceRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> f;
    std::stringstream ss(line);
    for (std::string cell; std::getline(ss, cell, ',');) f.push_back(cell);
    if (f.size() == 8 && line.back() == ',') f.emplace_back();
    if (f.size() != 9) throw std::runtime_error("parse_csv: expected 9 fields in '" + line + "'");
    ConvergenceRow r;
    r.scheme = f[0];
    r.kernel = f[1];
    r.a = std::stod(f[2]);
    r.b = std::stod(f[3]);
    r.M = static_cast<std::size_t>(std::stoull(f[4]));
    r.dx = std::stod(f[5]);
    r.l1_error = std::stod(f[6]);
    if (!f[7].empty()) r.eoa = std::stod(f[7]);
    r.wall_time_s = std::stod(f[8]);
    rows.push_back(r);
  }
  return rows;
}

std::string emit_table(const std::vector<ConvergenceRow>& rows) {
  std::ostringstream out;
  std::string current;
  for (const auto& r : rows) {
    const std::string block = r.scheme + "  " + r.kernel + " [" + format_g17(r.a) + ", " + format_g17(r.b) + "]";
    if (block != current) {
      if (!current.empty()) out << '\n';
      current = block;
      out << block << '\n';
      out << std::setw(6) << "M" << std::setw(12) << "dx" << std::setw(14) << "L1 error" << std::setw(12) << "EOA"
          << std::setw(12) << "time (s)" << '\n';
    }
    out << std::setw(6) << r.M << std::setw(12) << std::setprecision(6) << std::fixed << r.dx << std::setw(14)
        << r.l1_error << std::setw(12);
    if (r.eoa) out << *r.eoa;
    else out << "";
    out << std::setw(12) << std::setprecision(4) << r.wall_time_s << '\n';
    out.unsetf(std::ios::floatfield);
  }
  return out.str();
}

void emit_profile(const SolutionState& state, const Grid& grid, const std::filesystem::path& path) {
  auto out = open_for_write(path);
  for (std::size_t j = 0; j < state.cells.size(); ++j) {
    out << format_g17(grid.center(static_cast<std::ptrdiff_t>(j))) << ' ' << format_g17(state.cells[j]) << '\n';
  }
  if (!out) throw std::runtime_error("error writing " + path.string());
}

std::vector<std::pair<double, double>> read_profile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::vector<std::pair<double, double>> rows;
  for (double x, v; in >> x >> v;) rows.emplace_back(x, v);
  return rows;
}

void emit_series(const RunReport& report, const std::filesystem::path& path) {
  auto out = open_for_write(path);
  out << "step,t,mass,min,linf,tv\n";
  for (std::size_t i = 0; i < report.times.size(); ++i) {
    out << i << ',' << format_g17(report.times[i]) << ',' << format_g17(report.mass_series[i]) << ','
        << format_g17(report.min_series[i]) << ',' << format_g17(report.linf_series[i]) << ','
        << format_g17(report.tv_series[i]) << '\n';
  }
}

}  // namespace nonlocal
