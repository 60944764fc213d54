#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "nonlocal/config.hpp"
#include "nonlocal/diagnostics.hpp"
#include "nonlocal/initial_conditions.hpp"
#include "nonlocal/mesh.hpp"

namespace nonlocal {

struct RunOptions {
  /// Downgrade CFL violations to a warning.
  bool force = false;
  bool record_correction = false;
  /// Overrides config.scheme when set.
  std::optional<SchemeKind> scheme;
};

struct SingleRun {
  SchemeKind scheme = SchemeKind::MH;
  Grid grid;
  SolutionState initial;
  SolutionState final_state;
  RunReport report;
};

/// Full simulation on M cells with per-step diagnostics.
SingleRun run_single(const ExperimentConfig& config, std::size_t num_cells, const RunOptions& options = {});

struct ConvergenceRow {
  std::string scheme;
  std::string kernel;
  double a = 0.0;
  double b = 0.0;
  std::size_t M = 0;
  double dx = 0.0;
  double l1_error = 0.0;
  std::optional<double> eoa;
  double wall_time_s = 0.0;
};

struct ConvergenceOptions {
  RunOptions run;
  /// Worker threads for the sweep; 0 means hardware concurrency.
  std::size_t jobs = 1;
  /// Directory for cached reference solutions; empty disables caching.
  std::filesystem::path cache_dir;
};

struct ConvergenceResult {
  std::vector<ConvergenceRow> rows;
  /// False when a run failed; rows then hold the meshes that finished
  /// before the first failure.
  bool complete = true;
  std::string failure;
  SolutionState reference;
  Grid reference_grid;
  bool reference_from_cache = false;
};

/// The reference is an MH run at reference_M, computed (or loaded from the
/// cache) before the sweep starts; rows come back coarse to fine.
ConvergenceResult run_convergence(const ExperimentConfig& config, const ConvergenceOptions& options = {});

/// Hex digest of config.reference_key().
std::string reference_hash(const ExperimentConfig& config);
std::filesystem::path reference_cache_path(const std::filesystem::path& cache_dir, const ExperimentConfig& config);
/// Returns the cached reference if the file exists and its header matches.
std::optional<std::vector<double>> load_cached_reference(const std::filesystem::path& path, const std::string& hash,
                                                         std::size_t reference_M);
void store_cached_reference(const std::filesystem::path& path, const std::string& hash, std::size_t reference_M,
                            const std::vector<double>& cells);

inline constexpr const char* csv_header = "scheme,kernel,a,b,M,dx,l1_error,eoa,wall_time_s";

void emit_csv(const std::vector<ConvergenceRow>& rows, std::ostream& out);
void emit_csv(const std::vector<ConvergenceRow>& rows, const std::filesystem::path& path);
std::vector<ConvergenceRow> parse_csv(std::istream& in);
/// Column-aligned text table, one block per scheme.
std::string emit_table(const std::vector<ConvergenceRow>& rows);

/// "x value" per line at 17 significant digits.
void emit_profile(const SolutionState& state, const Grid& grid, const std::filesystem::path& path);
std::vector<std::pair<double, double>> read_profile(const std::filesystem::path& path);

/// Per-step series as CSV: step,t,mass,min,linf,tv.
void emit_series(const RunReport& report, const std::filesystem::path& path);

}  // namespace nonlocal
