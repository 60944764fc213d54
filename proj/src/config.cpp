#include "nonlocal/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "nonlocal/errors.hpp"

namespace nonlocal {

namespace {

using LineMap = std::map<std::string, int>;

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

double parse_real(const std::string& key, const std::string& text, int line) {
  double v = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last || !std::isfinite(v)) {
    throw ConfigError(key + ": expected a real number, got '" + text + "'", line);
  }
  return v;
}

std::size_t parse_count(const std::string& key, const std::string& text, int line) {
  std::size_t v = 0;
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), last, v);
  if (ec != std::errc() || ptr != last || v == 0) {
    throw ConfigError(key + ": expected a positive integer, got '" + text + "'", line);
  }
  return v;
}

std::string read_file_bytes(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return {};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

[[noreturn]] void fail(const LineMap* lines, const std::string& field, const std::string& msg) {
  int line = 0;
  if (lines) {
    if (auto it = lines->find(field); it != lines->end()) line = it->second;
  }
  throw ConfigError(field + ": " + msg, line);
}

void validate_impl(const ExperimentConfig& c, const LineMap* lines) {
  if (c.scheme != "MH" && c.scheme != "FO" && c.scheme != "RK2") fail(lines, "scheme", "must be MH, FO or RK2");
  if (c.flux == "custom") {
    fail(lines, "flux", "custom fluxes are only available through the library interface");
  }
  if (c.flux != "lwr" && c.flux != "linear") fail(lines, "flux", "must be lwr or linear");
  if (c.kernel == "poly52") {
    if (!(c.kernel_b > c.kernel_a)) fail(lines, "kernel.b", "must exceed kernel.a");
  } else if (c.kernel == "cubic") {
    if (!(c.kernel_eta > 0.0)) fail(lines, "kernel.eta", "must be positive");
  } else if (c.kernel == "file") {
    if (c.kernel_file.empty()) fail(lines, "kernel.file", "required when kernel = file");
  } else {
    fail(lines, "kernel", "must be poly52, cubic or file");
  }
  if (c.ic == "file") {
    if (c.ic_file.empty()) fail(lines, "ic.file", "required when ic = file");
  } else if (c.ic != "sine" && c.ic != "amorim_steps" && c.ic != "aggarwal_steps" && c.ic != "constant") {
    fail(lines, "ic", "must be sine, amorim_steps, aggarwal_steps, constant or file");
  }
  if (!(c.x_right > c.x_left)) fail(lines, "domain.x_right", "must exceed domain.x_left");
  if (!(c.theta >= 0.0 && c.theta <= 0.5)) fail(lines, "theta", "must lie in [0, 0.5]");
  if (!(c.alpha > 0.0 && c.alpha < 8.0 / 27.0)) fail(lines, "alpha", "must lie in (0, 8/27)");
  if (c.slope != "standard" && c.slope != "entropy") fail(lines, "slope", "must be standard or entropy");
  if (!(c.K > 0.0)) fail(lines, "K", "must be positive");
  if (!(c.delta > 0.0 && c.delta < 1.0)) fail(lines, "delta", "must lie in (0, 1)");
  if (!(c.dt_rule.value > 0.0)) fail(lines, "dt_rule", "step must be positive");
  if (!(c.t_final >= 0.0)) fail(lines, "t_final", "must be nonnegative");
  if (c.mesh_list.empty()) fail(lines, "mesh_list", "at least one mesh is required");
  for (std::size_t i = 1; i < c.mesh_list.size(); ++i) {
    if (c.mesh_list[i] <= c.mesh_list[i - 1]) fail(lines, "mesh_list", "must be strictly increasing (coarse to fine)");
  }
  if (c.reference_M) {
    for (std::size_t m : c.mesh_list) {
      if (*c.reference_M % m != 0) {
        fail(lines, "mesh_list",
             "mesh " + std::to_string(m) + " is not nested in reference_M = " + std::to_string(*c.reference_M));
      }
    }
  }
}

}  // namespace

std::uint64_t fnv1a64(const std::string& bytes) noexcept {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char ch : bytes) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  return h;
}

SchemeKind ExperimentConfig::scheme_kind() const { return parse_scheme(scheme); }

SchemeConfig ExperimentConfig::scheme_config() const {
  SchemeConfig sc;
  sc.scheme = scheme_kind();
  sc.alpha = alpha;
  sc.slope = slope == "entropy" ? SlopeMode::entropy(theta, K, delta) : SlopeMode::standard(theta);
  return sc;
}

FluxModel ExperimentConfig::flux_model() const { return flux == "linear" ? builtin_linear() : builtin_lwr(); }

KernelSpec ExperimentConfig::kernel_spec() const {
  if (kernel == "cubic") return KernelSpec::cubic(kernel_eta);
  if (kernel == "file") return load_tabulated_kernel(kernel_file);
  return KernelSpec::poly52(kernel_a, kernel_b);
}

InitialCondition ExperimentConfig::initial_condition() const {
  if (ic == "amorim_steps") return amorim_steps_ic();
  if (ic == "aggarwal_steps") return aggarwal_steps_ic();
  if (ic == "constant") return constant_ic(ic_value);
  if (ic == "file") return file_ic(ic_file);
  return sine_ic();
}

Grid ExperimentConfig::grid(std::size_t num_cells) const { return build_grid(x_left, x_right, num_cells); }

void ExperimentConfig::validate() const { validate_impl(*this, nullptr); }

std::string ExperimentConfig::reference_key() const {
  std::ostringstream k;
  k.precision(17);
  k << "flux=" << flux << "\nkernel=" << kernel;
  if (kernel == "poly52") k << "\nkernel.a=" << kernel_a << "\nkernel.b=" << kernel_b;
  if (kernel == "cubic") k << "\nkernel.eta=" << kernel_eta;
  if (kernel == "file") k << "\nkernel.file=" << fnv1a64(read_file_bytes(kernel_file));
  k << "\nic=" << ic;
  if (ic == "constant") k << "\nic.value=" << ic_value;
  if (ic == "file") k << "\nic.file=" << fnv1a64(read_file_bytes(ic_file));
  k << "\nbc=" << to_string(bc) << "\ndomain=" << x_left << ' ' << x_right << "\ntheta=" << theta
    << "\nalpha=" << alpha << "\nslope=" << slope;
  if (slope == "entropy") k << "\nK=" << K << "\ndelta=" << delta;
  k << "\ndt_rule=" << (dt_rule.kind == DtRule::Kind::fixed ? "fixed " : "ratio ") << dt_rule.value
    << "\nt_final=" << t_final << "\nreference_M=" << (reference_M ? *reference_M : 0) << '\n';
  return k.str();
}

ExperimentConfig parse_config(const std::string& text, const std::filesystem::path& base_dir) {
  ExperimentConfig c;
  LineMap lines;
  auto resolve = [&](const std::string& p) {
    std::filesystem::path path(p);
    return path.is_relative() && !base_dir.empty() ? base_dir / path : path;
  };

  using Setter = std::function<void(const std::string& key, const std::string& value, int line)>;
  auto real = [](double& field) -> Setter {
    return [&field](const std::string& k, const std::string& v, int l) { field = parse_real(k, v, l); };
  };
  auto word = [](std::string& field) -> Setter {
    return [&field](const std::string&, const std::string& v, int) { field = v; };
  };
  const std::map<std::string, Setter> setters = {
      {"scheme", [&](const std::string&, const std::string& v, int) { c.scheme = v == "mh" ? "MH" : v == "fo" ? "FO" : v == "rk2" ? "RK2" : v; }},
      {"flux", word(c.flux)},
      {"kernel", word(c.kernel)},
      {"kernel.a", real(c.kernel_a)},
      {"kernel.b", real(c.kernel_b)},
      {"kernel.eta", real(c.kernel_eta)},
      {"kernel.file", [&](const std::string&, const std::string& v, int) { c.kernel_file = resolve(v); }},
      {"ic",
       [&](const std::string& k, const std::string& v, int l) {
         if (v.rfind("constant(", 0) == 0 && v.back() == ')') {
           c.ic = "constant";
           c.ic_value = parse_real(k, trim(v.substr(9, v.size() - 10)), l);
         } else {
           c.ic = v;
         }
       }},
      {"ic.value", real(c.ic_value)},
      {"ic.file", [&](const std::string&, const std::string& v, int) { c.ic_file = resolve(v); }},
      {"bc",
       [&](const std::string& k, const std::string& v, int l) {
         if (v == "periodic") c.bc = BoundaryCondition::periodic;
         else if (v == "absorbing") c.bc = BoundaryCondition::absorbing;
         else throw ConfigError(k + ": must be periodic or absorbing", l);
       }},
      {"domain.x_left", real(c.x_left)},
      {"domain.x_right", real(c.x_right)},
      {"theta", real(c.theta)},
      {"alpha", real(c.alpha)},
      {"slope", word(c.slope)},
      {"K", real(c.K)},
      {"delta", real(c.delta)},
      {"dt_rule",
       [&](const std::string& k, const std::string& v, int l) {
         const auto parts = split_ws(v);
         if (parts.size() != 2 || (parts[0] != "fixed" && parts[0] != "ratio")) {
           throw ConfigError(k + ": expected 'fixed <dt>' or 'ratio <r>'", l);
         }
         c.dt_rule.kind = parts[0] == "fixed" ? DtRule::Kind::fixed : DtRule::Kind::ratio;
         c.dt_rule.value = parse_real(k, parts[1], l);
       }},
      {"t_final", real(c.t_final)},
      {"mesh_list",
       [&](const std::string& k, const std::string& v, int l) {
         c.mesh_list.clear();
         for (const auto& tok : split_ws(v)) c.mesh_list.push_back(parse_count(k, tok, l));
       }},
      {"reference_M", [&](const std::string& k, const std::string& v, int l) { c.reference_M = parse_count(k, v, l); }},
      {"error_norm",
       [&](const std::string& k, const std::string& v, int l) {
         if (v == "averaged") c.error_norm = ErrorNorm::averaged;
         else if (v == "exact") c.error_norm = ErrorNorm::exact;
         else throw ConfigError(k + ": must be averaged or exact", l);
       }},
  };

  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    const std::string line = trim(raw);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError("expected 'key = value', got '" + line + "'", line_no);
    const std::string key = trim(std::string_view(line).substr(0, eq));
    const std::string value = trim(std::string_view(line).substr(eq + 1));
    auto it = setters.find(key);
    if (it == setters.end()) throw ConfigError("unknown key '" + key + "'", line_no);
    if (value.empty()) throw ConfigError(key + ": missing value", line_no);
    if (!lines.emplace(key, line_no).second) {
      throw ConfigError("duplicate key '" + key + "' (first set on line " + std::to_string(lines[key]) + ")", line_no);
    }
    it->second(key, value, line_no);
  }
  for (const char* required : {"flux", "kernel", "ic", "bc", "t_final", "dt_rule", "mesh_list"}) {
    if (!lines.count(required)) throw ConfigError(std::string("missing required key '") + required + "'");
  }
  validate_impl(c, &lines);
  return c;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str(), path.parent_path());
}

}  // namespace nonlocal
