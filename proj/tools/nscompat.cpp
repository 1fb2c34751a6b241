// Command-line front end: check, example, oss, find, validate.
//
// Exit status: 0 compatible / admissible / found, 2 incompatible / inadmissible / not found,
// 1 usage, input or numerical error.

#include <cstdint>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "nscompat/compat.hpp"
#include "nscompat/errors.hpp"
#include "nscompat/field_io.hpp"
#include "nscompat/fieldops.hpp"
#include "nscompat/modes.hpp"
#include "nscompat/oracle.hpp"
#include "nscompat/search.hpp"

namespace fs = std::filesystem;
using namespace nscompat;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitNegative = 2;

struct ParamOverrides {
  std::optional<double> alpha, beta, reynolds;

  FlowParams apply(FlowParams p) const {
    if (alpha) p.alpha = *alpha;
    if (beta) p.beta = *beta;
    if (reynolds) p.reynolds = *reynolds;
    p.validate();
    return p;
  }
};

struct RunConfig {
  std::string input;
  std::string out_dir = ".";
  int n = kDefaultGridPoints;
  double tol = kDefaultVerdictTol;
  ParamOverrides params;
};

void add_params(CLI::App* app, ParamOverrides& p) {
  app->add_option("--alpha", p.alpha, "streamwise wavenumber")->check(CLI::PositiveNumber);
  app->add_option("--beta", p.beta, "spanwise wavenumber")->check(CLI::PositiveNumber);
  app->add_option("--re", p.reynolds, "Reynolds number")->check(CLI::PositiveNumber);
}

void add_common(CLI::App* app, RunConfig& cfg) {
  app->add_option("-n,--grid", cfg.n, "collocation points")->capture_default_str()->check(CLI::Range(kMinGridPoints, 4096));
  app->add_option("-o,--out", cfg.out_dir, "output directory")->capture_default_str();
}

fs::path out_path(const RunConfig& cfg, const std::string& name) {
  fs::create_directories(cfg.out_dir);
  return fs::path(cfg.out_dir) / name;
}

template <class Fn>
void write_stream(const fs::path& p, Fn&& fn) {
  std::ostringstream os;
  fn(os);
  io::write_text(p.string(), os.str());
}

WaveField load(const RunConfig& cfg) {
  WaveField f = io::read_field(cfg.input, cfg.n);
  const FlowParams p = cfg.params.apply(f.params());
  if (p == f.params()) return f;
  WaveField g(p, f.grid_ptr(), f.max_harmonic());
  for (int k = 0; k < 3; ++k)
    for (int j = 0; j <= f.max_harmonic(); ++j) {
      g[k].set_cos(j, f[k].cos(j));
      if (j > 0) g[k].set_sin(j, f[k].sin(j));
    }
  return g;
}

void print_report(const CompatReport& r) {
  std::cout << "verdict: " << (r.verdict == Verdict::Compatible ? "compatible" : "incompatible") << '\n'
            << "divergence defect: relative " << io::format_double(r.defect.relative) << ", max_abs "
            << io::format_double(r.defect.max_abs) << '\n'
            << "tangential residual: relative " << io::format_double(r.residual.relative()) << ", max_abs "
            << io::format_double(r.residual.max_abs()) << '\n'
            << "tolerance: " << io::format_double(r.tolerance) << ", grid n = " << r.grid_n << '\n';
  for (const auto& w : r.warnings) std::cout << "warning: " << w << '\n';
}

// Writes report.json, defect_profiles.csv, defect_xy.csv; returns the exit status of the verdict.
int emit_check(const RunConfig& cfg, const CompatReport& r) {
  io::write_json(out_path(cfg, "report.json").string(), io::report_to_json(r));
  write_stream(out_path(cfg, "defect_profiles.csv"), [&](std::ostream& os) { io::write_defect_profiles_csv(os, r.defect.field); });
  write_stream(out_path(cfg, "defect_xy.csv"), [&](std::ostream& os) { io::write_xy_slice_csv(os, r.defect.field); });
  print_report(r);
  return r.verdict == Verdict::Compatible ? kExitOk : kExitNegative;
}

int cmd_check(const RunConfig& cfg) {
  const WaveField u0 = load(cfg);
  return emit_check(cfg, check(u0, u0.params(), u0.grid_ptr(), cfg.tol));
}

int cmd_validate(const RunConfig& cfg, double div_tol) {
  const WaveField u0 = load(cfg);
  const Admissibility a = check_admissible(u0, div_tol);
  io::write_json(out_path(cfg, "validation.json").string(), io::admissibility_to_json(a));
  std::cout << (a.ok() ? "admissible" : "not admissible") << '\n'
            << "relative divergence: " << io::format_double(a.relative_divergence) << '\n'
            << "max wall velocity: " << io::format_double(a.max_wall_velocity) << '\n';
  for (const auto& v : a.violations) std::cout << "violation: " << v << '\n';
  for (const auto& w : a.warnings) std::cout << "warning: " << w << '\n';
  return a.ok() ? kExitOk : kExitNegative;
}

int cmd_example(const RunConfig& cfg) {
  const FlowParams p = cfg.params.apply(FlowParams{});
  const GridPtr grid = build_grid(cfg.n);
  const WaveField u0 = oracle::example_field(p, grid);
  io::write_field(out_path(cfg, "example_field.json").string(), u0);

  nlohmann::json blocks = nlohmann::json::array();
  double worst = 0.0;
  for (const auto& d : oracle::compare_pipeline(p, grid)) {
    blocks.push_back({{"block", d.block}, {"max_abs", d.max_abs}, {"reference", d.reference}, {"relative", d.relative()}});
    worst = std::max(worst, d.relative());
    std::cout << "oracle " << d.block << ": max_abs " << io::format_double(d.max_abs) << ", relative "
              << io::format_double(d.relative()) << '\n';
  }
  io::write_json(out_path(cfg, "oracle_comparison.json").string(),
                 {{"schema", "nscompat-oracle"},
                  {"version", io::kReportSchemaVersion},
                  {"library_version", io::kLibraryVersion},
                  {"params", {{"alpha", p.alpha}, {"beta", p.beta}, {"reynolds", p.reynolds}}},
                  {"grid", {{"n", cfg.n}}},
                  {"max_relative", worst},
                  {"blocks", blocks}});
  write_stream(out_path(cfg, "u2_xy.csv"), [&](std::ostream& os) { io::write_xy_slice_csv(os, u0[1]); });
  write_stream(out_path(cfg, "u3_xy.csv"), [&](std::ostream& os) { io::write_xy_slice_csv(os, u0[2]); });
  emit_check(cfg, check(u0, p, grid, cfg.tol));
  return kExitOk;
}

int cmd_oss(const RunConfig& cfg, int os_n, int mode_index, double amplitude, bool no_base) {
  const FlowParams p = cfg.params.apply(FlowParams{});
  const auto modes = solve_orr_sommerfeld(p, os_n);
  io::write_json(out_path(cfg, "modes.json").string(), io::modes_to_json(modes));
  std::cout << "index,growth_rate,frequency\n";
  for (std::size_t i = 0; i < modes.size(); ++i)
    std::cout << i << ',' << io::format_double(modes[i].eigenvalue.real()) << ','
              << io::format_double(modes[i].eigenvalue.imag()) << '\n';
  if (mode_index < 0 || mode_index >= static_cast<int>(modes.size()))
    throw ConfigError("mode index " + std::to_string(mode_index) + " out of range (" + std::to_string(modes.size()) +
                      " physical modes)");
  const WaveField u0 = mode_to_field(modes[mode_index], amplitude, !no_base, build_grid(cfg.n));
  io::write_field(out_path(cfg, "mode_field.json").string(), u0);
  return emit_check(cfg, check(u0, p, u0.grid_ptr(), cfg.tol));
}

search::ResidualKind parse_kind(const std::string& s) {
  if (s == "full") return search::ResidualKind::Full;
  if (s == "defect") return search::ResidualKind::Defect;
  if (s == "defect-cosine") return search::ResidualKind::DefectCosine;
  throw ConfigError("unknown residual kind " + s);
}

int cmd_find(const RunConfig& cfg, int degree, std::uint64_t seed, int restarts, const std::string& kind,
             int max_iter) {
  search::AnsatzSpec spec;
  spec.degree = degree;
  spec.params = cfg.params.apply(FlowParams{});
  spec.grid_n = cfg.n;
  spec.kind = parse_kind(kind);
  search::SearchOptions opt;
  opt.max_iterations = max_iter;
  const auto attempts = search::find_with_restarts(spec, seed, restarts, opt);
  const auto& best = attempts.back();
  for (const auto& a : attempts)
    std::cout << "seed " << a.seed << ": " << (a.success() ? "found" : a.converged ? "trivial" : "not converged")
              << ", iterations " << a.trace.back().iteration << ", relative defect "
              << io::format_double(a.measures.relative_defect) << ", relative tangential "
              << io::format_double(a.measures.relative_tangential) << '\n';
  io::write_json(out_path(cfg, "search_report.json").string(), io::search_to_json(spec, best));
  if (!best.success()) return kExitNegative;
  const WaveField u0 = search::assemble(spec, best.coeffs);
  io::write_field(out_path(cfg, "found_field.json").string(), u0);
  const CompatReport r = check(u0, spec.params, u0.grid_ptr(), cfg.tol);
  io::write_json(out_path(cfg, "report.json").string(), io::report_to_json(r));
  print_report(r);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Compatibility-condition checker for wave-like channel-flow initial fields"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* check_cmd = app.add_subcommand("check", "check a field file; exit 0 compatible, 2 incompatible");
  check_cmd->add_option("input", cfg.input, "field file (JSON)")->required();
  check_cmd->add_option("--tol", cfg.tol, "relative verdict tolerance")->capture_default_str()->check(CLI::PositiveNumber);
  add_common(check_cmd, cfg);
  add_params(check_cmd, cfg.params);

  double div_tol = kDivergenceErrorTol;
  auto* validate_cmd = app.add_subcommand("validate", "admissibility of a field file; exit 0 admissible, 2 not");
  validate_cmd->add_option("input", cfg.input, "field file (JSON)")->required();
  validate_cmd->add_option("--div-tol", div_tol, "relative divergence error threshold")->capture_default_str();
  add_common(validate_cmd, cfg);
  add_params(validate_cmd, cfg.params);

  auto* example_cmd = app.add_subcommand("example", "analytic incompatible example with oracle comparison");
  example_cmd->add_option("--tol", cfg.tol, "relative verdict tolerance")->capture_default_str();
  add_common(example_cmd, cfg);
  add_params(example_cmd, cfg.params);

  int os_n = 40;
  int mode_index = 0;
  double amplitude = 1e-3;
  bool no_base = false;
  auto* oss_cmd = app.add_subcommand("oss", "Orr-Sommerfeld modes on the Poiseuille base; check one as initial field");
  oss_cmd->add_option("--os-n", os_n, "eigenproblem collocation points")->capture_default_str();
  oss_cmd->add_option("--mode", mode_index, "mode index, 0 = least damped")->capture_default_str();
  oss_cmd->add_option("--amplitude", amplitude, "perturbation amplitude")->capture_default_str();
  oss_cmd->add_flag("--no-base", no_base, "omit the Poiseuille base flow");
  oss_cmd->add_option("--tol", cfg.tol, "relative verdict tolerance")->capture_default_str();
  add_common(oss_cmd, cfg);
  add_params(oss_cmd, cfg.params);

  int degree = 4;
  std::uint64_t seed = 1;
  int restarts = 5;
  int max_iter = 50;
  std::string kind = "full";
  auto* find_cmd = app.add_subcommand("find", "search the polynomial ansatz for a compatible field with u2 != 0");
  find_cmd->add_option("--degree", degree, "degree of the free polynomials")->capture_default_str()->check(CLI::Range(0, 12));
  find_cmd->add_option("--seed", seed, "first RNG seed")->capture_default_str();
  find_cmd->add_option("--restarts", restarts, "additional seeds tried after a failure")->capture_default_str();
  find_cmd->add_option("--max-iter", max_iter, "iterations per attempt")->capture_default_str();
  find_cmd->add_option("--residual", kind, "full | defect | defect-cosine")->capture_default_str();
  find_cmd->add_option("--tol", cfg.tol, "relative verdict tolerance for the final check")->capture_default_str();
  add_common(find_cmd, cfg);
  add_params(find_cmd, cfg.params);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitError;
  }

  try {
    if (check_cmd->parsed()) return cmd_check(cfg);
    if (validate_cmd->parsed()) return cmd_validate(cfg, div_tol);
    if (example_cmd->parsed()) return cmd_example(cfg);
    if (oss_cmd->parsed()) return cmd_oss(cfg, os_n, mode_index, amplitude, no_base);
    if (find_cmd->parsed()) return cmd_find(cfg, degree, seed, restarts, kind, max_iter);
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    for (const auto& v : e.violations()) std::cerr << "  " << v << '\n';
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}
