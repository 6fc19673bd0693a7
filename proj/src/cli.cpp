#include "ymh/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

#include "ymh/runner.hpp"
#include "ymh/verify.hpp"

namespace ymh {
namespace {

int print_checks(const std::vector<verify::CheckResult>& checks, std::ostream& out) {
  bool all = true;
  for (const auto& c : checks) {
    out << (c.pass ? "[PASS] " : "[FAIL] ") << c.name << "  value=" << c.value
        << "  bound=" << c.bound;
    if (!c.detail.empty()) out << "  (" << c.detail << ")";
    out << "\n";
    all = all && c.pass;
  }
  return all ? 0 : 2;
}

int run_command(const std::string& config_path, const std::string& output_dir_flag,
                long steps_flag, double dt_flag, bool has_steps, bool has_dt,
                std::ostream& out, std::ostream& err) {
  SimConfig config = parse_config_file(config_path);
  // Flag overrides beat file values.
  if (!output_dir_flag.empty()) config.output_dir = output_dir_flag;
  if (has_steps) config.steps = steps_flag;
  if (has_dt) config.dt = dt_flag;
  validate_config(config);

  if (config.mode == RunMode::VerifyHopf)
    return print_checks(verify::hopf_checks(config.hopf_samples, config.seed), out);
  if (config.mode == RunMode::VerifyAlgebra) {
    auto checks = verify::algebra_bracket_checks(config.verify_resolution, config.seed, 50);
    auto duals = verify::coadjoint_duality_checks(config.verify_resolution, config.seed, 48);
    checks.insert(checks.end(), duals.begin(), duals.end());
    return print_checks(checks, out);
  }

  std::filesystem::create_directories(config.output_dir);
  const auto csv_path = std::filesystem::path(config.output_dir) / "diagnostics.csv";
  std::ofstream csv(csv_path, std::ios::binary);
  if (!csv) throw ConfigError("cannot open '" + csv_path.string() + "' for writing");

  RunSinks sinks;
  sinks.diagnostics = &csv;
  sinks.warnings = &err;
  if (config.snap_every > 0) sinks.snapshot_dir = config.output_dir;
  RunResult result = run_simulation(config, sinks);
  out << "completed " << result.steps_completed << " steps; diagnostics at "
      << csv_path.string() << "\n";
  return 0;
}

} // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Pseudo-spectral simulator for incompressible charged ideal fluids on flat tori"};
  app.require_subcommand(1);

  // run
  auto* run = app.add_subcommand("run", "Integrate a configured simulation");
  std::string config_path, output_dir;
  long steps = 0;
  double dt = 0.0;
  run->add_option("--config", config_path, "Run configuration file")->required();
  auto* steps_opt = run->add_option("--steps", steps, "Override time.steps");
  auto* dt_opt = run->add_option("--dt", dt, "Override time.dt");
  run->add_option("--output-dir", output_dir, "Override output.dir");

  // verify hopf / verify algebra
  auto* ver = app.add_subcommand("verify", "Run a verification suite");
  ver->require_subcommand(1);
  auto* hopf = ver->add_subcommand("hopf", "Fibration volume and integration checks");
  long samples = 1'000'000;
  uint64_t seed = 0;
  hopf->add_option("--samples", samples, "Total QMC sample count");
  hopf->add_option("--seed", seed, "QMC shift seed");
  auto* algebra = ver->add_subcommand("algebra", "Bracket oracle and coadjoint duality checks");
  int resolution = 32;
  uint64_t aseed = 0;
  algebra->add_option("--resolution", resolution, "Grid resolution");
  algebra->add_option("--seed", aseed, "RNG seed");

  // emit-config
  auto* emit = app.add_subcommand("emit-config", "Print a shipped configuration template");
  std::string template_name, emit_path;
  emit->add_option("--template", template_name, "Template name")->required();
  emit->add_option("--output", emit_path, "Write to file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) { // --help
      out << app.help();
      return 0;
    }
    err << "YMH-ERROR: " << e.what() << "\n";
    return 1;
  }

  try {
    if (run->parsed()) {
      return run_command(config_path, output_dir, steps, dt, steps_opt->count() > 0,
                         dt_opt->count() > 0, out, err);
    }
    if (hopf->parsed()) {
      if (samples < 1000) throw ConfigError("--samples must be >= 1000");
      return print_checks(verify::hopf_checks(samples, seed), out);
    }
    if (algebra->parsed()) {
      if (resolution < 8 || (resolution & (resolution - 1)) != 0)
        throw ConfigError("--resolution: resolution must be a power of two >= 8");
      auto checks = verify::algebra_bracket_checks(resolution, aseed, 50);
      auto duals = verify::coadjoint_duality_checks(resolution, aseed, 48);
      checks.insert(checks.end(), duals.begin(), duals.end());
      return print_checks(checks, out);
    }
    if (emit->parsed()) {
      const std::string text = emit_config(config_template(template_name));
      if (emit_path.empty()) {
        out << text;
      } else {
        std::ofstream f(emit_path, std::ios::binary);
        if (!f) throw ConfigError("cannot open '" + emit_path + "' for writing");
        f << text;
      }
      return 0;
    }
  } catch (const ConfigError& e) {
    err << "YMH-ERROR: " << e.what();
    if (e.line() > 0) err << " (line " << e.line() << ")";
    err << "\n";
    return 1;
  } catch (const ArgumentError& e) {
    err << "YMH-ERROR: " << e.what() << "\n";
    return 1;
  } catch (const SolverError& e) {
    err << "YMH-ERROR: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

} // namespace ymh
