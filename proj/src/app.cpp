#include "atmofv/app.hpp"

#include "atmofv/diagnostics.hpp"
#include "atmofv/io.hpp"
#include "atmofv/shocktube.hpp"
#include "atmofv/simulation.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

namespace atmofv {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

/// Config file lines turned into command-line tokens for `sub`.
std::vector<std::string> config_tokens(const std::string& path, const CLI::App& sub) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config file '" + path + "'");
  std::vector<std::string> tokens;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    const std::string where = path + ":" + std::to_string(lineno);
    if (eq == std::string::npos) throw UsageError(where + ": expected 'key = value', got '" + line + "'");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    const CLI::Option* opt = sub.get_option_no_throw("--" + key);
    if (opt == nullptr || key == "config") throw UsageError(where + ": unknown key '" + key + "'");
    if (opt->get_expected_max() == 0) {
      if (value == "true" || value == "1") {
        tokens.push_back("--" + key);
      } else if (value != "false" && value != "0") {
        throw UsageError(where + ": bad boolean '" + value + "' for '" + key + "'");
      }
      continue;
    }
    tokens.push_back("--" + key);
    tokens.push_back(value);
  }
  return tokens;
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(trim(item));
  return out;
}

template <class F>
auto as_usage(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const ConfigError& e) {
    throw UsageError(e.what());
  }
}

struct RunFlags {
  std::string case_name;
  std::string flux = "hllc-ausm";
  std::optional<double> dx, dz, dt, t_end, mu_a, pr, theta0;
  std::optional<double> x_min, x_max, z_min, z_max;
  std::optional<double> center_x, center_z, radius_x, radius_z, amplitude;
  std::optional<double> m_inf;
  std::string refresh = "stage";
  std::string out = ".";
  std::optional<std::int64_t> snapshot_every;
  std::int64_t diag_every = 10;
  std::optional<double> line_z;
  std::string formats = "csv,vtk";
  bool quiet = false;
  std::string config;
};

struct TubeFlags {
  std::vector<int> cells{100, 200, 400};
  std::vector<std::string> flux;
  std::optional<double> m_inf;
};

void add_run_options(CLI::App& run, RunFlags& f) {
  run.add_option("--case", f.case_name, "hydrostatic | bubble | density-current")->required();
  run.add_option("--flux", f.flux, "roe-pike | hllc | ausm-up | hllc-ausm");
  run.add_option("--dx", f.dx, "horizontal spacing [m]");
  run.add_option("--dz", f.dz, "vertical spacing [m]");
  run.add_option("--dt", f.dt, "time step [s]");
  run.add_option("--t-end", f.t_end, "final time [s]");
  run.add_option("--mu-a", f.mu_a, "artificial viscosity [m^2/s]");
  run.add_option("--pr", f.pr, "Prandtl number");
  run.add_option("--theta0", f.theta0, "background potential temperature [K]");
  run.add_option("--x-min", f.x_min);
  run.add_option("--x-max", f.x_max);
  run.add_option("--z-min", f.z_min);
  run.add_option("--z-max", f.z_max);
  run.add_option("--center-x", f.center_x, "perturbation centre x [m]");
  run.add_option("--center-z", f.center_z, "perturbation centre z [m]");
  run.add_option("--radius-x", f.radius_x, "perturbation radius in x [m]");
  run.add_option("--radius-z", f.radius_z, "perturbation radius in z [m]");
  run.add_option("--amplitude", f.amplitude, "perturbation amplitude [K]");
  run.add_option("--m-inf", f.m_inf, "AUSM cut-off Mach number (default 0.3 for ausm-up, 0.01 otherwise)");
  run.add_option("--refresh", f.refresh, "profile refresh: stage | step");
  run.add_option("--out", f.out, "output directory");
  run.add_option("--snapshot-every", f.snapshot_every, "steps between snapshots");
  run.add_option("--diag-every", f.diag_every, "steps between diagnostic records");
  run.add_option("--line-z", f.line_z, "height of the theta' line sample [m]");
  run.add_option("--formats", f.formats, "comma list of csv, vtk");
  run.add_flag("--quiet", f.quiet, "no progress lines");
  run.add_option("--config", f.config, "key = value file");
}

RunCommand build_run(const RunFlags& f) {
  RunCommand cmd;
  CaseConfig& c = cmd.cfg;
  c = as_usage([&] { return preset(parse_case_id(f.case_name)); });
  c.solver = SolverChoice::defaults_for(as_usage([&] { return parse_flux_scheme(f.flux); }));
  auto set = [](double& dst, const std::optional<double>& v) {
    if (v) dst = *v;
  };
  set(c.dx, f.dx);
  set(c.dz, f.dz);
  set(c.dt, f.dt);
  set(c.t_end, f.t_end);
  set(c.diffusion.mu_a, f.mu_a);
  set(c.diffusion.Pr, f.pr);
  set(c.theta0, f.theta0);
  set(c.x_min, f.x_min);
  set(c.x_max, f.x_max);
  set(c.z_min, f.z_min);
  set(c.z_max, f.z_max);
  set(c.bump.center_x, f.center_x);
  set(c.bump.center_z, f.center_z);
  set(c.bump.radius_x, f.radius_x);
  set(c.bump.radius_z, f.radius_z);
  set(c.bump.amplitude, f.amplitude);
  set(c.solver.ausm.M_inf, f.m_inf);
  if (f.refresh == "stage") {
    c.refresh_per_stage = true;
  } else if (f.refresh == "step") {
    c.refresh_per_stage = false;
  } else {
    throw UsageError("--refresh: expected stage | step, got '" + f.refresh + "'");
  }
  as_usage([&] {
    validate(c);
    return 0;
  });

  OutputPlan& p = cmd.plan;
  p.out_dir = f.out;
  p.snapshot_every = f.snapshot_every;
  p.diag_every = f.diag_every;
  p.line_z = f.line_z;
  p.progress = !f.quiet;
  if (p.diag_every < 1) throw UsageError("--diag-every must be >= 1");
  if (p.snapshot_every && *p.snapshot_every < 1) throw UsageError("--snapshot-every must be >= 1");
  if (p.line_z && !(*p.line_z >= c.z_min && *p.line_z <= c.z_max)) {
    throw UsageError("--line-z outside the domain");
  }
  p.csv = false;
  p.vtk = false;
  for (const auto& fmt : split_commas(f.formats)) {
    if (fmt == "csv") {
      p.csv = true;
    } else if (fmt == "vtk") {
      p.vtk = true;
    } else {
      throw UsageError("--formats: unknown format '" + fmt + "'");
    }
  }
  return cmd;
}

ShockTubeCommand build_tube(const TubeFlags& f) {
  ShockTubeCommand cmd;
  cmd.cells = f.cells;
  for (int n : cmd.cells) {
    if (n < 3) throw UsageError("--cells: need at least 3 cells, got " + std::to_string(n));
  }
  if (!f.flux.empty()) {
    cmd.schemes.clear();
    for (const auto& s : f.flux) cmd.schemes.push_back(as_usage([&] { return parse_flux_scheme(s); }));
  }
  cmd.m_inf = f.m_inf;
  if (cmd.m_inf) {
    SolverChoice probe = SolverChoice::defaults_for(FluxScheme::AusmUp);
    probe.ausm.M_inf = *cmd.m_inf;
    as_usage([&] {
      validate(probe);
      return 0;
    });
  }
  return cmd;
}

}  // namespace

Command parse_cli(const std::vector<std::string>& args) {
  CLI::App app{"Well-balanced finite-volume solver for the compressible Euler equations", "atmofv"};
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  app.require_subcommand(1);

  RunFlags rf;
  CLI::App* run = app.add_subcommand("run", "run a benchmark case");
  add_run_options(*run, rf);

  TubeFlags tf;
  CLI::App* tube = app.add_subcommand("shocktube", "Sod shock-tube verification of the flux solvers");
  tube->add_option("--cells", tf.cells, "cell counts")->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
  tube->add_option("--flux", tf.flux, "solvers to test (default all)")
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
  tube->add_option("--m-inf", tf.m_inf, "AUSM cut-off Mach number (default 0.3 for ausm-up, 0.01 otherwise)");

  // Config-file values go in front of the command-line flags so the latter win.
  std::vector<std::string> expanded = args;
  if (!args.empty() && args[0] == "run") {
    for (std::size_t i = 1; i < args.size(); ++i) {
      std::string path;
      if (args[i] == "--config" && i + 1 < args.size()) {
        path = args[i + 1];
      } else if (args[i].rfind("--config=", 0) == 0) {
        path = args[i].substr(9);
      }
      if (!path.empty()) {
        const auto tokens = config_tokens(path, *run);
        expanded.insert(expanded.begin() + 1, tokens.begin(), tokens.end());
        break;
      }
    }
  }

  std::vector<std::string> reversed(expanded.rbegin(), expanded.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    CLI::App* target = run->parsed() ? run : tube->parsed() ? tube : &app;
    return HelpRequest{target->help()};
  } catch (const CLI::CallForAllHelp&) {
    return HelpRequest{app.help("", CLI::AppFormatMode::All)};
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  if (run->parsed()) return build_run(rf);
  return build_tube(tf);
}

int execute(const RunCommand& cmd, std::ostream& out, std::ostream& err) {
  const CaseConfig& cfg = cmd.cfg;
  const OutputPlan& plan = cmd.plan;
  const GasConstants k = dry_air();
  const std::string case_name{to_string(cfg.id)};
  const std::string flux_name{to_string(cfg.solver.scheme)};
  const std::int64_t total = step_count(cfg);
  const Mesh mesh(grid_spec(cfg));

  std::error_code ec;
  std::filesystem::create_directories(plan.out_dir, ec);
  if (ec) throw IoError("cannot create '" + plan.out_dir.string() + "': " + ec.message());

  DiagnosticsCsvWriter csv(plan.out_dir / (case_name + "_" + flux_name + "_diagnostics.csv"));

  auto snapshot = [&](const RunState& s) {
    const std::string stem = snapshot_stem(case_name, flux_name, s.t);
    const SnapshotFields f = snapshot_fields(s.states, mesh, cfg.theta0, k);
    if (plan.vtk) write_vtk(f, mesh, plan.out_dir / (stem + ".vtk"));
    if (plan.csv) write_grid_csv(f.theta_p, mesh, plan.out_dir / (stem + "_theta_p.csv"));
    if (plan.line_z) {
      write_line_csv(line_sample(f.theta_p, mesh, *plan.line_z),
                     plan.out_dir / (stem + "_line.csv"));
    }
  };

  RunOptions opts;
  opts.diag_every = plan.diag_every;
  opts.progress = plan.progress;
  opts.on_record = [&](const RunState&, const DiagnosticRecord& r) { csv.append(r); };
  opts.on_step = [&](const RunState& s) {
    const bool due = s.n == 0 || s.n == total || (plan.snapshot_every && s.n % *plan.snapshot_every == 0);
    if (due) snapshot(s);
  };

  RunResult result;
  try {
    result = run(cfg, k, opts);
  } catch (const StepError& e) {
    err << "atmofv: run failed at step " << e.step() << ": " << e.what() << '\n';
    return 1;
  }

  const DiagnosticRecord& last = result.records.back();
  const Field<double> theta_p = theta_perturbation(result.final_state.states, mesh, cfg.theta0, k);
  out << "case " << case_name << ", flux " << flux_name << ", " << mesh.nx() << "x" << mesh.nz()
      << " cells, " << total << " steps\n";
  out << "t = " << format_double(last.t) << " s\n";
  out << "u in [" << format_double(last.u_min) << ", " << format_double(last.u_max) << "] m/s\n";
  out << "w in [" << format_double(last.w_min) << ", " << format_double(last.w_max) << "] m/s\n";
  out << "theta' in [" << format_double(last.theta_p_min) << ", " << format_double(last.theta_p_max)
      << "] K\n";
  out << "front location (theta' = -1 K on the ground) = "
      << format_double(front_location(theta_p, mesh)) << " m\n";
  out << "diagnostics: " << csv.path().string() << '\n';
  return 0;
}

int execute(const ShockTubeCommand& cmd, std::ostream& out, std::ostream&) {
  out << "flux,cells,l1_density_error\n";
  for (FluxScheme s : cmd.schemes) {
    SolverChoice choice = SolverChoice::defaults_for(s);
    if (cmd.m_inf) choice.ausm.M_inf = *cmd.m_inf;
    for (int n : cmd.cells) {
      ShockTubeSetup setup;
      setup.cells = n;
      const ShockTubeResult r = run_shock_tube(choice, setup);
      out << to_string(s) << ',' << n << ',' << format_double(r.l1_error) << '\n';
    }
  }
  return 0;
}

int main_entry(int argc, const char* const* argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  Command cmd;
  try {
    cmd = parse_cli(args);
  } catch (const UsageError& e) {
    std::cerr << "atmofv: usage error: " << e.what() << "\nrun 'atmofv --help' for usage\n";
    return 2;
  }
  try {
    if (auto* h = std::get_if<HelpRequest>(&cmd)) {
      std::cout << h->text;
      return 0;
    }
    if (auto* r = std::get_if<RunCommand>(&cmd)) return execute(*r, std::cout, std::cerr);
    return execute(std::get<ShockTubeCommand>(cmd), std::cout, std::cerr);
  } catch (const std::exception& e) {
    std::cerr << "atmofv: error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace atmofv
