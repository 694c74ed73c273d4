// Command-line front end: bound spectra, scattering sweeps, Stark reports,
// and the analytic-vs-oracle verification suite, as CSV or JSON tables.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <thread>
#include <vector>

#include "gup1d/analytic.hpp"
#include "gup1d/oracle.hpp"
#include "gup1d/report.hpp"
#include "gup1d/scattering.hpp"
#include "gup1d/stark.hpp"
#include "gup1d/verify.hpp"

namespace {

using namespace gup1d;

struct RunConfig {
  PhysicalParams params;
  int n_min = 1;
  int n_max = 5;
  int grid_points = 0;  // 0 = subcommand default
  double x_max = 0.0;   // 0 = subcommand default
  std::string format = "csv";
  std::string out_path;
  double tolerance = 1.0;  // scale on verify tolerances / quadrature tol
  int threads = 0;         // 0 = hardware concurrency
  int samples = 0;
  bool with_oracle = false;
  double energy_min = 0.1;
  double energy_max = 2.0;
  int energy_steps = 20;
  double reg_width = 1e-3;
  double softening = 1e-3;
  std::string filter;
};

void add_shared_flags(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--mass", cfg.params.mass, "Particle mass m (default 1)");
  cmd->add_option("--hbar", cfg.params.hbar, "Reduced Planck constant (default 1)");
  cmd->add_option("--lambda", cfg.params.lambda,
                  "Momentum deformation parameter (default 0)");
  cmd->add_option("--slope", cfg.params.slope, "Linear-potential slope F (default 1)");
  cmd->add_option("--strength", cfg.params.strength,
                  "Delta potential strength V (default 1)");
  cmd->add_option("--kappa", cfg.params.kappa, "Coulomb coupling kappa (default 1)");
  cmd->add_option("--field", cfg.params.field, "Stark product e*E (default 0.01)");
  cmd->add_option("--n-min", cfg.n_min, "First level index (default 1)");
  cmd->add_option("--n-max", cfg.n_max, "Last level index (default 5)");
  cmd->add_option("--grid-points", cfg.grid_points,
                  "Oracle grid nodes (defaults: linear 2000, delta 4000, coulomb 3001)");
  cmd->add_option("--x-max", cfg.x_max,
                  "Oracle box edge (defaults: linear 30, delta 25, coulomb 60*n)");
  cmd->add_option("--format", cfg.format, "Output format: csv or json (default csv)")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--out", cfg.out_path, "Write output to PATH instead of stdout");
  cmd->add_option("--tolerance", cfg.tolerance,
                  "Scale factor on the documented default tolerances (default 1)");
  cmd->add_option("--threads", cfg.threads,
                  "Worker pool size for sweeps (default: number of processors)");
}

int emit(const RunConfig& cfg, const std::string& command,
         const report::ParamList& params, const report::Table& table,
         const std::vector<report::CheckRow>& checks, bool force_json = false) {
  const std::string text = (cfg.format == "json" || force_json)
                               ? report::to_json(command, params, table, checks)
                               : report::to_csv(table);
  if (cfg.out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(cfg.out_path, std::ios::binary);
    if (!f) {
      std::cerr << "error: cannot open " << cfg.out_path << "\n";
      return 2;
    }
    f << text;
  }
  return 0;
}

report::ParamList base_params(const RunConfig& cfg) {
  return {{"mass", cfg.params.mass},     {"hbar", cfg.params.hbar},
          {"lambda", cfg.params.lambda}, {"slope", cfg.params.slope},
          {"strength", cfg.params.strength}, {"kappa", cfg.params.kappa},
          {"field", cfg.params.field}};
}

// Deterministic fan-out: results land in index order regardless of pool size.
void parallel_for(int n_items, int threads, const std::function<void(int)>& body) {
  if (threads <= 0) {
    threads = static_cast<int>(std::thread::hardware_concurrency());
    if (threads <= 0) threads = 1;
  }
  threads = std::min(threads, n_items);
  if (threads <= 1) {
    for (int i = 0; i < n_items; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(static_cast<size_t>(threads));
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      for (int i = t; i < n_items; i += threads) body(i);
    });
  }
  for (std::thread& th : pool) th.join();
}

int cmd_linear(RunConfig& cfg) {
  cfg.params.require_slope();
  const int points = cfg.grid_points > 0 ? cfg.grid_points : 2000;
  const double x_max = cfg.x_max > 0.0 ? cfg.x_max : 30.0;
  report::Table t;
  if (cfg.samples > 0) {
    t.columns = {{"n", true}, {"x", false}, {"re_psi", false}, {"im_psi", false},
                 {"abs_psi", false}};
    for (int n = cfg.n_min; n <= cfg.n_max; ++n) {
      for (int i = 0; i < cfg.samples; ++i) {
        const double x = x_max * i / (cfg.samples - 1.0);
        const Complex v = analytic::linear_wavefunction(n, x, cfg.params);
        t.rows.push_back({static_cast<double>(n), x, v.real(), v.imag(), std::abs(v)});
      }
    }
    return emit(cfg, "linear", base_params(cfg), t, {});
  }
  const oracle::Grid g{0.0, x_max, points};
  const auto ham = oracle::build_hamiltonian(
      [&](double x) { return cfg.params.slope * x; }, cfg.params, g);
  const auto levels = oracle::eigenvalues_lowest(ham, cfg.n_max);
  t.columns = {{"n", true}, {"energy_analytic", false}, {"energy_oracle", false},
               {"abs_diff", false}};
  for (int n = cfg.n_min; n <= cfg.n_max; ++n) {
    const double ea = analytic::linear_energy(n, cfg.params);
    const double eo = levels[static_cast<size_t>(n - 1)];
    t.rows.push_back({static_cast<double>(n), ea, eo, std::abs(ea - eo)});
  }
  return emit(cfg, "linear", base_params(cfg), t, {});
}

int cmd_delta_well(RunConfig& cfg) {
  cfg.params.require_strength();
  const int points = cfg.grid_points > 0 ? cfg.grid_points : 4000;
  const double x_max = cfg.x_max > 0.0 ? cfg.x_max : 25.0;
  report::Table t;
  if (cfg.samples > 0) {
    t.columns = {{"x", false}, {"re_psi", false}, {"im_psi", false}, {"abs_psi", false}};
    for (int i = 0; i < cfg.samples; ++i) {
      const double x = -x_max + 2.0 * x_max * i / (cfg.samples - 1.0);
      const Complex v = analytic::delta_well_wavefunction(x, cfg.params);
      t.rows.push_back({x, v.real(), v.imag(), std::abs(v)});
    }
    return emit(cfg, "delta-well", base_params(cfg), t, {});
  }
  const oracle::Grid g{-x_max, x_max, points};
  const double eo =
      oracle::eigenvalues_lowest(oracle::build_delta_well_hamiltonian(cfg.params, g), 1)[0];
  const double ea = analytic::delta_well_energy(cfg.params);
  t.columns = {{"energy_analytic", false}, {"energy_oracle", false}, {"abs_diff", false},
               {"rel_diff", false}};
  t.rows.push_back({ea, eo, std::abs(ea - eo), std::abs(ea - eo) / std::abs(ea)});
  return emit(cfg, "delta-well", base_params(cfg), t, {});
}

int cmd_barrier(RunConfig& cfg) {
  cfg.params.require_strength();
  if (!(cfg.energy_min > 0.0) || !(cfg.energy_max >= cfg.energy_min) ||
      cfg.energy_steps < 1) {
    throw std::invalid_argument("barrier: need 0 < energy-min <= energy-max, steps >= 1");
  }
  report::Table t;
  t.columns = {{"energy", false}, {"T", false}, {"Rc", false},
               {"excess_exact", false}, {"excess_leading", false},
               {"re_S", false}, {"im_S", false}, {"re_R", false}, {"im_R", false},
               {"k_plus", false}, {"k_minus", false}};
  if (cfg.with_oracle) t.columns.push_back({"T_oracle", false});
  t.rows.resize(static_cast<size_t>(cfg.energy_steps));
  parallel_for(cfg.energy_steps, cfg.threads, [&](int i) {
    const double e =
        cfg.energy_min +
        (cfg.energy_max - cfg.energy_min) *
            (cfg.energy_steps == 1 ? 0.0 : static_cast<double>(i) / (cfg.energy_steps - 1));
    const scattering::ScatteringResult r = scattering::barrier_amplitudes(e, cfg.params);
    std::vector<double> row = {e, r.T, r.Rc, r.excess_exact, r.excess_leading,
                               r.S.real(), r.S.imag(), r.R.real(), r.R.imag(),
                               r.k_plus, r.k_minus};
    if (cfg.with_oracle) {
      row.push_back(oracle::scattering_transfer(e, cfg.params, cfg.reg_width).T);
    }
    t.rows[static_cast<size_t>(i)] = std::move(row);
  });
  report::ParamList params = base_params(cfg);
  params.emplace_back("reg_width", cfg.reg_width);
  return emit(cfg, "barrier", params, t, {});
}

int cmd_coulomb(RunConfig& cfg) {
  cfg.params.require_kappa();
  report::Table t;
  t.columns = {{"n", true}, {"energy_analytic", false}};
  if (cfg.with_oracle) {
    t.columns.push_back({"energy_oracle", false});
    t.columns.push_back({"abs_diff", false});
  }
  for (int n = cfg.n_min; n <= cfg.n_max; ++n) {
    const double ea = analytic::coulomb_energy(n, cfg.params);
    std::vector<double> row = {static_cast<double>(n), ea};
    if (cfg.with_oracle) {
      const int points = cfg.grid_points > 0 ? cfg.grid_points : 3001;
      const double x_max = (cfg.x_max > 0.0 ? cfg.x_max : 60.0) * n;
      const double eo = oracle::coulomb_halfline_energies(cfg.params, n, cfg.softening,
                                                          points, x_max)[n - 1];
      row.push_back(eo);
      row.push_back(std::abs(ea - eo));
    }
    t.rows.push_back(std::move(row));
  }
  report::ParamList params = base_params(cfg);
  if (cfg.with_oracle) params.emplace_back("softening", cfg.softening);
  return emit(cfg, "coulomb", params, t, {});
}

int cmd_stark(RunConfig& cfg) {
  cfg.params.require_kappa();
  report::Table t;
  t.columns = {{"n", true}, {"h11", false}, {"h22", false}, {"h12", false},
               {"h21", false}, {"h12_quadrature", false},
               {"e1_first", false}, {"e2_first", false},
               {"e1_second", false}, {"e2_second", false},
               {"total_plus", false}, {"total_minus", false},
               {"norm_squared", false}, {"h12_normalized", false}};
  t.notes = {"second-order values are rotated-basis first-order expectations,"
             " not a sum-over-states correction",
             "matrix elements use the unnormalized degenerate pair;"
             " h12_normalized divides by norm_squared"};
  const int count = cfg.n_max - cfg.n_min + 1;
  if (count < 1) throw std::invalid_argument("stark: need n-min <= n-max");
  t.rows.resize(static_cast<size_t>(count));
  parallel_for(count, cfg.threads, [&](int i) {
    const int n = cfg.n_min + i;
    const stark::StarkReport r = stark::stark_report(n, cfg.params);
    t.rows[static_cast<size_t>(i)] = {
        static_cast<double>(r.n), r.h11, r.h22, r.h12, r.h21, r.h12_quadrature,
        r.e1_first, r.e2_first, r.e1_second, r.e2_second,
        r.total_plus, r.total_minus, r.norm_squared, r.h12_normalized};
  });
  return emit(cfg, "stark", base_params(cfg), t, {});
}

int cmd_verify(RunConfig& cfg) {
  const auto checks = verify::run_all(cfg.filter, cfg.tolerance);
  report::Table t;  // rows stay empty; the findings live under "checks"
  report::ParamList params = {{"tolerance_scale", cfg.tolerance}};
  const int rc = emit(cfg, "verify", params, t, checks, /*force_json=*/true);
  if (rc != 0) return rc;
  int failed = 0;
  for (const auto& c : checks) {
    if (!c.pass) {
      std::cerr << "FAIL " << c.name << ": measured " << report::format_value(c.measured)
                << " tolerance " << report::format_value(c.tolerance) << "\n";
      ++failed;
    }
  }
  if (checks.empty()) {
    std::cerr << "no checks matched filter '" << cfg.filter << "'\n";
    return 2;
  }
  return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "gup1d: one-dimensional quantum systems with a linear momentum deformation\n"
      "(p -> p + lambda). Closed-form spectra, scattering and Stark tables, and\n"
      "independent numerical cross-checks (grid diagonalization, transfer matrix,\n"
      "adaptive quadrature). Exit codes: 0 ok, 1 verification failure, 2 usage."};
  app.require_subcommand(1);

  RunConfig cfg;
  auto* linear = app.add_subcommand("linear", "Linear-potential levels vs grid oracle");
  add_shared_flags(linear, cfg);
  linear->add_option("--samples", cfg.samples, "Emit wavefunction samples instead");

  auto* well = app.add_subcommand("delta-well", "Delta-well bound state vs spike oracle");
  add_shared_flags(well, cfg);
  well->add_option("--samples", cfg.samples, "Emit wavefunction samples instead");

  auto* barrier = app.add_subcommand("barrier", "Delta-barrier transmission sweep");
  add_shared_flags(barrier, cfg);
  barrier->add_option("--energy-min", cfg.energy_min, "Sweep start (default 0.1)");
  barrier->add_option("--energy-max", cfg.energy_max, "Sweep end (default 2.0)");
  barrier->add_option("--energy-steps", cfg.energy_steps, "Sweep points (default 20)");
  barrier->add_flag("--oracle", cfg.with_oracle, "Add transfer-matrix T column");
  barrier->add_option("--reg-width", cfg.reg_width,
                      "Gaussian regularization width (default 1e-3)");

  auto* coulomb = app.add_subcommand("coulomb", "Coulomb levels (optionally vs oracle)");
  add_shared_flags(coulomb, cfg);
  coulomb->add_flag("--oracle", cfg.with_oracle,
                    "Add softened-potential grid energies");
  coulomb->add_option("--softening", cfg.softening,
                      "Coulomb softening length a (default 1e-3)");

  auto* stark = app.add_subcommand("stark", "Stark matrix elements and split levels");
  add_shared_flags(stark, cfg);

  auto* verify_cmd = app.add_subcommand(
      "verify", "Run every module invariant check; JSON report; exit 1 on failure");
  add_shared_flags(verify_cmd, cfg);
  verify_cmd->add_option("--filter", cfg.filter,
                         "Only run checks whose name contains this substring");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (app.got_subcommand(linear)) return cmd_linear(cfg);
    if (app.got_subcommand(well)) return cmd_delta_well(cfg);
    if (app.got_subcommand(barrier)) return cmd_barrier(cfg);
    if (app.got_subcommand(coulomb)) return cmd_coulomb(cfg);
    if (app.got_subcommand(stark)) return cmd_stark(cfg);
    if (app.got_subcommand(verify_cmd)) return cmd_verify(cfg);
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
