// Acceptance suite: one pass/fail line per criterion, exit code = number of
// failing criteria. An optional argument (1..8) runs a single criterion.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "gup1d/analytic.hpp"
#include "gup1d/oracle.hpp"
#include "gup1d/scattering.hpp"
#include "gup1d/specfun.hpp"
#include "gup1d/stark.hpp"
#include "gup1d/verify.hpp"

using namespace gup1d;
using Clock = std::chrono::steady_clock;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Criterion {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

double loglog_slope(const std::vector<double>& xs, const std::vector<double>& ys) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = static_cast<double>(xs.size());
  for (size_t i = 0; i < xs.size(); ++i) {
    const double lx = std::log(xs[i]);
    const double ly = std::log(std::abs(ys[i]));
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

// 1. Airy zeros reproduce the quoted constants in under 0.1 s.
Criterion criterion_1() {
  Criterion c;
  const auto t0 = Clock::now();
  const double quoted[5] = {-2.33810, -4.08794, -5.52055, -6.78670, -7.94413};
  double worst = 0.0;
  for (int n = 1; n <= 5; ++n) {
    worst = std::max(worst, std::abs(specfun::airy_zero(n) - quoted[n - 1]));
  }
  const double elapsed = seconds_since(t0);
  char buf[128];
  std::snprintf(buf, sizeof(buf), "worst |a_n - quoted| = %.3e (tol 1e-5), %.4f s",
                worst, elapsed);
  c.detail = buf;
  c.require(worst <= 1e-5, "zero mismatch");
  c.require(elapsed < 0.1, "too slow");
  return c;
}

// 2. Linear potential vs grid oracle at n_points = 3000, x in [0, 30],
//    lambda in {0, 0.5, 1}, n = 1..5, |dE| <= 1e-4; O(h^2) refinement; < 30 s.
Criterion criterion_2() {
  Criterion c;
  const auto t0 = Clock::now();
  const auto slope_v = [](double x) { return x; };
  double worst = 0.0;
  double worst_lambda = 0.0;
  int worst_n = 0;
  for (double lam : {0.0, 0.5, 1.0}) {
    PhysicalParams p;
    p.lambda = lam;
    const oracle::Grid g{0.0, 30.0, 3000};
    const auto levels =
        oracle::eigenvalues_lowest(oracle::build_hamiltonian(slope_v, p, g), 5);
    for (int n = 1; n <= 5; ++n) {
      const double d = std::abs(levels[n - 1] - analytic::linear_energy(n, p));
      if (d > worst) {
        worst = d;
        worst_lambda = lam;
        worst_n = n;
      }
    }
  }
  // Leading-order error is O(h^2): the n = 5 discrepancy must shrink ~4x
  // per doubling of the resolution.
  PhysicalParams p0;
  std::vector<double> errs;
  for (int npts : {1500, 3000, 6000}) {
    const oracle::Grid g{0.0, 30.0, npts};
    const auto levels =
        oracle::eigenvalues_lowest(oracle::build_hamiltonian(slope_v, p0, g), 5);
    errs.push_back(std::abs(levels[4] - analytic::linear_energy(5, p0)));
  }
  const double r1 = errs[0] / errs[1];
  const double r2 = errs[1] / errs[2];
  const double elapsed = seconds_since(t0);
  char buf[192];
  std::snprintf(buf, sizeof(buf),
                "worst |dE| = %.3e at lambda=%.1f n=%d (tol 1e-4); refinement "
                "ratios %.2f, %.2f; %.1f s",
                worst, worst_lambda, worst_n, r1, r2, elapsed);
  c.detail = buf;
  c.require(worst <= 1e-4, "level mismatch beyond 1e-4");
  c.require(r1 > 3.5 && r1 < 4.5 && r2 > 3.5 && r2 < 4.5, "not O(h^2)");
  c.require(elapsed < 30.0, "too slow");
  return c;
}

// 3. Gauge-shift law at oracle level for linear, regularized-delta, and
//    harmonic potentials: levels and eigenvector moduli within 1e-5.
Criterion criterion_3() {
  Criterion c;
  const double lam = 0.2;
  PhysicalParams p0;
  PhysicalParams pl;
  pl.lambda = lam;
  const double shift = pl.gauge_shift();
  double worst_level = 0.0, worst_mod = 0.0;

  const auto compare = [&](const oracle::GridHamiltonian& h0,
                           const oracle::GridHamiltonian& hl) {
    const auto m0 = oracle::eigen_lowest(h0, 5);
    const auto ml = oracle::eigen_lowest(hl, 5);
    for (int j = 0; j < 5; ++j) {
      worst_level = std::max(worst_level,
                             std::abs(ml[j].energy - m0[j].energy - shift));
      for (size_t i = 0; i < m0[j].amplitudes.size(); ++i) {
        worst_mod = std::max(worst_mod, std::abs(std::abs(ml[j].amplitudes[i]) -
                                                 std::abs(m0[j].amplitudes[i])));
      }
    }
  };

  const auto linear_v = [](double x) { return x; };
  const auto harmonic_v = [](double x) { return 0.5 * x * x; };
  {
    const oracle::Grid g{0.0, 30.0, 3000};
    compare(oracle::build_hamiltonian(linear_v, p0, g),
            oracle::build_hamiltonian(linear_v, pl, g));
  }
  {
    const oracle::Grid g{-12.0, 12.0, 2401};
    compare(oracle::build_hamiltonian(harmonic_v, p0, g),
            oracle::build_hamiltonian(harmonic_v, pl, g));
  }
  {
    const oracle::Grid g{-25.0, 25.0, 4001};
    compare(oracle::build_delta_well_hamiltonian(p0, g),
            oracle::build_delta_well_hamiltonian(pl, g));
  }
  char buf[160];
  std::snprintf(buf, sizeof(buf),
                "worst level shift error %.3e, worst modulus diff %.3e (tol 1e-5)",
                worst_level, worst_mod);
  c.detail = buf;
  c.require(worst_level <= 1e-5, "level shift");
  c.require(worst_mod <= 1e-5, "modulus mismatch");
  return c;
}

// 4. Delta well: spike-regularized grid energy within 1e-3 relative at
//    n_points = 4000, monotone refinement, analytic step equation to 1e-10.
Criterion criterion_4() {
  Criterion c;
  double worst_rel = 0.0;
  for (double lam : {0.0, 0.7}) {
    PhysicalParams p;
    p.lambda = lam;
    const oracle::Grid g{-25.0, 25.0, 4000};
    const double e =
        oracle::eigenvalues_lowest(oracle::build_delta_well_hamiltonian(p, g), 1)[0];
    const double exact = analytic::delta_well_energy(p);
    worst_rel = std::max(worst_rel, std::abs(e - exact) / std::abs(exact));
  }
  PhysicalParams p0;
  double prev = kInf;
  bool monotone = true;
  for (int npts : {1000, 2000, 4000}) {
    const oracle::Grid g{-25.0, 25.0, npts};
    const double err =
        std::abs(oracle::eigenvalues_lowest(oracle::build_delta_well_hamiltonian(p0, g),
                                            1)[0] -
                 analytic::delta_well_energy(p0));
    monotone = monotone && (err < prev);
    prev = err;
  }
  PhysicalParams ps;
  ps.lambda = 0.7;
  const auto psi = [&](double x) { return analytic::delta_well_wavefunction(x, ps); };
  const Complex jump = oracle::one_sided_derivative(psi, 0.0, +1, 1e-3) -
                       oracle::one_sided_derivative(psi, 0.0, -1, 1e-3);
  const Complex expected =
      -2.0 * ps.mass * ps.strength / (ps.hbar * ps.hbar) * psi(0.0);
  const double step_res = std::abs(jump - expected) / std::abs(expected);
  char buf[160];
  std::snprintf(buf, sizeof(buf),
                "worst rel |dE| = %.3e (tol 1e-3); refinement monotone: %s; "
                "step residual %.2e (tol 1e-10)",
                worst_rel, monotone ? "yes" : "no", step_res);
  c.detail = buf;
  c.require(worst_rel <= 1e-3, "energy mismatch");
  c.require(monotone, "refinement not monotone");
  c.require(step_res <= 1e-10, "step equation");
  return c;
}

// 5. Barrier: unitarity 1e-12 over 1000 random triples; energy-shift
//    equivalence 1e-14; transfer oracle within 1e-3 at width 1e-3;
//    excess-current ratio slope 2 +- 0.1.
Criterion criterion_5() {
  Criterion c;
  std::mt19937_64 rng(20240815);
  std::uniform_real_distribution<double> e_dist(0.05, 8.0);
  std::uniform_real_distribution<double> v_dist(0.1, 5.0);
  std::uniform_real_distribution<double> l_dist(-2.0, 2.0);
  double worst_unit = 0.0, worst_shift = 0.0;
  for (int i = 0; i < 1000; ++i) {
    PhysicalParams p;
    p.strength = v_dist(rng);
    p.lambda = l_dist(rng);
    const double e = e_dist(rng);
    const auto r = scattering::barrier_amplitudes(e, p);
    worst_unit = std::max(worst_unit, std::abs(r.T + r.Rc - 1.0));
    PhysicalParams q = p;
    q.lambda = 0.0;
    const auto r0 =
        scattering::barrier_amplitudes(e + p.lambda * p.lambda / (2.0 * p.mass), q);
    worst_shift = std::max(worst_shift, std::abs(r.T - r0.T));
  }
  double worst_transfer = 0.0;
  for (const auto& [e, lam] :
       std::vector<std::pair<double, double>>{{0.5, 0.0}, {0.7, 0.3}, {2.0, -1.0}}) {
    PhysicalParams p;
    p.lambda = lam;
    worst_transfer = std::max(
        worst_transfer, std::abs(oracle::scattering_transfer(e, p, 1e-3).T -
                                 scattering::barrier_amplitudes(e, p).T));
  }
  std::vector<double> lams, devs;
  for (int i = 0; i <= 12; ++i) {
    const double lam = 1e-4 * std::pow(10.0, 3.0 * i / 12.0);
    PhysicalParams p;
    p.lambda = lam;
    const auto ex = scattering::excess_tunneling_current(0.5, p);
    lams.push_back(lam);
    devs.push_back(ex.exact / ex.leading - 1.0);
  }
  const double slope = loglog_slope(lams, devs);
  char buf[200];
  std::snprintf(buf, sizeof(buf),
                "unitarity %.2e (1e-12); shift equiv %.2e (1e-14); transfer "
                "|dT| %.2e (1e-3); slope %.3f (2 +- 0.1)",
                worst_unit, worst_shift, worst_transfer, slope);
  c.detail = buf;
  c.require(worst_unit <= 1e-12, "unitarity");
  c.require(worst_shift <= 1e-14, "energy-shift equivalence");
  c.require(worst_transfer <= 1e-3, "transfer oracle");
  c.require(std::abs(slope - 2.0) <= 0.1, "excess slope");
  return c;
}

// 6. Coulomb: deformed-equation residual < 1e-7 for both branches, n = 1..4;
//    softened-grid energies close on E_n monotonically as a -> 0.
Criterion criterion_6() {
  Criterion c;
  PhysicalParams p;
  p.lambda = 0.6;
  double worst_res = 0.0;
  for (int n = 1; n <= 4; ++n) {
    std::vector<double> pts;
    for (int i = 0; i < 25; ++i) {
      pts.push_back(0.3 + (3.0 * n - 0.3) * i / 24.0);
      pts.push_back(-0.3 - (3.0 * n - 0.3) * i / 24.0);
    }
    const double e = analytic::coulomb_energy(n, p);
    for (auto br : {analytic::CoulombBranch::A, analytic::CoulombBranch::B}) {
      worst_res = std::max(
          worst_res,
          oracle::ode_residual(
              [&](double x) { return analytic::coulomb_wavefunction(n, br, x, p); }, e,
              [&](double x) { return -p.kappa / std::abs(x); }, p, pts, 0.01));
    }
  }
  PhysicalParams p0;
  bool monotone = true;
  double final_dist = 0.0;
  for (int n = 1; n <= 2; ++n) {
    const double exact = analytic::coulomb_energy(n, p0);
    double prev = kInf;
    for (double a : {1e-1, 1e-2, 1e-3}) {
      const double e =
          oracle::coulomb_halfline_energies(p0, n, a, 3001, 60.0 * n)[n - 1];
      const double dist = std::abs(e - exact);
      monotone = monotone && (dist < prev);
      prev = dist;
    }
    final_dist = std::max(final_dist, prev);
  }
  char buf[160];
  std::snprintf(buf, sizeof(buf),
                "worst residual %.2e (tol 1e-7); softening trend monotone: %s "
                "(final distance %.2e)",
                worst_res, monotone ? "yes" : "no", final_dist);
  c.detail = buf;
  c.require(worst_res <= 1e-7, "ODE residual");
  c.require(monotone, "softening trend");
  return c;
}

// 7. Stark: closed form vs quadrature 1e-9 (n = 1..6), parity zeros, exact
//    n^5 law, lambda-independence 1e-10, total splitting coefficient 3/2.
Criterion criterion_7() {
  Criterion c;
  PhysicalParams p;
  p.field = 1.0;
  double worst_quad = 0.0, worst_diag = 0.0, worst_n5 = 0.0, worst_lam = 0.0,
         worst_total = 0.0;
  const double h1 = stark::stark_matrix_element(1, p, stark::MatrixElementMethod::closed_form);
  worst_quad = std::abs(h1 - 0.75);  // unit-parameter value is exactly 3/4
  for (int n = 1; n <= 6; ++n) {
    const double closed =
        stark::stark_matrix_element(n, p, stark::MatrixElementMethod::closed_form);
    const double quad =
        stark::stark_matrix_element(n, p, stark::MatrixElementMethod::quadrature);
    worst_quad = std::max(worst_quad, std::abs(closed - quad) / closed);
    worst_n5 = std::max(worst_n5, std::abs(closed / h1 - std::pow(n, 5)) / std::pow(n, 5));
    if (n <= 3) {
      worst_diag = std::max(worst_diag, std::abs(stark::stark_diagonal_element(n, p)) / closed);
      PhysicalParams q = p;
      for (double lam : {0.0, 0.5, 2.0}) {
        q.lambda = lam;
        worst_lam = std::max(
            worst_lam,
            std::abs(stark::stark_matrix_element(n, q, stark::MatrixElementMethod::quadrature) -
                     quad) /
                quad);
      }
    }
    const auto total = stark::stark_total_energies(n, p);
    const double half = 0.5 * (total.e_plus - total.e_minus);
    const double expected = 1.5 * std::pow(n, 5);
    worst_total = std::max(worst_total, std::abs(half - expected) / expected);
  }
  char buf[200];
  std::snprintf(buf, sizeof(buf),
                "closed-vs-quad %.2e (1e-9); diag/h12 %.2e (1e-10); n^5 %.2e; "
                "lambda %.2e (1e-10); split coeff %.2e",
                worst_quad, worst_diag, worst_n5, worst_lam, worst_total);
  c.detail = buf;
  c.require(worst_quad <= 1e-9, "quadrature agreement");
  c.require(worst_diag <= 1e-10, "diagonal parity");
  c.require(worst_n5 <= 1e-14, "n^5 law");
  c.require(worst_lam <= 1e-10, "lambda independence");
  c.require(worst_total <= 1e-13, "splitting coefficient");
  return c;
}

// 8. The full verify suite passes with exit 0 in under 2 minutes.
Criterion criterion_8() {
  Criterion c;
  const auto t0 = Clock::now();
  const auto checks = verify::run_all();
  const double elapsed = seconds_since(t0);
  int failed = 0;
  for (const auto& chk : checks) {
    if (!chk.pass) {
      ++failed;
      std::printf("        failing check: %s measured %.3e tol %.3e\n",
                  chk.name.c_str(), chk.measured, chk.tolerance);
    }
  }
  char buf[128];
  std::snprintf(buf, sizeof(buf), "%zu checks, %d failing, %.1f s (limit 120 s)",
                checks.size(), failed, elapsed);
  c.detail = buf;
  c.require(failed == 0, "checks failing");
  c.require(elapsed < 120.0, "too slow");
  return c;
}

const char* kNames[8] = {
    "airy zeros match the quoted constants",
    "linear potential vs grid oracle",
    "gauge-shift law at oracle level",
    "delta well vs spike-regularized oracle",
    "barrier identities, transfer oracle, excess-current slope",
    "coulomb residuals and softening trend",
    "stark matrix elements and splitting",
    "full verify suite green under two minutes",
};

}  // namespace

int main(int argc, char** argv) {
  std::function<Criterion()> criteria[8] = {
      criterion_1, criterion_2, criterion_3, criterion_4,
      criterion_5, criterion_6, criterion_7, criterion_8};
  int first = 0, last = 7;
  if (argc > 1) {
    const int pick = std::atoi(argv[1]);
    if (pick < 1 || pick > 8) {
      std::fprintf(stderr, "usage: %s [criterion 1..8]\n", argv[0]);
      return 2;
    }
    first = last = pick - 1;
  }
  int failures = 0;
  for (int i = first; i <= last; ++i) {
    const Criterion c = criteria[i]();
    std::printf("[%s] criterion %d: %s\n        %s\n", c.pass ? "PASS" : "FAIL",
                i + 1, kNames[i], c.detail.c_str());
    if (!c.pass) ++failures;
  }
  return failures;
}
