#include "gup1d/oracle.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <random>
#include <limits>

namespace gup1d::oracle {

double GridHamiltonian::hermiticity_residual() const {
  double worst = 0.0;
  for (size_t i = 0; i < upper_.size(); ++i) {
    worst = std::max(worst, std::abs(upper_[i] - std::conj(lower_[i])));
  }
  return worst;
}

double GridHamiltonian::scale() const {
  double s = 0.0;
  for (double d : diag_) s = std::max(s, std::abs(d));
  for (const Complex& c : upper_) s = std::max(s, std::abs(c));
  return s;
}

GridHamiltonian build_hamiltonian(const std::function<double(double)>& potential,
                                  const PhysicalParams& p, const Grid& g) {
  p.require_base();
  g.require_valid();
  const double h = g.spacing();
  const int dim = g.n_points - 2;
  const double kinetic = p.hbar * p.hbar / (p.mass * h * h);
  const Complex off_upper(-0.5 * kinetic, -p.hbar * p.lambda / (2.0 * p.mass * h));
  const Complex off_lower(-0.5 * kinetic, p.hbar * p.lambda / (2.0 * p.mass * h));
  std::vector<double> diag(static_cast<size_t>(dim));
  for (int i = 0; i < dim; ++i) {
    const double v = potential(g.x_min + h * (i + 1));
    if (!std::isfinite(v)) {
      throw std::invalid_argument("build_hamiltonian: potential sample not finite");
    }
    diag[static_cast<size_t>(i)] = kinetic + v;
  }
  std::vector<Complex> upper(static_cast<size_t>(dim - 1), off_upper);
  std::vector<Complex> lower(static_cast<size_t>(dim - 1), off_lower);
  return GridHamiltonian(g, std::move(diag), std::move(upper), std::move(lower));
}

GridHamiltonian build_delta_well_hamiltonian(const PhysicalParams& p, const Grid& g) {
  p.require_strength();
  g.require_valid();
  const double h = g.spacing();
  int spike = 0;
  double best = std::numeric_limits<double>::infinity();
  const int dim = g.n_points - 2;
  for (int i = 0; i < dim; ++i) {
    const double x = g.x_min + h * (i + 1);
    if (std::abs(x) < best) {
      best = std::abs(x);
      spike = i;
    }
  }
  const double depth = -p.strength / h;
  return build_hamiltonian(
      [&](double x) {
        return (std::abs(x - (g.x_min + h * (spike + 1))) < 0.5 * h) ? depth : 0.0;
      },
      p, g);
}

namespace {

// Diagonal phase similarity making the tridiagonal real with negative
// off-diagonals; the physical eigenvector is recovered as conj(u_i) v_i and
// its modulus equals |v_i|.
struct PhaseReduction {
  Eigen::VectorXd diag;
  Eigen::VectorXd sub;
  std::vector<Complex> phases;
};

PhaseReduction reduce_to_real(const GridHamiltonian& h) {
  const int n = h.dimension();
  PhaseReduction r;
  r.diag.resize(n);
  r.sub.resize(n - 1);
  r.phases.assign(static_cast<size_t>(n), Complex(1.0, 0.0));
  for (int i = 0; i < n; ++i) r.diag[i] = h.diagonal()[static_cast<size_t>(i)];
  for (int i = 0; i + 1 < n; ++i) {
    const Complex c = h.upper()[static_cast<size_t>(i)];
    const double mag = std::abs(c);
    r.sub[i] = -mag;
    r.phases[static_cast<size_t>(i + 1)] =
        (mag > 0.0) ? Complex(-r.phases[static_cast<size_t>(i)] * c / mag)
                    : r.phases[static_cast<size_t>(i)];
  }
  return r;
}

// Tridiagonal LU with partial pivoting (the dgttrf/dgtts2 scheme), for the
// shifted solves of inverse iteration; tiny pivots are replaced, which is
// the standard convention when the shift sits on an eigenvalue.
struct TriLU {
  std::vector<double> dl, d, du, du2;
  std::vector<int> swap_next;

  TriLU(std::vector<double> sub, std::vector<double> diag, std::vector<double> sup)
      : dl(std::move(sub)), d(std::move(diag)), du(std::move(sup)) {
    const int n = static_cast<int>(d.size());
    du2.assign(static_cast<size_t>(std::max(0, n - 2)), 0.0);
    swap_next.assign(static_cast<size_t>(std::max(0, n - 1)), 0);
    const double tiny = 1e-300;
    for (int i = 0; i + 1 < n; ++i) {
      if (std::abs(d[i]) >= std::abs(dl[i])) {
        if (d[i] == 0.0) d[i] = tiny;
        const double fact = dl[i] / d[i];
        dl[i] = fact;
        d[i + 1] -= fact * du[i];
      } else {
        swap_next[i] = 1;
        const double fact = d[i] / dl[i];
        d[i] = dl[i];
        dl[i] = fact;
        const double upper = du[i];
        du[i] = d[i + 1];
        d[i + 1] = upper - fact * d[i + 1];
        if (i + 2 < n) {
          du2[i] = du[i + 1];
          du[i + 1] = -fact * du[i + 1];
        }
      }
    }
    if (n > 0 && d[n - 1] == 0.0) d[n - 1] = tiny;
  }

  void solve(std::vector<double>& x) const {
    const int n = static_cast<int>(d.size());
    for (int i = 0; i + 1 < n; ++i) {
      if (swap_next[i]) std::swap(x[i], x[i + 1]);
      x[i + 1] -= dl[i] * x[i];
    }
    x[n - 1] /= d[n - 1];
    if (n > 1) x[n - 2] = (x[n - 2] - du[n - 2] * x[n - 1]) / d[n - 2];
    for (int i = n - 3; i >= 0; --i) {
      x[i] = (x[i] - du[i] * x[i + 1] - du2[i] * x[i + 2]) / d[i];
    }
  }
};

void normalize(std::vector<double>& v) {
  // Pre-scale by the largest entry: a shifted solve can amplify by ~1e300
  // and the squared norm would overflow.
  double amax = 0.0;
  for (double a : v) amax = std::max(amax, std::abs(a));
  if (amax == 0.0) return;
  double norm = 0.0;
  for (double& a : v) {
    a /= amax;
    norm += a * a;
  }
  norm = std::sqrt(norm);
  for (double& a : v) a /= norm;
}

}  // namespace

std::vector<EigenMode> eigen_lowest(const GridHamiltonian& h, int k) {
  const int n = h.dimension();
  if (k < 1 || k > n) throw std::invalid_argument("eigen_lowest: bad k");
  const PhaseReduction red = reduce_to_real(h);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(red.diag, red.sub, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw ConvergenceError("eigen_lowest: tridiagonal QL did not converge");
  }

  // Vectors by inverse iteration on the real tridiagonal: the eigenvalues
  // are already machine-accurate, so two or three shifted solves converge;
  // full QL accumulation would cost O(n^3) for n-independent k.
  std::vector<double> sub(static_cast<size_t>(n - 1)), sup(static_cast<size_t>(n - 1));
  for (int i = 0; i + 1 < n; ++i) sub[i] = sup[i] = red.sub[i];
  const double weight = 1.0 / std::sqrt(h.grid().spacing());
  std::vector<EigenMode> modes(static_cast<size_t>(k));
  std::vector<std::vector<double>> found;
  std::vector<double> found_energy;
  std::mt19937_64 rng(0x77aa11);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  const double scale = h.scale();
  for (int j = 0; j < k; ++j) {
    const double sigma = solver.eigenvalues()[j];
    std::vector<double> diag(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) diag[i] = red.diag[i] - sigma;
    const TriLU lu(sub, diag, sup);
    std::vector<double> v(static_cast<size_t>(n));
    for (double& a : v) a = uni(rng);
    normalize(v);
    for (int iter = 0; iter < 3; ++iter) {
      lu.solve(v);
      // Project out previously found vectors of near-coincident levels.
      for (size_t f = 0; f < found.size(); ++f) {
        if (std::abs(found_energy[f] - sigma) > 1e-8 * std::max(scale, 1.0)) continue;
        double dot = 0.0;
        for (int i = 0; i < n; ++i) dot += found[f][static_cast<size_t>(i)] * v[i];
        for (int i = 0; i < n; ++i) v[i] -= dot * found[f][static_cast<size_t>(i)];
      }
      normalize(v);
    }
    found.push_back(v);
    found_energy.push_back(sigma);
    EigenMode& m = modes[static_cast<size_t>(j)];
    m.energy = sigma;
    m.amplitudes.resize(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
      m.amplitudes[static_cast<size_t>(i)] =
          std::conj(red.phases[static_cast<size_t>(i)]) * v[i] * weight;
    }
  }
  return modes;
}

std::vector<double> eigenvalues_lowest(const GridHamiltonian& h, int k) {
  const int n = h.dimension();
  if (k < 1 || k > n) throw std::invalid_argument("eigenvalues_lowest: bad k");
  const PhaseReduction red = reduce_to_real(h);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(red.diag, red.sub, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw ConvergenceError("eigenvalues_lowest: tridiagonal QL did not converge");
  }
  std::vector<double> vals(static_cast<size_t>(k));
  for (int j = 0; j < k; ++j) vals[static_cast<size_t>(j)] = solver.eigenvalues()[j];
  return vals;
}

SpectrumReport make_spectrum_report(std::vector<double> analytic,
                                    std::vector<double> oracle, const Grid& g,
                                    double lambda) {
  if (analytic.size() != oracle.size()) {
    throw std::invalid_argument("make_spectrum_report: list length mismatch");
  }
  SpectrumReport rep;
  rep.analytic = std::move(analytic);
  rep.oracle = std::move(oracle);
  rep.grid = g;
  rep.lambda = lambda;
  rep.abs_diff.reserve(rep.analytic.size());
  rep.rel_diff.reserve(rep.analytic.size());
  for (size_t i = 0; i < rep.analytic.size(); ++i) {
    const double d = std::abs(rep.analytic[i] - rep.oracle[i]);
    rep.abs_diff.push_back(d);
    rep.rel_diff.push_back(d / std::max(std::abs(rep.analytic[i]), 1e-300));
  }
  return rep;
}

TransferResult scattering_transfer(double energy, const PhysicalParams& p,
                                   double reg_width) {
  p.require_strength();
  if (!(energy > 0.0)) throw std::invalid_argument("scattering_transfer: E must be > 0");
  if (!(reg_width > 0.0)) {
    throw std::invalid_argument("scattering_transfer: reg_width must be > 0");
  }
  const double q = std::sqrt(2.0 * p.mass * energy + p.lambda * p.lambda);
  const double k_plus = (q - p.lambda) / p.hbar;
  const double k_minus = (q + p.lambda) / p.hbar;
  const double w = reg_width;
  const double peak = p.strength / (w * std::sqrt(2.0 * 3.14159265358979323846));
  const auto potential = [&](double x) { return peak * std::exp(-x * x / (2.0 * w * w)); };

  // psi'' = -(2 i lambda/hbar) psi' - (2m/hbar^2)(E - V) psi, integrated right
  // to left with the transmitted wave as the initial condition.
  const double L = 8.0 * w;
  const int n_steps = 2000;
  const double dx = -2.0 * L / n_steps;
  const auto rhs = [&](double x, const Complex& psi, const Complex& dpsi,
                       Complex& out_d, Complex& out_dd) {
    out_d = dpsi;
    out_dd = Complex(0.0, -2.0 * p.lambda / p.hbar) * dpsi -
             (2.0 * p.mass / (p.hbar * p.hbar)) * (energy - potential(x)) * psi;
  };
  Complex psi = std::exp(Complex(0.0, k_plus * L));
  Complex dpsi = Complex(0.0, k_plus) * psi;
  double x = L;
  for (int step = 0; step < n_steps; ++step) {
    Complex k1d, k1dd, k2d, k2dd, k3d, k3dd, k4d, k4dd;
    rhs(x, psi, dpsi, k1d, k1dd);
    rhs(x + 0.5 * dx, psi + 0.5 * dx * k1d, dpsi + 0.5 * dx * k1dd, k2d, k2dd);
    rhs(x + 0.5 * dx, psi + 0.5 * dx * k2d, dpsi + 0.5 * dx * k2dd, k3d, k3dd);
    rhs(x + dx, psi + dx * k3d, dpsi + dx * k3dd, k4d, k4dd);
    psi += dx / 6.0 * (k1d + 2.0 * k2d + 2.0 * k3d + k4d);
    dpsi += dx / 6.0 * (k1dd + 2.0 * k2dd + 2.0 * k3dd + k4dd);
    x += dx;
    if (!std::isfinite(psi.real()) || !std::isfinite(psi.imag())) {
      throw ConvergenceError("scattering_transfer: integration diverged");
    }
  }
  // Decompose at the left edge into incident + reflected deformed waves.
  const Complex ep = std::exp(Complex(0.0, k_plus * x));
  const Complex em = std::exp(Complex(0.0, -k_minus * x));
  const Complex det = ep * (Complex(0.0, -k_minus) * em) -
                      em * (Complex(0.0, k_plus) * ep);
  const Complex alpha = (psi * (Complex(0.0, -k_minus) * em) - em * dpsi) / det;
  const Complex beta = (ep * dpsi - psi * (Complex(0.0, k_plus) * ep)) / det;
  TransferResult r;
  r.T = std::norm(1.0 / alpha);
  r.Rc = std::norm(beta / alpha);
  return r;
}

double ode_residual(const std::function<Complex(double)>& psi, double energy,
                    const std::function<double(double)>& potential,
                    const PhysicalParams& p, const std::vector<double>& points,
                    double fd_step) {
  p.require_base();
  double worst = 0.0;
  for (double x : points) {
    const Derivatives d = richardson_derivatives(psi, x, fd_step);
    const Complex kinetic = p.hbar * p.hbar / (2.0 * p.mass) * d.second;
    const Complex drift = Complex(0.0, p.hbar * p.lambda / p.mass) * d.first;
    const Complex rest = (energy - potential(x)) * psi(x);
    const double scale = std::max({std::abs(kinetic), std::abs(drift),
                                   std::abs(rest), 1e-300});
    worst = std::max(worst, std::abs(kinetic + drift + rest) / scale);
  }
  return worst;
}

std::vector<double> coulomb_halfline_energies(const PhysicalParams& p, int n_max,
                                              double softening, int n_points,
                                              double x_max) {
  p.require_kappa();
  if (!(softening > 0.0)) {
    throw std::invalid_argument("coulomb_halfline_energies: softening must be > 0");
  }
  const Grid g{0.0, x_max, n_points};
  const GridHamiltonian h = build_hamiltonian(
      [&](double x) { return -p.kappa / std::sqrt(x * x + softening * softening); },
      p, g);
  return eigenvalues_lowest(h, n_max);
}

}  // namespace gup1d::oracle
