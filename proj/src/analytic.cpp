#include "gup1d/analytic.hpp"

#include <cmath>
#include <limits>

#include "gup1d/quadrature.hpp"
#include "gup1d/specfun.hpp"

namespace gup1d::analytic {

namespace {

Complex phase(double x, const PhysicalParams& p) {
  return std::exp(Complex(0.0, -p.lambda * x / p.hbar));
}

}  // namespace

double linear_energy(int n, const PhysicalParams& p) {
  p.require_slope();
  const double a_n = specfun::airy_zero(n);
  const double scale =
      std::cbrt(p.slope * p.slope * p.hbar * p.hbar / (2.0 * p.mass));
  return -scale * a_n + p.gauge_shift();
}

Complex linear_wavefunction(int n, double x, const PhysicalParams& p) {
  p.require_slope();
  if (x < 0.0) return {0.0, 0.0};
  const double a_n = specfun::airy_zero(n);
  const double beta = std::cbrt(2.0 * p.mass * p.slope / (p.hbar * p.hbar));
  const double norm = std::sqrt(beta) / std::abs(specfun::airy_ai_prime(a_n));
  return norm * phase(x, p) * specfun::airy_ai(a_n + beta * x);
}

double delta_well_energy(const PhysicalParams& p) {
  p.require_strength();
  return -p.mass * p.strength * p.strength / (2.0 * p.hbar * p.hbar) +
         p.gauge_shift();
}

Complex delta_well_wavefunction(double x, const PhysicalParams& p) {
  p.require_strength();
  const double decay = p.mass * p.strength / (p.hbar * p.hbar);
  const double amp = std::sqrt(p.mass * p.strength) / p.hbar;
  return amp * std::exp(-decay * std::abs(x)) * phase(x, p);
}

double coulomb_energy(int n, const PhysicalParams& p) {
  p.require_kappa();
  if (n < 1) throw std::invalid_argument("coulomb_energy: n must be >= 1");
  return -p.kappa * p.kappa * p.mass / (2.0 * p.hbar * p.hbar * n * n) +
         p.gauge_shift();
}

Complex coulomb_wavefunction(int n, CoulombBranch branch, double x,
                             const PhysicalParams& p, bool normalized) {
  p.require_kappa();
  if (n < 1) throw std::invalid_argument("coulomb_wavefunction: n must be >= 1");
  const double decay = p.kappa * p.mass / (n * p.hbar * p.hbar);
  Complex value;
  if (x >= 0.0) {
    value = x * std::exp(-decay * x) * specfun::kummer_1f1(1.0 - n, 2.0, 2.0 * decay * x);
  } else {
    const double sign = (branch == CoulombBranch::A) ? -1.0 : 1.0;
    value = sign * x * std::exp(decay * x) *
            specfun::kummer_1f1(1.0 - n, 2.0, -2.0 * decay * x);
  }
  value *= phase(x, p);
  if (normalized) value /= std::sqrt(coulomb_norm_squared(n, p));
  return value;
}

double coulomb_norm_squared(int n, const PhysicalParams& p) {
  p.require_kappa();
  const double decay = p.kappa * p.mass / (n * p.hbar * p.hbar);
  // |psi|^2 is even, so the full-line norm is twice the x > 0 half.
  const auto halfline = [&](double x) {
    const double f = specfun::kummer_1f1(1.0 - n, 2.0, 2.0 * decay * x);
    const double u = x * std::exp(-decay * x) * f;
    return u * u;
  };
  return 2.0 * oracle::adaptive_quadrature(halfline, 0.0,
                                           std::numeric_limits<double>::infinity(),
                                           1e-12, 1.0 / decay)
                   .value;
}

BoundState linear_bound_state(int n, const PhysicalParams& p) {
  return {n, linear_energy(n, p),
          [n, p](double x) { return linear_wavefunction(n, x, p); }};
}

BoundState delta_well_bound_state(const PhysicalParams& p) {
  return {1, delta_well_energy(p),
          [p](double x) { return delta_well_wavefunction(x, p); }};
}

BoundState coulomb_bound_state(int n, CoulombBranch branch, const PhysicalParams& p,
                               bool normalized) {
  return {n, coulomb_energy(n, p), [=](double x) {
            return coulomb_wavefunction(n, branch, x, p, normalized);
          }};
}

}  // namespace gup1d::analytic
