#include "gup1d/scattering.hpp"

#include <cmath>

namespace gup1d::scattering {

namespace {

void require_energy(double energy) {
  if (!(energy > 0.0)) {
    throw std::invalid_argument("scattering: energy must be > 0");
  }
}

}  // namespace

ScatteringResult barrier_amplitudes(double energy, const PhysicalParams& p) {
  p.require_strength();
  require_energy(energy);
  const double q = std::sqrt(2.0 * p.mass * energy + p.lambda * p.lambda);
  const Complex denom(p.hbar * q, p.mass * p.strength);
  ScatteringResult r;
  r.S = p.hbar * q / denom;
  r.R = Complex(0.0, -p.mass * p.strength) / denom;
  r.T = std::norm(r.S);
  r.Rc = std::norm(r.R);
  r.k_plus = (q - p.lambda) / p.hbar;
  r.k_minus = (q + p.lambda) / p.hbar;
  const ExcessCurrent ex = excess_tunneling_current(energy, p);
  r.excess_exact = ex.exact;
  r.excess_leading = ex.leading;
  return r;
}

ExcessCurrent excess_tunneling_current(double energy, const PhysicalParams& p) {
  p.require_strength();
  require_energy(energy);
  const double h2 = p.hbar * p.hbar;
  const double mv2 = p.mass * p.mass * p.strength * p.strength;
  const double q2 = 2.0 * p.mass * energy + p.lambda * p.lambda;
  const double k2 = 2.0 * p.mass * energy;
  const double t_def = h2 * q2 / (h2 * q2 + mv2);
  const double t_0 = h2 * k2 / (h2 * k2 + mv2);
  ExcessCurrent ex;
  ex.exact = (t_def - t_0) / t_0;
  ex.leading = p.lambda * p.lambda * p.strength * p.strength /
               (2.0 * energy * (2.0 * energy * h2 + p.mass * p.strength * p.strength));
  return ex;
}

Complex barrier_wavefunction(double x, double energy, const PhysicalParams& p) {
  const ScatteringResult r = barrier_amplitudes(energy, p);
  if (x > 0.0) {
    return r.S * std::exp(Complex(0.0, r.k_plus * x));
  }
  return std::exp(Complex(0.0, r.k_plus * x)) +
         r.R * std::exp(Complex(0.0, -r.k_minus * x));
}

}  // namespace gup1d::scattering
