#ifndef GUP1D_ANALYTIC_HPP
#define GUP1D_ANALYTIC_HPP

#include <functional>

#include "gup1d/params.hpp"

namespace gup1d::analytic {

// Every bound formula below carries the uniform deformation shift
// -lambda^2/2m, and every wavefunction the phase factor e^{-i lambda x/hbar};
// moduli are lambda-independent.

/// Linear potential F x with a hard wall at x = 0:
///   E_n = (F^2 hbar^2 / 2m)^{1/3} |a_n| - lambda^2/2m,  a_n the n-th Ai zero.
double linear_energy(int n, const PhysicalParams& p);

/// Normalized eigenfunction, zero for x < 0:
///   (2mF/hbar^2)^{1/6}/|Ai'(a_n)| e^{-i lambda x/hbar} Ai(a_n + (2mF/hbar^2)^{1/3} x).
Complex linear_wavefunction(int n, double x, const PhysicalParams& p);

/// Single bound level of the well -V delta(x): E = -m V^2/2 hbar^2 - lambda^2/2m.
double delta_well_energy(const PhysicalParams& p);

/// Normalized bound state (sqrt(mV)/hbar) e^{-mV|x|/hbar^2} e^{-i lambda x/hbar}.
Complex delta_well_wavefunction(double x, const PhysicalParams& p);

/// Coulomb spectrum E_n = -kappa^2 m / (2 hbar^2 n^2) - lambda^2/2m.
double coulomb_energy(int n, const PhysicalParams& p);

/// Degenerate partner selector: A flips the sign of the x < 0 piece, B keeps it.
enum class CoulombBranch { A, B };

/// Degenerate Coulomb pair, as published (no normalization constant):
/// x > 0:  x e^{-i lambda x/hbar} e^{-kappa m x/n hbar^2} F(1-n, 2, 2 kappa m x/n hbar^2)
/// x < 0:  (+-) x e^{-i lambda x/hbar} e^{+kappa m x/n hbar^2} F(1-n, 2, -2 kappa m x/n hbar^2)
/// with - for branch A and + for branch B; both vanish at x = 0.
/// normalized = true divides by the quadrature-computed full-line norm.
Complex coulomb_wavefunction(int n, CoulombBranch branch, double x,
                             const PhysicalParams& p, bool normalized = false);

/// Full-line squared norm of the as-published Coulomb state (quadrature).
double coulomb_norm_squared(int n, const PhysicalParams& p);

/// Bound level bundled with a callable wavefunction.
struct BoundState {
  int n = 1;
  double energy = 0.0;
  std::function<Complex(double)> wavefunction;
};

BoundState linear_bound_state(int n, const PhysicalParams& p);
BoundState delta_well_bound_state(const PhysicalParams& p);
BoundState coulomb_bound_state(int n, CoulombBranch branch, const PhysicalParams& p,
                               bool normalized = false);

}  // namespace gup1d::analytic

#endif
