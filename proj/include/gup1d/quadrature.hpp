#ifndef GUP1D_QUADRATURE_HPP
#define GUP1D_QUADRATURE_HPP

#include <complex>
#include <functional>

namespace gup1d::oracle {

struct QuadResult {
  double value = 0.0;
  double error = 0.0;  // conservative estimate, sum of per-segment |K15 - G7|
  int evaluations = 0;
};

/// Globally adaptive Gauss-Kronrod 15/7 integration of f over (a, b).
///
/// b = +inf (and a = -inf) are handled by the exponential substitution
/// x = a - tail_scale * log(u); tail_scale should match the integrand's
/// decay length. Terminates when the error estimate drops below
/// max(tol * |value|, abs_tol) -- pass abs_tol > 0 for integrals that may
/// vanish. Throws ConvergenceError at the subdivision cap.
QuadResult adaptive_quadrature(const std::function<double(double)>& f, double a,
                               double b, double tol, double tail_scale = 1.0,
                               double abs_tol = 0.0);

/// Richardson-extrapolated central differences (steps h, h/2, h/4).
struct Derivatives {
  std::complex<double> first;
  std::complex<double> second;
};
Derivatives richardson_derivatives(
    const std::function<std::complex<double>(double)>& f, double x, double h);

/// One-sided first derivative at x in direction +1/-1 (Richardson on the
/// 3-point one-sided stencil); for derivative jumps across a singularity.
std::complex<double> one_sided_derivative(
    const std::function<std::complex<double>(double)>& f, double x, int direction,
    double h);

}  // namespace gup1d::oracle

#endif
