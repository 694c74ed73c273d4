#ifndef GUP1D_PARAMS_HPP
#define GUP1D_PARAMS_HPP

#include <complex>
#include <stdexcept>
#include <string>

namespace gup1d {

using Complex = std::complex<double>;

/// Physical constants shared by every problem in the library.
///
/// The momentum deformation p -> p + lambda adds the drift term
/// (lambda/m) p to the Hamiltonian; lambda carries momentum units and may
/// be any real number (lambda = 0 recovers the undeformed operator).
/// The per-problem couplings are:
///   slope    F     linear potential V(x) = F x on x > 0, hard wall at 0
///   strength V     delta well/barrier  -V delta(x) / +V delta(x)
///   kappa          attractive Coulomb  -kappa/|x|
///   field          product e*E of charge and uniform electric field
struct PhysicalParams {
  double mass = 1.0;
  double hbar = 1.0;
  double lambda = 0.0;
  double slope = 1.0;
  double strength = 1.0;
  double kappa = 1.0;
  double field = 0.01;

  /// Uniform spectral shift produced by the deformation, -lambda^2/2m.
  double gauge_shift() const { return -lambda * lambda / (2.0 * mass); }

  void require_base() const {
    if (!(mass > 0.0)) throw std::invalid_argument("mass must be > 0");
    if (!(hbar > 0.0)) throw std::invalid_argument("hbar must be > 0");
    if (!std::isfinite(lambda)) throw std::invalid_argument("lambda must be finite");
  }
  void require_slope() const {
    require_base();
    if (!(slope > 0.0)) throw std::invalid_argument("slope F must be > 0");
  }
  void require_strength() const {
    require_base();
    if (!(strength > 0.0)) throw std::invalid_argument("strength V must be > 0");
  }
  void require_kappa() const {
    require_base();
    if (!(kappa > 0.0)) throw std::invalid_argument("kappa must be > 0");
  }
};

/// Raised when an iterative scheme (Newton, series, quadrature subdivision,
/// ODE stepping) fails to reach its tolerance within the iteration cap.
class ConvergenceError : public std::runtime_error {
 public:
  explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace gup1d

#endif
