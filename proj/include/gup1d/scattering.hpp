#ifndef GUP1D_SCATTERING_HPP
#define GUP1D_SCATTERING_HPP

#include "gup1d/params.hpp"

namespace gup1d::scattering {

/// Delta-barrier amplitudes at energy E > 0. With q = sqrt(2mE + lambda^2),
///   S = hbar q / (hbar q + i m V),   R = -i m V / (hbar q + i m V),
/// and the transmitted/reflected wavenumbers k_+- = (q -+ lambda)/hbar.
/// 1 + R = S and T + Rc = 1 hold identically; both are functions of
/// 2mE + lambda^2 only, so |S(E, lambda)|^2 = |S_0(E + lambda^2/2m)|^2.
struct ScatteringResult {
  Complex S;        // transmitted amplitude (incident amplitude 1)
  Complex R;        // reflected amplitude
  double T = 0.0;   // |S|^2
  double Rc = 0.0;  // |R|^2
  double k_plus = 0.0;
  double k_minus = 0.0;
  double excess_exact = 0.0;    // (|S|^2 - |S_0|^2) / |S_0|^2, full formulas
  double excess_leading = 0.0;  // lambda^2 V^2 / (2E (2E hbar^2 + m V^2))
};

ScatteringResult barrier_amplitudes(double energy, const PhysicalParams& p);

struct ExcessCurrent {
  double exact = 0.0;
  double leading = 0.0;
};
ExcessCurrent excess_tunneling_current(double energy, const PhysicalParams& p);

/// Piecewise scattering state with unit incident amplitude:
///   x > 0:  S e^{i k_+ x}
///   x < 0:  e^{i k_+ x} + R e^{-i k_- x}
/// Continuous at 0 with derivative jump +(2mV/hbar^2) psi(0).
Complex barrier_wavefunction(double x, double energy, const PhysicalParams& p);

}  // namespace gup1d::scattering

#endif
