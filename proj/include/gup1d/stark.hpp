#ifndef GUP1D_STARK_HPP
#define GUP1D_STARK_HPP

#include "gup1d/params.hpp"

namespace gup1d::stark {

enum class MatrixElementMethod { closed_form, quadrature };

/// Off-diagonal perturbation element <psi_A| eE x |psi_B> for the degenerate
/// Coulomb pair at level n, with the as-published (unnormalized) states:
///   closed form  (3 eE hbar^8 / 4 kappa^4 m^4) n^5,
///   quadrature   2 eE int_0^inf x^3 e^{-2 kappa m x/n hbar^2} F(1-n,2,...)^2 dx.
/// The diagonal elements vanish by parity of the integrands.
double stark_matrix_element(int n, const PhysicalParams& p,
                            MatrixElementMethod method);

/// Diagonal element <psi|x|psi> evaluated by quadrature over both half lines;
/// analytically zero, returned as computed for the parity checks.
double stark_diagonal_element(int n, const PhysicalParams& p);

/// h21 by quadrature with the ordering swapped (equals h12 for this real
/// symmetric perturbation).
double stark_matrix_element_swapped(int n, const PhysicalParams& p);

struct SplitPair {
  double e_plus = 0.0;
  double e_minus = 0.0;
};

/// Roots +-h12 of the 2x2 secular determinant with zero diagonal.
SplitPair stark_first_order(int n, const PhysicalParams& p);

/// Expectation values of eE x in the split states phi_n1/phi_n2 (quadrature,
/// as-published measure); equal to the first-order pair by construction.
/// Labelled "second order" in StarkReport with a caveat flag: these are
/// rotated-basis first-order expectations, not a sum-over-states correction.
SplitPair stark_second_order(int n, const PhysicalParams& p);

/// phi_n1 = (psi_A + psi_B)/sqrt2 (supported on x > 0),
/// phi_n2 = (psi_A - psi_B)/sqrt2 (supported on x < 0).
Complex stark_split_wavefunction(int n, int which, double x,
                                 const PhysicalParams& p);

/// Coulomb level plus first- and second-order corrections:
///   -kappa^2 m/2 hbar^2 n^2 - lambda^2/2m +- 3 eE hbar^8 n^5 / 2 kappa^4 m^4.
SplitPair stark_total_energies(int n, const PhysicalParams& p);

struct StarkReport {
  int n = 1;
  double h11 = 0.0, h22 = 0.0;  // quadrature values of the parity-zero diagonals
  double h12 = 0.0, h21 = 0.0;
  double e1_first = 0.0, e2_first = 0.0;
  double e1_second = 0.0, e2_second = 0.0;
  double total_plus = 0.0, total_minus = 0.0;
  double h12_quadrature = 0.0;
  double norm_squared = 0.0;      // full-line norm of the as-published states
  double h12_normalized = 0.0;    // h12 divided by norm_squared
  // The "second order" values are expectation values in the rotated split
  // basis and numerically repeat the first-order splitting; they are not a
  // sum-over-states second-order term.
  bool second_order_is_rotated_first_order = true;
};

StarkReport stark_report(int n, const PhysicalParams& p);

}  // namespace gup1d::stark

#endif
