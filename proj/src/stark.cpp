#include "gup1d/stark.hpp"

#include <cmath>

#include "gup1d/analytic.hpp"
#include "gup1d/quadrature.hpp"

namespace gup1d::stark {

namespace {

using analytic::CoulombBranch;

void require_level(int n) {
  if (n < 1) throw std::invalid_argument("stark: n must be >= 1");
}

// Quadrature of conj(psi_a) * x * psi_b over one half line, carrying the
// complex wavefunctions (and their lambda phases) through the integrand.
double half_line_element(int n, CoulombBranch a, CoulombBranch b, bool negative,
                         const PhysicalParams& p) {
  const double x_max = 40.0 * n * p.hbar * p.hbar / (p.kappa * p.mass);
  const auto integrand = [&](double t) {
    const double x = negative ? -t : t;
    const Complex pa = analytic::coulomb_wavefunction(n, a, x, p);
    const Complex pb = analytic::coulomb_wavefunction(n, b, x, p);
    return (std::conj(pa) * x * pb).real();
  };
  return oracle::adaptive_quadrature(integrand, 0.0, x_max, 1e-12).value;
}

}  // namespace

double stark_matrix_element(int n, const PhysicalParams& p,
                            MatrixElementMethod method) {
  p.require_kappa();
  require_level(n);
  if (method == MatrixElementMethod::closed_form) {
    const double h8 = std::pow(p.hbar, 8);
    const double km4 = std::pow(p.kappa * p.mass, 4);
    return 0.75 * p.field * h8 / km4 * std::pow(static_cast<double>(n), 5);
  }
  const double plus = half_line_element(n, CoulombBranch::A, CoulombBranch::B, false, p);
  const double minus = half_line_element(n, CoulombBranch::A, CoulombBranch::B, true, p);
  return p.field * (plus + minus);
}

double stark_diagonal_element(int n, const PhysicalParams& p) {
  p.require_kappa();
  require_level(n);
  const double plus = half_line_element(n, CoulombBranch::A, CoulombBranch::A, false, p);
  const double minus = half_line_element(n, CoulombBranch::A, CoulombBranch::A, true, p);
  return p.field * (plus + minus);
}

double stark_matrix_element_swapped(int n, const PhysicalParams& p) {
  p.require_kappa();
  require_level(n);
  const double plus = half_line_element(n, CoulombBranch::B, CoulombBranch::A, false, p);
  const double minus = half_line_element(n, CoulombBranch::B, CoulombBranch::A, true, p);
  return p.field * (plus + minus);
}

SplitPair stark_first_order(int n, const PhysicalParams& p) {
  const double h12 = stark_matrix_element(n, p, MatrixElementMethod::closed_form);
  return {h12, -h12};
}

SplitPair stark_second_order(int n, const PhysicalParams& p) {
  p.require_kappa();
  require_level(n);
  // <phi_n1|x|phi_n1> = 2 int_0^inf x |psi_+|^2 (x > 0 support),
  // <phi_n2|x|phi_n2> = 2 int_{-inf}^0 x |psi_-|^2 (x < 0 support).
  const double x_max = 40.0 * n * p.hbar * p.hbar / (p.kappa * p.mass);
  const auto split_expect = [&](int which) {
    const auto integrand = [&](double t) {
      const double x = (which == 1) ? t : -t;
      const Complex phi = stark_split_wavefunction(n, which, x, p);
      return std::norm(phi) * x;
    };
    return oracle::adaptive_quadrature(integrand, 0.0, x_max, 1e-12).value;
  };
  return {p.field * split_expect(1), p.field * split_expect(2)};
}

Complex stark_split_wavefunction(int n, int which, double x,
                                 const PhysicalParams& p) {
  require_level(n);
  if (which != 1 && which != 2) {
    throw std::invalid_argument("stark_split_wavefunction: which must be 1 or 2");
  }
  constexpr double kInvSqrt2 = 0.70710678118654752440;
  const Complex a = analytic::coulomb_wavefunction(n, CoulombBranch::A, x, p);
  const Complex b = analytic::coulomb_wavefunction(n, CoulombBranch::B, x, p);
  return (which == 1) ? kInvSqrt2 * (a + b) : kInvSqrt2 * (a - b);
}

SplitPair stark_total_energies(int n, const PhysicalParams& p) {
  const double base = analytic::coulomb_energy(n, p);
  const SplitPair first = stark_first_order(n, p);
  // Second order repeats the first-order values, so the total split
  // coefficient is 3/2 (twice the matrix element).
  return {base + 2.0 * first.e_plus, base + 2.0 * first.e_minus};
}

StarkReport stark_report(int n, const PhysicalParams& p) {
  StarkReport rep;
  rep.n = n;
  rep.h11 = stark_diagonal_element(n, p);
  {
    const double plusB = half_line_element(n, CoulombBranch::B, CoulombBranch::B, false, p);
    const double minusB = half_line_element(n, CoulombBranch::B, CoulombBranch::B, true, p);
    rep.h22 = p.field * (plusB + minusB);
  }
  rep.h12 = stark_matrix_element(n, p, MatrixElementMethod::closed_form);
  rep.h12_quadrature = stark_matrix_element(n, p, MatrixElementMethod::quadrature);
  rep.h21 = stark_matrix_element_swapped(n, p);
  const SplitPair first = stark_first_order(n, p);
  rep.e1_first = first.e_plus;
  rep.e2_first = first.e_minus;
  const SplitPair second = stark_second_order(n, p);
  rep.e1_second = second.e_plus;
  rep.e2_second = second.e_minus;
  const SplitPair total = stark_total_energies(n, p);
  rep.total_plus = total.e_plus;
  rep.total_minus = total.e_minus;
  rep.norm_squared = analytic::coulomb_norm_squared(n, p);
  rep.h12_normalized = rep.h12 / rep.norm_squared;
  return rep;
}

}  // namespace gup1d::stark
