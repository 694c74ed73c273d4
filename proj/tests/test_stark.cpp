#include <doctest.h>

#include <cmath>
#include <limits>

#include "gup1d/quadrature.hpp"
#include "gup1d/stark.hpp"

using namespace gup1d;
using namespace gup1d::stark;

namespace {
PhysicalParams field_params(double field = 1.0, double lambda = 0.0) {
  PhysicalParams p;
  p.field = field;
  p.lambda = lambda;
  return p;
}
}  // namespace

TEST_SUITE_BEGIN("stark");

TEST_CASE("n = 1 matrix element equals the plain Gamma integral") {
  const PhysicalParams p = field_params();
  // F(0,2,z) = 1, so the quadrature target is 2 int x^3 e^{-2x} dx = 2 * 3!/2^4.
  const double direct =
      2.0 *
      oracle::adaptive_quadrature([](double x) { return x * x * x * std::exp(-2.0 * x); },
                                  0.0, std::numeric_limits<double>::infinity(), 1e-12,
                                  0.5)
          .value;
  CHECK(direct == doctest::Approx(0.75).epsilon(1e-11));
  CHECK(stark_matrix_element(1, p, MatrixElementMethod::closed_form) ==
        doctest::Approx(0.75).epsilon(1e-15));
  CHECK(stark_matrix_element(1, p, MatrixElementMethod::quadrature) ==
        doctest::Approx(direct).epsilon(1e-10));
}

TEST_CASE("n^5 scaling and closed-vs-quadrature agreement") {
  const PhysicalParams p = field_params();
  for (int n = 2; n <= 5; ++n) {
    const double closed = stark_matrix_element(n, p, MatrixElementMethod::closed_form);
    CHECK(closed == doctest::Approx(0.75 * std::pow(n, 5)).epsilon(1e-14));
    CHECK(stark_matrix_element(n, p, MatrixElementMethod::quadrature) ==
          doctest::Approx(closed).epsilon(1e-9));
  }
  // n = 2 value quoted by the n^5 law: 0.75 * 32 = 24.
  CHECK(stark_matrix_element(2, p, MatrixElementMethod::closed_form) ==
        doctest::Approx(24.0).epsilon(1e-14));
}

TEST_CASE("phases cancel: elements are lambda-independent") {
  const double ref =
      stark_matrix_element(2, field_params(1.0, 0.0), MatrixElementMethod::quadrature);
  for (double lam : {0.5, 2.0}) {
    CHECK(stark_matrix_element(2, field_params(1.0, lam), MatrixElementMethod::quadrature) ==
          doctest::Approx(ref).epsilon(1e-10));
  }
}

TEST_CASE("diagonal elements vanish by parity; h21 equals h12") {
  const PhysicalParams p = field_params();
  for (int n : {1, 2, 3}) {
    const double h12 = stark_matrix_element(n, p, MatrixElementMethod::closed_form);
    CHECK(std::abs(stark_diagonal_element(n, p)) < 1e-10 * h12);
    CHECK(stark_matrix_element_swapped(n, p) == doctest::Approx(h12).epsilon(1e-9));
  }
}

TEST_CASE("first-order pair is symmetric and tracks the matrix element") {
  const PhysicalParams p = field_params();
  const SplitPair s1 = stark_first_order(1, p);
  CHECK(s1.e_plus == doctest::Approx(0.75).epsilon(1e-15));
  CHECK(s1.e_minus == doctest::Approx(-0.75).epsilon(1e-15));
  CHECK(s1.e_plus + s1.e_minus == 0.0);
  const SplitPair off = stark_first_order(3, field_params(0.0));
  CHECK(off.e_plus == 0.0);
  CHECK(off.e_minus == 0.0);
}

TEST_CASE("split wavefunctions carry one-sided support") {
  const PhysicalParams p = field_params(1.0, 0.5);
  for (int n : {1, 2}) {
    CHECK(stark_split_wavefunction(n, 1, -1.0, p) == Complex(0.0, 0.0));
    CHECK(stark_split_wavefunction(n, 2, 1.0, p) == Complex(0.0, 0.0));
    // Disjoint supports: the product vanishes identically.
    for (double x : {-2.0, -0.3, 0.0, 0.7, 3.1}) {
      CHECK(std::abs(stark_split_wavefunction(n, 1, x, p) *
                     stark_split_wavefunction(n, 2, x, p)) == 0.0);
    }
  }
  // phi_11(x > 0) = sqrt2 x e^{-i lambda x} e^{-x} for unit parameters.
  for (double x : {0.4, 1.0, 2.5}) {
    const Complex expected = std::sqrt(2.0) * x * std::exp(Complex(0.0, -0.5 * x)) *
                             std::exp(-x);
    CHECK(std::abs(stark_split_wavefunction(1, 1, x, p) - expected) < 1e-14);
  }
  CHECK_THROWS_AS(stark_split_wavefunction(1, 3, 0.5, p), std::invalid_argument);
}

TEST_CASE("second-order values repeat the first-order splitting") {
  const PhysicalParams p = field_params();
  for (int n : {1, 2}) {
    const SplitPair first = stark_first_order(n, p);
    const SplitPair second = stark_second_order(n, p);
    CHECK(second.e_plus == doctest::Approx(first.e_plus).epsilon(1e-9));
    CHECK(second.e_minus == doctest::Approx(first.e_minus).epsilon(1e-9));
    CHECK(second.e_plus > 0.0);
    CHECK(second.e_minus < 0.0);
  }
  const SplitPair off = stark_second_order(1, field_params(0.0));
  CHECK(off.e_plus == 0.0);
  CHECK(off.e_minus == 0.0);
}

TEST_CASE("total energies: Coulomb level plus the doubled splitting") {
  PhysicalParams p = field_params(0.01);
  const SplitPair total = stark_total_energies(1, p);
  CHECK(total.e_plus == doctest::Approx(-0.5 + 0.015).epsilon(1e-12));
  CHECK(total.e_minus == doctest::Approx(-0.5 - 0.015).epsilon(1e-12));
  // No field, lambda shift only: degenerate pair at -1.
  PhysicalParams q = field_params(0.0, 1.0);
  const SplitPair plain = stark_total_energies(1, q);
  CHECK(plain.e_plus == doctest::Approx(-1.0).epsilon(1e-14));
  CHECK(plain.e_minus == doctest::Approx(-1.0).epsilon(1e-14));
  // Half-splitting coefficient 3/2 in the quoted units.
  for (int n : {1, 2, 4}) {
    const SplitPair t = stark_total_energies(n, p);
    CHECK(0.5 * (t.e_plus - t.e_minus) ==
          doctest::Approx(1.5 * p.field * std::pow(n, 5)).epsilon(1e-13));
  }
}

TEST_CASE("stark report bundles consistent values and flags the caveat") {
  const StarkReport rep = stark_report(2, field_params(0.25));
  CHECK(rep.n == 2);
  CHECK(rep.h12 == doctest::Approx(0.25 * 0.75 * 32.0).epsilon(1e-14));
  CHECK(rep.h12_quadrature == doctest::Approx(rep.h12).epsilon(1e-9));
  CHECK(rep.h21 == doctest::Approx(rep.h12).epsilon(1e-9));
  CHECK(std::abs(rep.h11) < 1e-10 * rep.h12);
  CHECK(std::abs(rep.h22) < 1e-10 * rep.h12);
  CHECK(rep.e1_first == doctest::Approx(rep.h12));
  CHECK(rep.e2_first == doctest::Approx(-rep.h12));
  CHECK(rep.e1_second == doctest::Approx(rep.e1_first).epsilon(1e-9));
  CHECK(rep.total_plus - rep.total_minus == doctest::Approx(4.0 * rep.h12).epsilon(1e-12));
  CHECK(rep.norm_squared == doctest::Approx(4.0).epsilon(1e-9));  // n^3/2
  CHECK(rep.h12_normalized == doctest::Approx(rep.h12 / rep.norm_squared).epsilon(1e-12));
  CHECK(rep.second_order_is_rotated_first_order);
}

TEST_SUITE_END();
