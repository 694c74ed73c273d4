#ifndef GUP1D_SPECFUN_HPP
#define GUP1D_SPECFUN_HPP

#include <vector>

namespace gup1d::specfun {

// Airy functions of the first and second kind and their derivatives.
//
// Evaluation strategy: Maclaurin series on [-5, 5.5]; on [-12.5, -5) the
// defining equation y'' = x*y is Taylor-propagated from tabulated anchor
// values at integer abscissae (the plain oscillatory asymptotic expansion
// has not converged to double precision until |x| ~ 12); beyond those
// ranges the standard asymptotic expansions in xi = (2/3)|x|^{3/2}.
// Everything is a pure function of its argument; accuracy is certified by
// the ODE-residual and Wronskian checks in the test suite.
double airy_ai(double x);
double airy_ai_prime(double x);
double airy_bi(double x);       // throws std::overflow_error for x > 104
double airy_bi_prime(double x);

/// n-th negative zero of Ai (n >= 1), asymptotic seed refined by Newton.
/// Throws ConvergenceError if Newton fails within the iteration cap.
double airy_zero(int n);

/// Zeros a_1..a_count of Ai, strictly decreasing, a_n < 0.
struct AiryZeroTable {
  std::vector<double> zeros;
  double operator[](int n) const { return zeros.at(static_cast<size_t>(n) - 1); }
};
AiryZeroTable airy_zero_table(int count);

/// Gamma function by the Lanczos approximation (g = 7, 9 coefficients).
/// Poles at non-positive integers throw std::domain_error.
double gamma_fn(double x);

/// Kummer confluent hypergeometric F(a, b, z).
///
/// Terminates exactly (polynomial) when a is a non-positive integer;
/// otherwise the Maclaurin series is summed to 1e-14 relative with a
/// 10000-term cap. b at a non-positive integer throws std::domain_error.
double kummer_1f1(double a, double b, double z);

/// Generalized Laguerre polynomial L_n^mu(z) by the three-term recurrence.
/// Requires mu > -1.
double laguerre(int n, double mu, double z);

/// Integral of z^alpha e^{-z} [L_n^beta(z)]^2 over (0, inf), alpha > -1.
///
/// Closed form Gamma(alpha+1) * sum_k C(alpha-beta, n-k)^2 C(alpha+k, k);
/// every call is cross-checked against adaptive quadrature and throws
/// std::runtime_error if the two disagree beyond 1e-6 relative.
double laguerre_weighted_integral(double alpha, int n, double beta);

/// Generalized binomial coefficient C(r, k) for real r, integer k >= 0.
double binomial(double r, int k);

}  // namespace gup1d::specfun

#endif
