#include "gup1d/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

#include "gup1d/params.hpp"

namespace gup1d::oracle {

namespace {

// 15-point Kronrod nodes/weights with the embedded 7-point Gauss rule.
constexpr std::array<double, 8> kXgk = {
    0.9914553711208126, 0.9491079123427585, 0.8648644233597691,
    0.7415311855993944, 0.5860872354676911, 0.4058451513773972,
    0.2077849550078985, 0.0};
constexpr std::array<double, 8> kWgk = {
    0.2293532201052922e-1, 0.6309209262997855e-1, 0.1047900103222502,
    0.1406532597155259,    0.1690047266392679,    0.1903505780647854,
    0.2044329400752989,    0.2094821410847278};
constexpr std::array<double, 4> kWg = {0.1294849661688697, 0.2797053914892767,
                                       0.3818300505051189, 0.4179591836734694};

struct Segment {
  double a, b, integral, err;
  bool operator<(const Segment& o) const { return err < o.err; }
};

Segment gk15(const std::function<double(double)>& f, double a, double b,
             int& evals) {
  const double c = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(c);
  double kron = kWgk[7] * fc;
  double gauss = kWg[3] * fc;
  for (int i = 0; i < 7; ++i) {
    const double dx = half * kXgk[static_cast<size_t>(i)];
    const double fsum = f(c - dx) + f(c + dx);
    kron += kWgk[static_cast<size_t>(i)] * fsum;
    if (i % 2 == 1) gauss += kWg[static_cast<size_t>(i / 2)] * fsum;
  }
  evals += 15;
  return {a, b, kron * half, std::abs(kron - gauss) * half};
}

QuadResult adapt(const std::function<double(double)>& f, double a, double b,
                 double tol, double abs_tol) {
  constexpr int kMaxSegments = 4000;
  int evals = 0;
  std::priority_queue<Segment> queue;
  Segment s0 = gk15(f, a, b, evals);
  double total = s0.integral;
  double err = s0.err;
  queue.push(s0);
  int n_seg = 1;
  while (err > std::max(tol * std::max(std::abs(total), 1e-300), abs_tol)) {
    if (n_seg >= kMaxSegments) {
      throw ConvergenceError("adaptive_quadrature: subdivision cap reached");
    }
    const Segment worst = queue.top();
    queue.pop();
    total -= worst.integral;
    err -= worst.err;
    const double mid = 0.5 * (worst.a + worst.b);
    for (const Segment& half :
         {gk15(f, worst.a, mid, evals), gk15(f, mid, worst.b, evals)}) {
      total += half.integral;
      err += half.err;
      queue.push(half);
    }
    ++n_seg;
  }
  return {total, err, evals};
}

}  // namespace

QuadResult adaptive_quadrature(const std::function<double(double)>& f, double a,
                               double b, double tol, double tail_scale,
                               double abs_tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("adaptive_quadrature: tol must be > 0");
  const bool lo_inf = std::isinf(a) && a < 0.0;
  const bool hi_inf = std::isinf(b) && b > 0.0;
  if (lo_inf && hi_inf) {
    QuadResult left = adaptive_quadrature([&](double x) { return f(-x); }, 0.0, b,
                                          tol, tail_scale, abs_tol);
    QuadResult right = adaptive_quadrature(f, 0.0, b, tol, tail_scale, abs_tol);
    return {left.value + right.value, left.error + right.error,
            left.evaluations + right.evaluations};
  }
  if (lo_inf) {
    return adaptive_quadrature([&](double x) { return f(-x); }, -b,
                               std::numeric_limits<double>::infinity(), tol,
                               tail_scale, abs_tol);
  }
  if (hi_inf) {
    // x = a - tail_scale * log(u), u in (0, 1]; integrating in u keeps the
    // tail variable exact down to denormals (GK nodes never touch u = 0).
    const double s = tail_scale;
    const auto mapped = [&, s](double u) { return f(a - s * std::log(u)) * s / u; };
    return adapt(mapped, 0.0, 1.0, tol, abs_tol);
  }
  if (!(a < b)) {
    if (a == b) return {0.0, 0.0, 0};
    QuadResult r = adaptive_quadrature(f, b, a, tol, tail_scale, abs_tol);
    return {-r.value, r.error, r.evaluations};
  }
  return adapt(f, a, b, tol, abs_tol);
}

Derivatives richardson_derivatives(
    const std::function<std::complex<double>(double)>& f, double x, double h) {
  using C = std::complex<double>;
  const auto d1 = [&](double step) {
    return (f(x + step) - f(x - step)) / (2.0 * step);
  };
  const auto d2 = [&](double step) {
    return (f(x + step) - 2.0 * f(x) + f(x - step)) / (step * step);
  };
  const auto extrap = [&](const std::function<C(double)>& d) {
    const C e2a = (4.0 * d(h / 2.0) - d(h)) / 3.0;
    const C e2b = (4.0 * d(h / 4.0) - d(h / 2.0)) / 3.0;
    return (16.0 * e2b - e2a) / 15.0;
  };
  return {extrap(d1), extrap(d2)};
}

std::complex<double> one_sided_derivative(
    const std::function<std::complex<double>(double)>& f, double x, int direction,
    double h) {
  using C = std::complex<double>;
  const double d = (direction >= 0) ? 1.0 : -1.0;
  const auto stencil = [&](double step) {
    const double s = d * step;
    return (-3.0 * f(x) + 4.0 * f(x + s) - f(x + 2.0 * s)) / (2.0 * s);
  };
  // The 3-point stencil is O(h^2); two extrapolation levels remove the h^2
  // and h^3 terms.
  const auto level1 = [&](double step) {
    return (4.0 * stencil(step / 2.0) - stencil(step)) / 3.0;
  };
  const C e1 = level1(h);
  const C e2 = level1(h / 2.0);
  return (8.0 * e2 - e1) / 7.0;
}

}  // namespace gup1d::oracle
