#ifndef GUP1D_ORACLE_HPP
#define GUP1D_ORACLE_HPP

#include <functional>
#include <vector>

#include "gup1d/params.hpp"
#include "gup1d/quadrature.hpp"

namespace gup1d::oracle {

/// Uniform 1D grid; nodes include both walls, spacing (x_max-x_min)/(n_points-1).
struct Grid {
  double x_min = 0.0;
  double x_max = 1.0;
  int n_points = 16;

  double spacing() const { return (x_max - x_min) / (n_points - 1); }
  void require_valid() const {
    if (!(x_min < x_max)) throw std::invalid_argument("grid: x_min must be < x_max");
    if (n_points < 16) throw std::invalid_argument("grid: n_points must be >= 16");
  }
};

/// Discretized deformed Hamiltonian
///   -(hbar^2/2m) D2 + (lambda/m)(-i hbar) D1 + diag(V)
/// with central stencils over the interior nodes; the wavefunction is pinned
/// to zero at both walls, so the matrix dimension is n_points - 2. The
/// antisymmetric central D1 keeps -i D1 Hermitian and the spectrum real.
class GridHamiltonian {
 public:
  GridHamiltonian(Grid grid, std::vector<double> diag, std::vector<Complex> upper,
                  std::vector<Complex> lower)
      : grid_(grid),
        diag_(std::move(diag)),
        upper_(std::move(upper)),
        lower_(std::move(lower)) {}

  int dimension() const { return static_cast<int>(diag_.size()); }
  const Grid& grid() const { return grid_; }
  const std::vector<double>& diagonal() const { return diag_; }
  const std::vector<Complex>& upper() const { return upper_; }
  const std::vector<Complex>& lower() const { return lower_; }

  /// Position of interior node i (matrix row i).
  double node(int i) const { return grid_.x_min + grid_.spacing() * (i + 1); }

  /// max |H_ij - conj(H_ji)| over the stored band.
  double hermiticity_residual() const;

  /// Largest absolute entry, for scaling residual checks.
  double scale() const;

 private:
  Grid grid_;
  std::vector<double> diag_;
  std::vector<Complex> upper_, lower_;
};

GridHamiltonian build_hamiltonian(const std::function<double(double)>& potential,
                                  const PhysicalParams& p, const Grid& g);

struct EigenMode {
  double energy = 0.0;
  std::vector<Complex> amplitudes;  // on interior nodes, sum |psi|^2 h = 1
};

/// k smallest eigenpairs, ascending. The complex Hermitian tridiagonal is
/// reduced to a real symmetric tridiagonal by a diagonal phase similarity
/// (the discrete counterpart of the e^{-i lambda x/hbar} gauge factor).
std::vector<EigenMode> eigen_lowest(const GridHamiltonian& h, int k);

/// Eigenvalues only; cheaper for large grids.
std::vector<double> eigenvalues_lowest(const GridHamiltonian& h, int k);

/// Paired analytic/oracle energy lists with per-level discrepancies.
struct SpectrumReport {
  std::vector<double> analytic;
  std::vector<double> oracle;
  std::vector<double> abs_diff;
  std::vector<double> rel_diff;
  Grid grid;
  double lambda = 0.0;
};
SpectrumReport make_spectrum_report(std::vector<double> analytic,
                                    std::vector<double> oracle, const Grid& g,
                                    double lambda);

/// Transmission/reflection through a Gaussian regularization of V delta(x)
/// (area V, width reg_width): the deformed stationary equation is integrated
/// across the bump and matched to the deformed plane waves e^{i k_+ x},
/// e^{-i k_- x} outside. Converges to the analytic delta-barrier values as
/// reg_width -> 0.
struct TransferResult {
  double T = 0.0;
  double Rc = 0.0;
};
TransferResult scattering_transfer(double energy, const PhysicalParams& p,
                                   double reg_width);

/// max over points of |(hbar^2/2m) psi'' + (i hbar lambda/m) psi' + (E - V) psi|
/// divided by the largest term magnitude at that point; derivatives by
/// Richardson-extrapolated central differences with step fd_step.
double ode_residual(const std::function<Complex(double)>& psi, double energy,
                    const std::function<double(double)>& potential,
                    const PhysicalParams& p, const std::vector<double>& points,
                    double fd_step = 0.02);

/// Lowest n_max odd-sector levels of the softened Coulomb problem
/// -kappa/sqrt(x^2 + a^2): states vanishing at x = 0 are exactly the
/// spectrum of the half-line [0, x_max] problem with Dirichlet walls.
std::vector<double> coulomb_halfline_energies(const PhysicalParams& p, int n_max,
                                              double softening, int n_points,
                                              double x_max);

/// Single-cell spike -V/h at the interior node nearest x = 0: the natural
/// grid regularization of the delta well for bound-state checks.
GridHamiltonian build_delta_well_hamiltonian(const PhysicalParams& p, const Grid& g);

}  // namespace gup1d::oracle

#endif
