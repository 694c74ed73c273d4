"""One-dimensional quantum systems with a linear momentum deformation.

Closed-form spectra, wavefunctions, delta-barrier scattering, and Stark
splittings for the deformed Hamiltonian p^2/2m + lambda p/m + V(x), together
with the independent numerical oracles (grid diagonalization, transfer-matrix
scattering, adaptive quadrature, ODE residuals) used to cross-check them.
"""

from ._core import (  # noqa: F401
    CheckResult,
    CoulombBranch,
    EigenMode,
    Grid,
    GridHamiltonian,
    MatrixElementMethod,
    PhysicalParams,
    ScatteringResult,
    StarkReport,
    adaptive_quadrature,
    airy_ai,
    airy_ai_prime,
    airy_bi,
    airy_bi_prime,
    airy_zero,
    airy_zeros,
    barrier_amplitudes,
    barrier_wavefunction,
    build_delta_well_hamiltonian,
    build_hamiltonian,
    coulomb_energy,
    coulomb_halfline_energies,
    coulomb_norm_squared,
    coulomb_wavefunction,
    delta_well_energy,
    delta_well_wavefunction,
    eigen_lowest,
    eigenvalues_lowest,
    excess_tunneling_current,
    gamma_fn,
    kummer_1f1,
    laguerre,
    laguerre_weighted_integral,
    linear_energy,
    linear_wavefunction,
    ode_residual,
    scattering_transfer,
    stark_first_order,
    stark_matrix_element,
    stark_report,
    stark_second_order,
    stark_split_wavefunction,
    stark_total_energies,
    verify_run_all,
)

__version__ = "0.1.0"
