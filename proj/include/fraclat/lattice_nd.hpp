#pragma once

#include <cstdint>
#include <vector>

#include "fraclat/toeplitz.hpp"
#include "fraclat/types.hpp"

namespace fraclat::lattice {

// Eigenvalue of the lattice generator at wavevector kappa (length = cfg.dim):
//   lambda(kappa) = 2n - 2 sum_j cos(kappa_j) = 4 sum_j sin^2(kappa_j/2), in [0, 4n].
double generator_eigenvalue(const LatticeConfig& cfg, const std::vector<double>& kappa);

// Dispersion omega_alpha(kappa) = sqrt(omega_sq) * lambda^{alpha/4}.
double dispersion_nd(const LatticeConfig& cfg, const std::vector<double>& kappa);

// Dimensionless dispersion normalized by the alpha=2 band edge:
//   lambda^{alpha/4} / (4n)^{1/2}; equals 1 exactly at kappa=(pi,...,pi), alpha=2.
double dispersion_nd_normalized(const LatticeConfig& cfg, const std::vector<double>& kappa);

// Finite periodic lattice element from the Bloch spectral sum
//   f_p = (Omega^2/N) sum_l cos(2 pi sum_j l_j p_j / N_j) lambda_l^{alpha/2}.
// Throws ResourceLimit when total sites exceed cfg.site_cap.
double finite_element_spectral_nd(const LatticeConfig& cfg, const MultiIndex& p);

// Whole first (block-)row of the characteristic matrix, flattened row-major.
// Direct long double summation up to 4096 sites, FFT-backed above.
std::vector<double> spectral_first_row(const LatticeConfig& cfg);

// Infinite-lattice element by nested Brillouin-zone quadrature over [0,pi]^n,
//   f_p = Omega^2 pi^{-n} int prod_j cos(kappa_j p_j) lambda^{alpha/2} d^n kappa.
// Guarded to n <= 3 (ResourceLimit above).
double infinite_element_nd(const LatticeConfig& cfg, const MultiIndex& p,
                           double rel_tol = 1e-8);

struct BesselRouteOptions {
    double epsilon = 1e-3; // regularization; Richardson-extrapolated to 0 from {eps, eps/2}
    double cutoff = 1e3;   // |xi| truncation; analytic tail correction appended
    double imag_tol = 1e-8;
};

// Infinite-lattice element via the regularized Riesz-kernel integral
//   Omega^2 * int exp(2 i n xi) D_{alpha/2}(xi) prod_j I_{|p_j|}(-2 i xi) dxi,
// with I_m(-2 i xi) = (-i)^m J_m(2 xi). Returns the real part; throws
// ToleranceNotMet if the imaginary residual exceeds imag_tol. Guarded to n <= 3.
double bessel_integral_element(const LatticeConfig& cfg, const MultiIndex& p,
                               const BesselRouteOptions& opt = {});

// Constant of the power-law decay of infinite-lattice elements,
//   C_{n,alpha} = 2^{alpha-1} alpha Gamma((alpha+n)/2) / (pi^{n/2} Gamma(1-alpha/2)),
// valid for 0 < alpha < 2 (DomainError outside).
double riesz_constant(int dim, double alpha);

// Large-distance asymptote -Omega^2 C_{n,alpha} ||p||^{-(n+alpha)}, 0 < alpha < 2.
double asymptotic_element_nd(const LatticeConfig& cfg, const MultiIndex& p);

// Assemble the periodic lattice matrix (first block-row) from the spectral route.
SymToeplitz assemble_matrix_nd(const LatticeConfig& cfg,
                               Convention convention = Convention::LaplacianNsd);

// Serial reference kernels for the OpenMP paths above.
namespace ref {
double finite_element_spectral_nd(const LatticeConfig& cfg, const MultiIndex& p);
double bessel_integral_element(const LatticeConfig& cfg, const MultiIndex& p,
                               const BesselRouteOptions& opt = {});
} // namespace ref

} // namespace fraclat::lattice
