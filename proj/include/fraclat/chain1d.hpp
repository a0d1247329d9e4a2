#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "fraclat/toeplitz.hpp"
#include "fraclat/types.hpp"

namespace fraclat::chain {

// Infinite-chain element of the fractional generator power, closed form:
//   f_p = Omega^2 * (-1)^p * Gamma(alpha+1) / (Gamma(alpha/2-p+1) Gamma(alpha/2+p+1)).
// Exact binomial values for even integer alpha (terminating beyond |p| = alpha/2).
double infinite_element(const ChainConfig& cfg, std::int64_t p);

// Same element via Brillouin-zone quadrature,
//   f_p = (Omega^2/pi) * int_0^pi cos(p k) (4 sin^2(k/2))^{alpha/2} dk,
// kept as an independent oracle route. Matches the closed form to <=1e-10
// relative for |p| <= 50, alpha in (0, 6]. Throws QuadratureNonConvergence
// if the adaptive scheme stalls.
double infinite_element_quadrature(const ChainConfig& cfg, std::int64_t p,
                                   double rel_tol = 1e-11);

// Large-|p| asymptote f_p ~ -Omega^2 (Gamma(alpha+1)/pi) sin(alpha pi/2) |p|^{-alpha-1}.
// Requires p != 0 and alpha/2 not an integer (the sign factor vanishes there).
double asymptotic_element(const ChainConfig& cfg, std::int64_t p);

// Finite-ring element by periodizing the infinite chain: sum_s f^inf(p + s N).
// Direct summation over a window plus a two-term Gamma-ratio tail resummed with
// Hurwitz zetas; terminating (and exact) for even integer alpha.
double finite_element_periodized(const ChainConfig& cfg, std::int64_t p);

// Finite-ring element from the spectral sum over Bloch modes:
//   f_p = (Omega^2/N) sum_l cos(2 pi l p / N) (4 sin^2(pi l / N))^{alpha/2}.
double finite_element_spectral(const ChainConfig& cfg, std::int64_t p);

// Dispersion omega_alpha^2(kappa) = Omega^2 (4 sin^2(kappa/2))^{alpha/2}.
double dispersion(const ChainConfig& cfg, double kappa);

// Partial Laurent sum f_0 + 2 sum_{p=1}^{terms} f_p cos(p kappa) at unit Omega^2;
// converges to (4 sin^2(kappa/2))^{alpha/2} as terms grows.
double laurent_partial_sum(double alpha, double kappa, int terms);

// Assemble the periodic ring matrix (first row) in the requested convention.
// Route::Periodized (default) or Route::Spectral.
SymToeplitz assemble_matrix(const ChainConfig& cfg,
                            Convention convention = Convention::LaplacianNsd,
                            Route route = Route::Periodized);

// Elastic potential V = (mu/2) sum_{p,q} conj(u_p) f_{|p-q|} u_q on the finite
// ring, with f the periodized elements at the configured Omega^2. Returns the
// real part; throws ToleranceNotMet if the imaginary residual is not negligible,
// DimensionMismatch if u has the wrong length.
double elastic_potential(const ChainConfig& cfg, const std::vector<std::complex<double>>& u);

// Serial reference kernels, kept for testing and benchmarking the OpenMP paths.
namespace ref {
double finite_element_spectral(const ChainConfig& cfg, std::int64_t p);
double elastic_potential(const ChainConfig& cfg, const std::vector<std::complex<double>>& u);
} // namespace ref

} // namespace fraclat::chain
