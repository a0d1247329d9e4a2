#pragma once

#include <complex>
#include <vector>

#include "fraclat/types.hpp"

namespace fraclat::dynamics {

// Complex displacement/concentration field on a finite periodic lattice.
struct FieldState {
    LatticeConfig config;
    std::vector<std::complex<double>> values; // flattened row-major
    double time = 0.0;

    void validate() const; // sizes finite, values length == total sites
};

// Apply the fractional matrix in the spectral basis: forward transform,
// multiply each Bloch mode by -mu Omega^2 lambda^{alpha/2} (Laplacian
// convention) or +Omega^2 lambda^{alpha/2} (characteristic), inverse transform.
std::vector<std::complex<double>> apply_laplacian(const FieldState& state,
                                                  Convention convention = Convention::LaplacianNsd);

// Exact spectral propagator of du/dt = c (Delta_alpha/mu) u over a duration t:
// mode l is scaled by exp(-c Omega^2 lambda_l^{alpha/2} t). t = 0 returns the
// state unchanged (bit-exact). Mass (the lambda=0 mode) is conserved.
FieldState evolve_diffusion(const FieldState& state, double t, double diffusivity = 1.0);

// All N normal mode frequencies omega = sqrt(omega_sq) * lambda_l^{alpha/4},
// sorted ascending; the first entry is exactly 0 (uniform translation mode).
std::vector<double> normal_mode_frequencies(const LatticeConfig& cfg);
std::vector<double> normal_mode_frequencies(const ChainConfig& cfg);

// Total mass sum_p u_p of a field.
std::complex<double> total_mass(const FieldState& state);

} // namespace fraclat::dynamics
