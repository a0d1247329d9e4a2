#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include "fraclat/errors.hpp"

namespace fraclat {

using MultiIndex = std::vector<std::int64_t>;

// Sign convention for assembled matrices. The Laplacian form -mu*Omega^2*L^{alpha/2}
// is negative semidefinite; the bare characteristic form Omega^2*L^{alpha/2} is
// positive semidefinite.
enum class Convention { LaplacianNsd, CharacteristicPsd };

// Selectable evaluation routes for matrix elements.
enum class Route { ClosedForm, Quadrature, Periodized, Spectral };

// 1D ring of size sites (periodic), or the infinite chain when size is empty.
struct ChainConfig {
    std::optional<std::int64_t> size;
    double alpha = 1.0;
    double omega_sq = 1.0;      // elastic prefactor Omega_alpha^2
    double lattice_const = 1.0; // spacing h, used by the continuum bridge
    double mass = 1.0;          // per-site mass mu

    bool infinite() const { return !size.has_value(); }
    void validate() const;
};

// n-dimensional hypercubic lattice, periodic when sizes are given, infinite
// in every direction when sizes is empty.
struct LatticeConfig {
    int dim = 1;
    std::vector<std::int64_t> sizes; // empty => infinite
    double alpha = 1.0;
    double omega_sq = 1.0;
    double mass = 1.0;
    std::int64_t site_cap = std::int64_t{1} << 24;

    bool infinite() const { return sizes.empty(); }
    std::int64_t total_sites() const;
    void validate() const;
};

LatticeConfig as_lattice(const ChainConfig& c);

// Continuum-side parameters: Omega^2(h) = a_const * h^{-alpha}, mu(h) = rho0 * h.
struct ContinuumConfig {
    double alpha = 1.0;
    std::optional<double> period; // L; empty => infinite line
    double a_const = 1.0;
    double rho0 = 1.0;

    void validate() const;
};

} // namespace fraclat
