#include "fraclat/types.hpp"

#include <cmath>
#include <string>

namespace fraclat {

void ChainConfig::validate() const {
    if (!(alpha > 0.0) || !std::isfinite(alpha))
        throw DomainError("chain: alpha must be positive, got " + std::to_string(alpha));
    if (!(omega_sq > 0.0)) throw DomainError("chain: omega_sq must be positive");
    if (!(mass > 0.0)) throw DomainError("chain: mass must be positive");
    if (!(lattice_const > 0.0)) throw DomainError("chain: lattice_const must be positive");
    if (size && *size < 3)
        throw DomainError("chain: ring needs at least 3 sites, got " + std::to_string(*size));
}

std::int64_t LatticeConfig::total_sites() const {
    std::int64_t n = 1;
    for (auto s : sizes) n *= s;
    return n;
}

void LatticeConfig::validate() const {
    if (dim < 1) throw DomainError("lattice: dim must be >= 1");
    if (!(alpha > 0.0) || !std::isfinite(alpha))
        throw DomainError("lattice: alpha must be positive, got " + std::to_string(alpha));
    if (!(omega_sq > 0.0)) throw DomainError("lattice: omega_sq must be positive");
    if (!(mass > 0.0)) throw DomainError("lattice: mass must be positive");
    if (!sizes.empty()) {
        if ((int)sizes.size() != dim)
            throw DimensionMismatch("lattice: " + std::to_string(sizes.size()) +
                                    " sizes given for dim " + std::to_string(dim));
        for (auto s : sizes)
            if (s < 3) throw DomainError("lattice: each extent needs at least 3 sites");
    }
}

LatticeConfig as_lattice(const ChainConfig& c) {
    LatticeConfig l;
    l.dim = 1;
    if (c.size) l.sizes = {*c.size};
    l.alpha = c.alpha;
    l.omega_sq = c.omega_sq;
    l.mass = c.mass;
    return l;
}

void ContinuumConfig::validate() const {
    if (!(alpha > 0.0)) throw DomainError("continuum: alpha must be positive");
    if (period && !(*period > 0.0)) throw DomainError("continuum: period must be positive");
    if (!(a_const > 0.0)) throw DomainError("continuum: a_const must be positive");
    if (!(rho0 > 0.0)) throw DomainError("continuum: rho0 must be positive");
}

} // namespace fraclat
