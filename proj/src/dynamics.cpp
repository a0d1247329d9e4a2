#include "fraclat/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fraclat/errors.hpp"
#include "fraclat/transforms.hpp"

namespace fraclat::dynamics {

namespace {

// Bloch eigenvalue lambda_l of the mode with flattened index `flat`.
double mode_eigenvalue(const LatticeConfig& cfg, std::int64_t flat) {
    double lam = 0.0;
    for (int a = cfg.dim - 1; a >= 0; --a) {
        const std::int64_t la = flat % cfg.sizes[a];
        flat /= cfg.sizes[a];
        const double s = std::sin(M_PI * (double)la / (double)cfg.sizes[a]);
        lam += 4.0 * s * s;
    }
    return lam;
}

double mode_power(const LatticeConfig& cfg, std::int64_t flat) {
    const double lam = mode_eigenvalue(cfg, flat);
    return (lam == 0.0) ? 0.0 : std::pow(lam, 0.5 * cfg.alpha);
}

} // namespace

void FieldState::validate() const {
    config.validate();
    if (config.infinite())
        throw DomainError("FieldState: finite lattice required");
    const std::int64_t total = config.total_sites();
    if ((std::int64_t)values.size() != total)
        throw DimensionMismatch("FieldState: field length " + std::to_string(values.size()) +
                                " vs " + std::to_string(total) + " sites");
}

std::vector<std::complex<double>> apply_laplacian(const FieldState& state,
                                                  Convention convention) {
    state.validate();
    const LatticeConfig& cfg = state.config;
    const std::int64_t total = cfg.total_sites();
    const double scale = (convention == Convention::LaplacianNsd)
                             ? -cfg.mass * cfg.omega_sq
                             : cfg.omega_sq;
    std::vector<std::complex<double>> work = state.values;
    transforms::dft(work, cfg.sizes, -1);
    for (std::int64_t l = 0; l < total; ++l) work[l] *= scale * mode_power(cfg, l);
    transforms::dft(work, cfg.sizes, +1);
    const double inv = 1.0 / (double)total;
    for (auto& v : work) v *= inv;
    return work;
}

FieldState evolve_diffusion(const FieldState& state, double t, double diffusivity) {
    state.validate();
    if (t < 0.0) throw DomainError("evolve_diffusion: negative duration");
    if (!(diffusivity > 0.0)) throw DomainError("evolve_diffusion: diffusivity must be positive");
    FieldState out = state;
    if (t == 0.0) return out; // keep the input bit pattern untouched
    const LatticeConfig& cfg = state.config;
    const std::int64_t total = cfg.total_sites();
    transforms::dft(out.values, cfg.sizes, -1);
    for (std::int64_t l = 0; l < total; ++l)
        out.values[l] *= std::exp(-diffusivity * cfg.omega_sq * mode_power(cfg, l) * t);
    transforms::dft(out.values, cfg.sizes, +1);
    const double inv = 1.0 / (double)total;
    for (auto& v : out.values) v *= inv;
    out.time = state.time + t;
    return out;
}

std::vector<double> normal_mode_frequencies(const LatticeConfig& cfg) {
    cfg.validate();
    if (cfg.infinite())
        throw DomainError("normal_mode_frequencies: finite lattice required");
    const std::int64_t total = cfg.total_sites();
    if (total > cfg.site_cap)
        throw ResourceLimit("lattice has " + std::to_string(total) + " sites, cap is " +
                            std::to_string(cfg.site_cap));
    std::vector<double> freq(total);
    const double omega = std::sqrt(cfg.omega_sq);
    for (std::int64_t l = 0; l < total; ++l) {
        const double lam = mode_eigenvalue(cfg, l);
        freq[l] = (lam == 0.0) ? 0.0 : omega * std::pow(lam, 0.25 * cfg.alpha);
    }
    std::sort(freq.begin(), freq.end());
    return freq;
}

std::vector<double> normal_mode_frequencies(const ChainConfig& cfg) {
    return normal_mode_frequencies(as_lattice(cfg));
}

std::complex<double> total_mass(const FieldState& state) {
    state.validate();
    std::complex<long double> acc = 0.0L;
    for (const auto& v : state.values) acc += std::complex<long double>(v);
    return {(double)acc.real(), (double)acc.imag()};
}

} // namespace fraclat::dynamics
