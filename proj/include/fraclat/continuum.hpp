#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fraclat/types.hpp"

namespace fraclat::continuum {

// Riesz kernel of the infinite line,
//   K(x) = Gamma(alpha+1) sin(alpha pi/2) / (pi |x|^{alpha+1}).
// Throws SingularityError at x = 0, DomainError when alpha/2 is an integer
// (the kernel degenerates there) or alpha <= 0.
double riesz_kernel_infinite(double alpha, double x);

struct TailBounded {
    double value;      // truncated image sum plus midpoint-integral tail estimate
    double tail_bound; // bound on the remaining error (bracketing-integral gap)
};

// L-periodic kernel as the direct image sum
//   K_L(x) = pref * sum_n |x - n L|^{-alpha-1}
// truncated at |n| <= terms; the tail of the sum is estimated by a midpoint
// integral and the returned bound brackets the truncation error.
TailBounded periodic_kernel_direct(double alpha, double L, double x, std::int64_t terms);

// Same kernel in closed form via the absolute-value Hurwitz zeta:
//   K_L(x) = pref/L^{alpha+1} * [ -|xi|^{-alpha-1} + zeta~(alpha+1, xi) + zeta~(alpha+1, -xi) ],
// xi = x/L reduced to (0,1). Agrees with the direct route to <=1e-8 relative.
double periodic_kernel_zeta(double alpha, double L, double x);

struct Scaling {
    double omega_sq; // a_const * h^{-alpha}
    double mu;       // rho0 * h
};

// Lattice-constant scaling that keeps the continuum limit finite.
Scaling scaling(double alpha, double h, double a_const, double rho0);

struct LimitStep {
    double h;
    std::int64_t site;      // nearest lattice site to x/h
    double lattice_value;   // -rho0 a_const h^{-alpha-1} f_site
    double continuum_value; // rho0 a_const K(x)
    double rel_deviation;
    bool on_grid;           // x/h was an integer (no rounding jitter)
};

struct LimitReport {
    std::vector<LimitStep> steps;
    bool monotone = true;  // deviations strictly decreasing along hs
    double final_deviation = 0.0;
};

// Compare the scaled infinite-chain element against the Riesz kernel at fixed x
// over a sequence of spacings h. Non-monotone convergence is reported in the
// result, not thrown. Requires 0 < alpha < 2 with alpha/2 non-integer.
LimitReport continuum_limit_check(double alpha, double x, const std::vector<double>& hs,
                                  double a_const = 1.0, double rho0 = 1.0);

struct KernelSamples {
    std::vector<double> x;
    std::vector<double> value;
    std::vector<double> tail_bound; // filled for the direct route only
    double alpha = 0.0;
    std::optional<double> period;
    std::string route;
};

// Sample a kernel on explicit abscissae (CLI helper). route: "infinite",
// "direct" (needs terms) or "zeta". Throws SingularityError if an abscissa
// lands on x = 0 (mod L for periodic kernels).
KernelSamples sample_kernel(const ContinuumConfig& cfg, const std::vector<double>& xs,
                            const std::string& route, std::int64_t terms = 100000);

} // namespace fraclat::continuum
