#include "fraclat/continuum.hpp"

#include <cmath>
#include <string>

#include "fraclat/chain1d.hpp"
#include "fraclat/errors.hpp"
#include "fraclat/specfun.hpp"

namespace fraclat::continuum {

namespace {

// Gamma(alpha+1) sin(alpha pi/2) / pi, shared by all kernel forms
double kernel_prefactor(double alpha) {
    if (!(alpha > 0.0)) throw DomainError("kernel: alpha must be positive");
    if (0.5 * alpha == std::rint(0.5 * alpha))
        throw DomainError("kernel: degenerate for integer alpha/2 (local limit)");
    return std::exp(std::lgamma(alpha + 1.0)) * std::sin(0.5 * M_PI * alpha) / M_PI;
}

// reduce x to xi = x/L in (0, 1); throws when x sits on a period point
double reduced_coordinate(double L, double x) {
    if (!(L > 0.0)) throw DomainError("kernel: period must be positive");
    double xi = x / L;
    xi -= std::floor(xi);
    if (xi == 0.0)
        throw SingularityError("periodic kernel diverges at x = 0 (mod L)");
    return xi;
}

} // namespace

double riesz_kernel_infinite(double alpha, double x) {
    const double pref = kernel_prefactor(alpha);
    if (x == 0.0) throw SingularityError("riesz_kernel_infinite diverges at x = 0");
    return pref * std::pow(std::fabs(x), -alpha - 1.0);
}

TailBounded periodic_kernel_direct(double alpha, double L, double x, std::int64_t terms) {
    const double pref = kernel_prefactor(alpha);
    if (terms < 1) throw DomainError("periodic_kernel_direct: terms must be >= 1");
    const double xi = reduced_coordinate(L, x);

    // image distances: right side xi + k, left side (k + 1) - xi, k = 0..terms-1,
    // all in units of L
    long double sum = 0.0L;
    for (std::int64_t k = terms - 1; k >= 0; --k) { // small terms first
        sum += powl((long double)xi + (long double)k, -(long double)alpha - 1.0L);
        sum += powl((long double)(k + 1) - (long double)xi, -(long double)alpha - 1.0L);
    }

    // tail past the last image on each side: midpoint integral as the estimate,
    // the gap between the two bracketing integrals as the bound
    const auto integral_from = [alpha](double c) {
        // int_c^inf u^{-alpha-1} du = c^{-alpha} / alpha, distances in L units
        return std::pow(c, -alpha) / alpha;
    };
    const double t = (double)terms;
    const double tail_right = integral_from(xi + t - 0.5);
    const double tail_left = integral_from(t + 0.5 - xi);
    const double gap_right = integral_from(xi + t - 1.0) - integral_from(xi + t);
    const double gap_left = integral_from(t - xi) - integral_from(t + 1.0 - xi);

    TailBounded out;
    const double unit = std::pow(L, -alpha - 1.0);
    out.value = pref * unit * (double)(sum + (long double)tail_right + (long double)tail_left);
    out.tail_bound = std::fabs(pref) * unit * 0.5 * (gap_right + gap_left);
    return out;
}

double periodic_kernel_zeta(double alpha, double L, double x) {
    const double pref = kernel_prefactor(alpha);
    const double xi = reduced_coordinate(L, x);
    const double beta = alpha + 1.0;
    using specfun::hurwitz_zeta;
    using specfun::ZetaVariant;
    const double body = -std::pow(xi, -beta) +
                        hurwitz_zeta(ZetaVariant::AbsoluteValue, beta, xi) +
                        hurwitz_zeta(ZetaVariant::AbsoluteValue, beta, -xi);
    return pref * std::pow(L, -beta) * body;
}

Scaling scaling(double alpha, double h, double a_const, double rho0) {
    if (!(alpha > 0.0)) throw DomainError("scaling: alpha must be positive");
    if (!(h > 0.0)) throw DomainError("scaling: spacing must be positive");
    if (!(a_const > 0.0) || !(rho0 > 0.0))
        throw DomainError("scaling: a_const and rho0 must be positive");
    return {a_const * std::pow(h, -alpha), rho0 * h};
}

LimitReport continuum_limit_check(double alpha, double x, const std::vector<double>& hs,
                                  double a_const, double rho0) {
    if (!(alpha > 0.0 && alpha < 2.0))
        throw DomainError("continuum_limit_check: alpha must lie in (0, 2)");
    if (hs.empty()) throw DomainError("continuum_limit_check: no spacings given");
    const double continuum = rho0 * a_const * riesz_kernel_infinite(alpha, x);

    LimitReport report;
    ChainConfig chain;
    chain.alpha = alpha;
    chain.omega_sq = 1.0;
    for (double h : hs) {
        if (!(h > 0.0)) throw DomainError("continuum_limit_check: spacing must be positive");
        LimitStep step;
        step.h = h;
        const double ratio = x / h;
        step.site = std::llround(std::fabs(ratio));
        if (step.site == 0)
            throw DomainError("continuum_limit_check: spacing " + std::to_string(h) +
                              " too coarse to resolve x = " + std::to_string(x));
        step.on_grid = std::fabs(std::fabs(ratio) - (double)step.site) <=
                       1e-9 * std::max(1.0, std::fabs(ratio));
        const double f = chain::infinite_element(chain, step.site);
        step.lattice_value = -rho0 * a_const * std::pow(h, -alpha - 1.0) * f;
        step.continuum_value = continuum;
        step.rel_deviation = std::fabs(step.lattice_value - continuum) / std::fabs(continuum);
        report.steps.push_back(step);
    }
    for (std::size_t i = 1; i < report.steps.size(); ++i)
        if (!(report.steps[i].rel_deviation < report.steps[i - 1].rel_deviation))
            report.monotone = false;
    report.final_deviation = report.steps.back().rel_deviation;
    return report;
}

KernelSamples sample_kernel(const ContinuumConfig& cfg, const std::vector<double>& xs,
                            const std::string& route, std::int64_t terms) {
    cfg.validate();
    KernelSamples out;
    out.x = xs;
    out.alpha = cfg.alpha;
    out.route = route;
    out.value.reserve(xs.size());
    if (route == "infinite") {
        for (double x : xs) out.value.push_back(riesz_kernel_infinite(cfg.alpha, x));
        return out;
    }
    if (!cfg.period)
        throw DomainError("sample_kernel: route '" + route + "' needs a period");
    out.period = cfg.period;
    if (route == "direct") {
        out.tail_bound.reserve(xs.size());
        for (double x : xs) {
            const TailBounded tb = periodic_kernel_direct(cfg.alpha, *cfg.period, x, terms);
            out.value.push_back(tb.value);
            out.tail_bound.push_back(tb.tail_bound);
        }
        return out;
    }
    if (route == "zeta") {
        for (double x : xs) out.value.push_back(periodic_kernel_zeta(cfg.alpha, *cfg.period, x));
        return out;
    }
    throw DomainError("sample_kernel: unknown route '" + route + "'");
}

} // namespace fraclat::continuum
