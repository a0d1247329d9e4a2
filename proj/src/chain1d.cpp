#include "fraclat/chain1d.hpp"

#include <omp.h>

#include <cmath>
#include <string>

#include "fraclat/quadrature.hpp"
#include "fraclat/specfun.hpp"
#include "fraclat/transforms.hpp"

namespace fraclat::chain {

namespace {

using specfun::gen_binomial;
using specfun::hurwitz_zeta;
using specfun::ZetaVariant;

// sin(alpha*pi/2) * Gamma(alpha+1) / pi, the coefficient of the |p|^{-alpha-1}
// power-law decay. Vanishes identically for even integer alpha.
double decay_coefficient(double alpha) {
    return std::exp(std::lgamma(alpha + 1.0)) * std::sin(0.5 * M_PI * alpha) / M_PI;
}

bool half_alpha_is_integer(double alpha) {
    return 0.5 * alpha == std::rint(0.5 * alpha);
}

// dimensionless infinite-chain element at unit Omega^2
double element_unit(double alpha, std::int64_t p) {
    const std::int64_t ap = std::llabs(p);
    const double b = gen_binomial(alpha, (double)ap);
    return (ap % 2 == 0) ? b : -b;
}

// Deterministic OpenMP reduction: fixed per-thread ranges, partials combined
// in thread order.
template <class Term>
long double ordered_parallel_sum(std::int64_t n, Term&& term) {
    const int nt = omp_get_max_threads();
    std::vector<long double> partial(nt, 0.0L);
#pragma omp parallel num_threads(nt)
    {
        const int t = omp_get_thread_num();
        const std::int64_t lo = n * t / nt;
        const std::int64_t hi = n * (t + 1) / nt;
        long double acc = 0.0L;
        for (std::int64_t i = lo; i < hi; ++i) acc += term(i);
        partial[t] = acc;
    }
    long double total = 0.0L;
    for (int t = 0; t < nt; ++t) total += partial[t];
    return total;
}

long double spectral_term(const ChainConfig& cfg, std::int64_t p, std::int64_t l) {
    const std::int64_t n = *cfg.size;
    const long double kappa_half = (long double)M_PIl * (long double)l / (long double)n;
    const long double lam = 2.0L * sinl(kappa_half); // sqrt(lambda) = 2|sin(kappa/2)|
    const long double phase =
        2.0L * (long double)M_PIl * (long double)((l * p) % n) / (long double)n;
    return cosl(phase) * powl(lam * lam, 0.5L * (long double)cfg.alpha);
}

} // namespace

double infinite_element(const ChainConfig& cfg, std::int64_t p) {
    cfg.validate();
    if (!cfg.infinite())
        throw DomainError("infinite_element: config describes a finite ring");
    return cfg.omega_sq * element_unit(cfg.alpha, p);
}

double infinite_element_quadrature(const ChainConfig& cfg, std::int64_t p, double rel_tol) {
    cfg.validate();
    if (!cfg.infinite())
        throw DomainError("infinite_element_quadrature: config describes a finite ring");
    const long double alpha = cfg.alpha;
    const std::int64_t ap = std::llabs(p);
    const auto f = [alpha, ap](long double kappa) {
        const long double base = 2.0L * sinl(0.5L * kappa);
        return cosl((long double)ap * kappa) * powl(base, alpha);
    };
    const long double pi = (long double)M_PIl;
    long double value;
    if (ap < 2) {
        // slow oscillation: plain adaptive handles the kappa^alpha branch point
        value = quad::integrate_rel(f, 0.0L, pi, rel_tol).value;
    } else {
        // For large p the result is tiny against the integrand scale, so keep
        // the panel count low: adaptive grading only around the branch point,
        // then three fixed GK15 panels per half-period of cos(p kappa). Fewer
        // panels means less accumulated roundoff under the cancellation.
        const long double split = pi / (long double)ap;
        const quad::Result head = quad::adaptive(f, 0.0L, split, 1e-18L);
        const quad::Result body = quad::fixed_panels(f, split, pi, split / 3.0L);
        value = head.value + body.value;
    }
    return cfg.omega_sq * (double)(value / pi);
}

double asymptotic_element(const ChainConfig& cfg, std::int64_t p) {
    cfg.validate();
    if (p == 0) throw DomainError("asymptotic_element: p must be nonzero");
    if (half_alpha_is_integer(cfg.alpha))
        throw DomainError("asymptotic_element: degenerate for integer alpha/2");
    const double ap = (double)std::llabs(p);
    return -cfg.omega_sq * decay_coefficient(cfg.alpha) * std::pow(ap, -cfg.alpha - 1.0);
}

double finite_element_periodized(const ChainConfig& cfg, std::int64_t p) {
    cfg.validate();
    if (cfg.infinite())
        throw DomainError("finite_element_periodized: config describes the infinite chain");
    const std::int64_t n = *cfg.size;
    if (p < 0 || p >= n)
        throw DomainError("finite_element_periodized: p must lie in [0, N), got " +
                          std::to_string(p));
    const double alpha = cfg.alpha;

    // Even integer alpha: the image sum terminates exactly once |p + s N|
    // exceeds alpha/2, keeping small stencils bit-exact.
    if (half_alpha_is_integer(alpha)) {
        const std::int64_t m = (std::int64_t)std::llrint(0.5 * alpha);
        long double total = 0.0L;
        for (std::int64_t s = -(m + p) / n - 1; s * n + p <= m; ++s) {
            const std::int64_t q = p + s * n;
            if (std::llabs(q) <= m) total += (long double)element_unit(alpha, q);
        }
        return cfg.omega_sq * (double)total;
    }

    // General alpha: exact terms inside a window, then the two power-law tails
    // resummed with Hurwitz zetas using the even Gamma-ratio expansion
    //   f(q) = -K q^{-alpha-1} (1 + c2/q^2 + O(q^-4)), c2 = alpha(alpha+1)(alpha+2)/24.
    // Right images are |p + sN| for s >= 0, left images (s+1)N - p for s >= 0;
    // the cursors advance independently so each tail starts at the first image
    // that was actually left out.
    const std::int64_t window = std::max<std::int64_t>(4000, 3 * n);
    long double total = 0.0L;
    std::int64_t qr = p;
    std::int64_t ql = n - p;
    while (qr <= window || ql <= window) {
        long double pair = 0.0L;
        if (qr <= window) {
            pair += (long double)element_unit(alpha, qr);
            qr += n;
        }
        if (ql <= window) {
            pair += (long double)element_unit(alpha, ql);
            ql += n;
        }
        total += pair;
        if (qr > n && ql > n && fabsl(pair) < 1e-14L * fabsl(total)) break;
    }
    const double K = decay_coefficient(alpha);
    const double c2 = alpha * (alpha + 1.0) * (alpha + 2.0) / 24.0;
    const double nn = (double)n;
    auto tail = [&](std::int64_t q0) {
        const double a = (double)q0 / nn;
        return -K * (std::pow(nn, -alpha - 1.0) * hurwitz_zeta(ZetaVariant::Standard, alpha + 1.0, a) +
                     c2 * std::pow(nn, -alpha - 3.0) * hurwitz_zeta(ZetaVariant::Standard, alpha + 3.0, a));
    };
    total += (long double)tail(qr) + (long double)tail(ql);
    return cfg.omega_sq * (double)total;
}

double finite_element_spectral(const ChainConfig& cfg, std::int64_t p) {
    cfg.validate();
    if (cfg.infinite())
        throw DomainError("finite_element_spectral: config describes the infinite chain");
    const std::int64_t n = *cfg.size;
    const long double sum =
        ordered_parallel_sum(n, [&](std::int64_t l) { return spectral_term(cfg, p, l); });
    return cfg.omega_sq * (double)(sum / (long double)n);
}

double ref::finite_element_spectral(const ChainConfig& cfg, std::int64_t p) {
    cfg.validate();
    if (cfg.infinite())
        throw DomainError("finite_element_spectral: config describes the infinite chain");
    const std::int64_t n = *cfg.size;
    long double sum = 0.0L;
    for (std::int64_t l = 0; l < n; ++l) sum += spectral_term(cfg, p, l);
    return cfg.omega_sq * (double)(sum / (long double)n);
}

double dispersion(const ChainConfig& cfg, double kappa) {
    cfg.validate();
    const double s = std::sin(0.5 * kappa);
    return cfg.omega_sq * std::pow(4.0 * s * s, 0.5 * cfg.alpha);
}

double laurent_partial_sum(double alpha, double kappa, int terms) {
    if (!(alpha > 0.0)) throw DomainError("laurent_partial_sum: alpha must be positive");
    if (terms < 0) throw DomainError("laurent_partial_sum: terms must be >= 0");
    // march the coefficients with the exact ratio f_{p+1}/f_p = -(alpha/2-p)/(alpha/2+p+1)
    long double f = gen_binomial(alpha, 0.0);
    long double acc = f;
    for (int p = 0; p < terms; ++p) {
        f *= -(0.5L * (long double)alpha - p) / (0.5L * (long double)alpha + p + 1.0L);
        acc += 2.0L * f * cosl((long double)(p + 1) * (long double)kappa);
        if (f == 0.0L) break; // terminated (even integer alpha)
    }
    return (double)acc;
}

SymToeplitz assemble_matrix(const ChainConfig& cfg, Convention convention, Route route) {
    cfg.validate();
    if (cfg.infinite())
        throw DomainError("assemble_matrix: infinite chain has no materialized matrix; "
                          "use the element functions");
    const std::int64_t n = *cfg.size;
    SymToeplitz m;
    m.dims = {n};
    m.convention = convention;
    m.scale = (convention == Convention::LaplacianNsd) ? -cfg.mass * cfg.omega_sq
                                                       : cfg.omega_sq;
    const double sign = (convention == Convention::LaplacianNsd) ? -cfg.mass : 1.0;
    m.first_row.resize(n);
    switch (route) {
        case Route::Periodized:
#pragma omp parallel for schedule(static)
            for (std::int64_t p = 0; p < n; ++p)
                m.first_row[p] = sign * finite_element_periodized(cfg, p);
            break;
        case Route::Spectral: {
            // one real even DFT of the symbol gives the whole row
            std::vector<double> symbol(n);
            for (std::int64_t l = 0; l < n; ++l) {
                const double sh = std::sin(M_PI * (double)l / (double)n);
                symbol[l] = std::pow(4.0 * sh * sh, 0.5 * cfg.alpha);
            }
            const std::vector<double> row = transforms::real_even_dft(symbol, {n});
            for (std::int64_t p = 0; p < n; ++p)
                m.first_row[p] = sign * cfg.omega_sq * row[p] / (double)n;
            break;
        }
        default:
            throw DomainError("assemble_matrix: route must be periodized or spectral");
    }
    long double rs = 0.0L;
    for (double v : m.first_row) rs += v;
    m.row_sum = (double)rs;
    return m;
}

double elastic_potential(const ChainConfig& cfg, const std::vector<std::complex<double>>& u) {
    cfg.validate();
    if (cfg.infinite())
        throw DomainError("elastic_potential: finite ring required");
    const std::int64_t n = *cfg.size;
    if ((std::int64_t)u.size() != n)
        throw DimensionMismatch("elastic_potential: field length " + std::to_string(u.size()) +
                                " vs ring size " + std::to_string(n));
    std::vector<double> row(n);
    for (std::int64_t p = 0; p < n; ++p) row[p] = finite_element_periodized(cfg, p);

    const int nt = omp_get_max_threads();
    std::vector<std::complex<long double>> partial(nt, 0.0L);
#pragma omp parallel num_threads(nt)
    {
        const int t = omp_get_thread_num();
        const std::int64_t lo = n * t / nt;
        const std::int64_t hi = n * (t + 1) / nt;
        std::complex<long double> acc = 0.0L;
        for (std::int64_t p = lo; p < hi; ++p) {
            for (std::int64_t q = 0; q < n; ++q) {
                std::int64_t d = (p - q) % n;
                if (d < 0) d += n;
                acc += std::conj(std::complex<long double>(u[p])) *
                       (long double)row[d] * std::complex<long double>(u[q]);
            }
        }
        partial[t] = acc;
    }
    std::complex<long double> v = 0.0L;
    for (int t = 0; t < nt; ++t) v += partial[t];
    v *= 0.5L * (long double)cfg.mass;
    long double norm = 0.0L;
    for (auto& x : u) norm += std::norm(std::complex<long double>(x));
    if (fabsl(v.imag()) > 1e-10L * std::max(1.0L, fabsl(v.real()) + norm))
        throw ToleranceNotMet("elastic_potential: imaginary residual " +
                              std::to_string((double)v.imag()));
    return (double)v.real();
}

double ref::elastic_potential(const ChainConfig& cfg, const std::vector<std::complex<double>>& u) {
    cfg.validate();
    if (cfg.infinite()) throw DomainError("elastic_potential: finite ring required");
    const std::int64_t n = *cfg.size;
    if ((std::int64_t)u.size() != n)
        throw DimensionMismatch("elastic_potential: field length mismatch");
    std::vector<double> row(n);
    for (std::int64_t p = 0; p < n; ++p) row[p] = finite_element_periodized(cfg, p);
    std::complex<long double> v = 0.0L;
    for (std::int64_t p = 0; p < n; ++p)
        for (std::int64_t q = 0; q < n; ++q) {
            std::int64_t d = (p - q) % n;
            if (d < 0) d += n;
            v += std::conj(std::complex<long double>(u[p])) * (long double)row[d] *
                 std::complex<long double>(u[q]);
        }
    v *= 0.5L * (long double)cfg.mass;
    return (double)v.real();
}

} // namespace fraclat::chain
