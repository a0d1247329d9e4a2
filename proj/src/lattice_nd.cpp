#include "fraclat/lattice_nd.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <string>

#include "fraclat/errors.hpp"
#include "fraclat/quadrature.hpp"
#include "fraclat/specfun.hpp"
#include "fraclat/transforms.hpp"

namespace fraclat::lattice {

namespace {

constexpr int kMaxQuadDim = 3; // nested quadrature cost grows geometrically

void check_index(const LatticeConfig& cfg, const MultiIndex& p) {
    if ((int)p.size() != cfg.dim)
        throw DimensionMismatch("lattice index has " + std::to_string(p.size()) +
                                " components, config dim is " + std::to_string(cfg.dim));
}

// Per-axis tables for the Bloch sum at a fixed site offset p:
//   lam[a][l]   = 4 sin^2(pi l / N_a)         (generator eigenvalue share)
//   phase[a][l] = ((l * p_a) mod N_a) / N_a   (rational phase share)
struct ModeTables {
    std::vector<std::vector<long double>> lam;
    std::vector<std::vector<long double>> phase;
};

ModeTables build_tables(const LatticeConfig& cfg, const MultiIndex& p) {
    ModeTables t;
    t.lam.resize(cfg.dim);
    t.phase.resize(cfg.dim);
    for (int a = 0; a < cfg.dim; ++a) {
        const std::int64_t na = cfg.sizes[a];
        const std::int64_t pa = ((p[a] % na) + na) % na;
        t.lam[a].resize(na);
        t.phase[a].resize(na);
        for (std::int64_t l = 0; l < na; ++l) {
            const long double s = sinl((long double)M_PIl * (long double)l / (long double)na);
            t.lam[a][l] = 4.0L * s * s;
            t.phase[a][l] = (long double)((l * pa) % na) / (long double)na;
        }
    }
    return t;
}

long double mode_term(const LatticeConfig& cfg, const ModeTables& t, std::int64_t flat) {
    long double lam = 0.0L;
    long double frac = 0.0L;
    for (int a = cfg.dim - 1; a >= 0; --a) {
        const std::int64_t la = flat % cfg.sizes[a];
        flat /= cfg.sizes[a];
        lam += t.lam[a][la];
        frac += t.phase[a][la];
    }
    const long double power = (lam == 0.0L) ? 0.0L : powl(lam, 0.5L * (long double)cfg.alpha);
    return cosl(2.0L * (long double)M_PIl * frac) * power;
}

double spectral_sum(const LatticeConfig& cfg, const MultiIndex& p, bool parallel) {
    cfg.validate();
    if (cfg.infinite())
        throw DomainError("finite_element_spectral_nd: config describes the infinite lattice");
    check_index(cfg, p);
    const std::int64_t total = cfg.total_sites();
    if (total > cfg.site_cap)
        throw ResourceLimit("lattice has " + std::to_string(total) + " sites, cap is " +
                            std::to_string(cfg.site_cap));
    const ModeTables t = build_tables(cfg, p);
    long double sum = 0.0L;
    if (parallel) {
        const int nt = omp_get_max_threads();
        std::vector<long double> partial(nt, 0.0L);
#pragma omp parallel num_threads(nt)
        {
            const int tid = omp_get_thread_num();
            const std::int64_t lo = total * tid / nt;
            const std::int64_t hi = total * (tid + 1) / nt;
            long double acc = 0.0L;
            for (std::int64_t i = lo; i < hi; ++i) acc += mode_term(cfg, t, i);
            partial[tid] = acc;
        }
        for (int tid = 0; tid < nt; ++tid) sum += partial[tid];
    } else {
        for (std::int64_t i = 0; i < total; ++i) sum += mode_term(cfg, t, i);
    }
    return cfg.omega_sq * (double)(sum / (long double)total);
}

// ---- Bessel-product route ------------------------------------------------
//
// The regularized point-source kernel, even in xi:
//   D_s(xi) = (Gamma(s+1)/pi) (eps^2 + xi^2)^{-(s+1)/2} cos((s+1) atan(xi/eps))
long double d_kernel(long double s, long double eps, long double xi) {
    const long double gam = tgammal(s + 1.0L);
    const long double r2 = eps * eps + xi * xi;
    const long double theta = atan2l(xi, eps);
    return gam / (long double)M_PIl * powl(r2, -0.5L * (s + 1.0L)) *
           cosl((s + 1.0L) * theta);
}

// i^m as a complex unit
std::complex<long double> unit_power_i(std::int64_t m) {
    switch (((m % 4) + 4) % 4) {
        case 0: return {1.0L, 0.0L};
        case 1: return {0.0L, 1.0L};
        case 2: return {-1.0L, 0.0L};
        default: return {0.0L, -1.0L};
    }
}

struct BesselIntegrand {
    int dim;
    std::vector<std::int64_t> orders; // |p_j|
    long double s;                    // alpha/2
    long double eps;
    std::complex<long double> front;  // (-i)^{sum orders}
    bool order_sum_even;

    // folded integrand: g(xi) + g(-xi) for xi >= 0, using J_m(-x) = (-1)^m J_m(x)
    // and the evenness of D. Tracked as a complex value; the imaginary parts
    // cancel in exact arithmetic, what remains measures accumulated roundoff.
    std::complex<long double> operator()(long double xi) const {
        long double jprod = 1.0L;
        for (int a = 0; a < dim; ++a)
            jprod *= (long double)specfun::bessel_j((int)orders[a], (double)(2.0L * xi));
        const long double common = d_kernel(s, eps, xi) * jprod;
        const long double ph = 2.0L * (long double)dim * xi;
        const std::complex<long double> e_plus(cosl(ph), sinl(ph));
        const std::complex<long double> fwd = front * e_plus;
        const std::complex<long double> bwd =
            (order_sum_even ? front : -front) * std::conj(e_plus);
        return common * (fwd + bwd);
    }
};

// truncation-tail correction: the resonant (non-oscillatory) part of the
// integrand decays like xi^{-(s + n/2 + 1)}; integrating it from X to infinity
// gives a closed form. All other phase combinations oscillate and average out
// one power faster.
long double bessel_tail(int dim, long double s, long double x) {
    const long double ks =
        tgammal(s + 1.0L) * sinl(0.5L * (long double)M_PIl * s) / (long double)M_PIl;
    const long double geom = powl((long double)M_PIl, -0.5L * dim) * powl(2.0L, 1.0L - dim) *
                             cosl(0.25L * (long double)M_PIl * (long double)dim);
    return -ks * geom * powl(x, -(s + 0.5L * dim)) / (s + 0.5L * dim);
}

std::complex<long double> bessel_truncated(const BesselIntegrand& g, long double cutoff,
                                           long double near_tol, bool parallel) {
    const long double near_end = std::min(4.0L, cutoff);
    std::complex<long double> total(0.0L, 0.0L);
    {
        // the eps-spike at the origin needs graded refinement
        const auto re = [&g](long double xi) { return g(xi).real(); };
        const auto im = [&g](long double xi) { return g(xi).imag(); };
        quad::Result rr = quad::adaptive(re, 0.0L, near_end, near_tol);
        quad::Result ri = quad::adaptive(im, 0.0L, near_end, near_tol);
        total += std::complex<long double>(rr.value, ri.value);
    }
    if (cutoff > near_end) {
        // fixed panels matched to the Bessel oscillation: width pi/4 in xi is a
        // half period of the fastest factor cos(2 xi + ...)
        const long double width = 0.25L * (long double)M_PIl;
        const std::int64_t panels =
            (std::int64_t)ceill((cutoff - near_end) / width);
        const long double w = (cutoff - near_end) / (long double)panels;
        auto panel_value = [&](std::int64_t k) {
            const long double a = near_end + w * (long double)k;
            long double vr, er, vi, ei;
            const auto re = [&g](long double xi) { return g(xi).real(); };
            const auto im = [&g](long double xi) { return g(xi).imag(); };
            quad::panel15(re, a, a + w, vr, er);
            quad::panel15(im, a, a + w, vi, ei);
            return std::complex<long double>(vr, vi);
        };
        if (parallel) {
            const int nt = omp_get_max_threads();
            std::vector<std::complex<long double>> partial(nt, {0.0L, 0.0L});
#pragma omp parallel num_threads(nt)
            {
                const int tid = omp_get_thread_num();
                const std::int64_t lo = panels * tid / nt;
                const std::int64_t hi = panels * (tid + 1) / nt;
                std::complex<long double> acc(0.0L, 0.0L);
                for (std::int64_t k = lo; k < hi; ++k) acc += panel_value(k);
                partial[tid] = acc;
            }
            for (int tid = 0; tid < nt; ++tid) total += partial[tid];
        } else {
            for (std::int64_t k = 0; k < panels; ++k) total += panel_value(k);
        }
    }
    return total;
}

double bessel_element_core(const LatticeConfig& cfg, const MultiIndex& p,
                           const BesselRouteOptions& opt, bool parallel) {
    cfg.validate();
    check_index(cfg, p);
    if (cfg.dim > kMaxQuadDim)
        throw ResourceLimit("bessel_integral_element supports dim <= " +
                            std::to_string(kMaxQuadDim));
    if (!(opt.epsilon > 0.0) || !(opt.cutoff > 0.0))
        throw DomainError("bessel_integral_element: epsilon and cutoff must be positive");

    BesselIntegrand g;
    g.dim = cfg.dim;
    g.s = 0.5L * (long double)cfg.alpha;
    std::int64_t order_sum = 0;
    for (int a = 0; a < cfg.dim; ++a) {
        g.orders.push_back(std::llabs(p[a]));
        order_sum += g.orders.back();
    }
    g.front = unit_power_i(-order_sum); // (-i)^M
    g.order_sum_even = (order_sum % 2 == 0);

    // absolute tolerance for the near region, scaled to the band-edge magnitude
    const long double scale = powl(4.0L * (long double)cfg.dim, g.s);
    const long double near_tol = 1e-11L * std::max(1.0L, scale);

    g.eps = (long double)opt.epsilon;
    const std::complex<long double> coarse =
        bessel_truncated(g, (long double)opt.cutoff, near_tol, parallel);
    g.eps = 0.5L * (long double)opt.epsilon;
    const std::complex<long double> fine =
        bessel_truncated(g, (long double)opt.cutoff, near_tol, parallel);

    // Richardson step removes the O(eps) regularization bias, then the
    // eps-independent truncation tail is restored
    std::complex<long double> value = 2.0L * fine - coarse;
    value += bessel_tail(cfg.dim, g.s, (long double)opt.cutoff);

    const long double mag = std::max(1.0L, fabsl(value.real()));
    if (fabsl(value.imag()) > (long double)opt.imag_tol * mag)
        throw ToleranceNotMet("bessel_integral_element: imaginary residual " +
                              std::to_string((double)value.imag()));
    return cfg.omega_sq * (double)value.real();
}

} // namespace

double generator_eigenvalue(const LatticeConfig& cfg, const std::vector<double>& kappa) {
    cfg.validate();
    if ((int)kappa.size() != cfg.dim)
        throw DimensionMismatch("wavevector has " + std::to_string(kappa.size()) +
                                " components, config dim is " + std::to_string(cfg.dim));
    double lam = 0.0;
    for (double k : kappa) {
        const double s = std::sin(0.5 * k);
        lam += 4.0 * s * s;
    }
    return lam;
}

double dispersion_nd(const LatticeConfig& cfg, const std::vector<double>& kappa) {
    const double lam = generator_eigenvalue(cfg, kappa);
    return std::sqrt(cfg.omega_sq) * std::pow(lam, 0.25 * cfg.alpha);
}

double dispersion_nd_normalized(const LatticeConfig& cfg, const std::vector<double>& kappa) {
    const double lam = generator_eigenvalue(cfg, kappa);
    // numerator and denominator share one pow codepath so the band edge at
    // alpha = 2 lands on 1.0 exactly
    return std::pow(lam, 0.25 * cfg.alpha) / std::pow(4.0 * cfg.dim, 0.5);
}

double finite_element_spectral_nd(const LatticeConfig& cfg, const MultiIndex& p) {
    return spectral_sum(cfg, p, true);
}

double ref::finite_element_spectral_nd(const LatticeConfig& cfg, const MultiIndex& p) {
    return spectral_sum(cfg, p, false);
}

std::vector<double> spectral_first_row(const LatticeConfig& cfg) {
    cfg.validate();
    if (cfg.infinite())
        throw DomainError("spectral_first_row: config describes the infinite lattice");
    const std::int64_t total = cfg.total_sites();
    if (total > cfg.site_cap)
        throw ResourceLimit("lattice has " + std::to_string(total) + " sites, cap is " +
                            std::to_string(cfg.site_cap));
    std::vector<double> symbol(total);
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < total; ++i) {
        std::int64_t rest = i;
        double lam = 0.0;
        for (int a = cfg.dim - 1; a >= 0; --a) {
            const std::int64_t la = rest % cfg.sizes[a];
            rest /= cfg.sizes[a];
            const double s = std::sin(M_PI * (double)la / (double)cfg.sizes[a]);
            lam += 4.0 * s * s;
        }
        symbol[i] = (lam == 0.0) ? 0.0 : std::pow(lam, 0.5 * cfg.alpha);
    }
    std::vector<double> row = transforms::real_even_dft(symbol, cfg.sizes);
    const double norm = cfg.omega_sq / (double)total;
    for (double& v : row) v *= norm;
    return row;
}

double infinite_element_nd(const LatticeConfig& cfg, const MultiIndex& p, double rel_tol) {
    cfg.validate();
    if (!cfg.infinite())
        throw DomainError("infinite_element_nd: config describes a finite lattice");
    check_index(cfg, p);
    if (cfg.dim > kMaxQuadDim)
        throw ResourceLimit("infinite_element_nd supports dim <= " +
                            std::to_string(kMaxQuadDim));
    const int n = cfg.dim;
    const long double half_alpha = 0.5L * (long double)cfg.alpha;
    std::vector<long double> kap(n, 0.0L);

    // nested adaptive quadrature over [0, pi]^n; tolerance budget halves and
    // tightens by a factor pi with each nesting level
    std::function<long double(int, long double)> level = [&](int d, long double abs_tol)
        -> long double {
        const auto f = [&, d, abs_tol](long double x) -> long double {
            kap[d] = x;
            if (d + 1 == n) {
                long double lam = 0.0L;
                long double c = 1.0L;
                for (int a = 0; a < n; ++a) {
                    const long double sh = sinl(0.5L * kap[a]);
                    lam += 4.0L * sh * sh;
                    c *= cosl((long double)p[a] * kap[a]);
                }
                return (lam == 0.0L) ? 0.0L : c * powl(lam, half_alpha);
            }
            return level(d + 1, abs_tol / (2.0L * (long double)M_PIl));
        };
        return quad::adaptive(f, 0.0L, (long double)M_PIl, abs_tol).value;
    };

    const long double scale = powl(4.0L * (long double)n, half_alpha);
    // coarse estimate fixes the absolute budget for the refinement pass
    const long double coarse = level(0, 1e-4L * scale);
    const long double budget =
        std::max((long double)rel_tol * std::max(fabsl(coarse), 1e-10L * scale),
                 1e-16L * scale);
    const long double fine = level(0, budget);
    const long double inv_pi_n = powl((long double)M_PIl, -(long double)n);
    return cfg.omega_sq * (double)(fine * inv_pi_n);
}

double bessel_integral_element(const LatticeConfig& cfg, const MultiIndex& p,
                               const BesselRouteOptions& opt) {
    return bessel_element_core(cfg, p, opt, true);
}

double ref::bessel_integral_element(const LatticeConfig& cfg, const MultiIndex& p,
                                    const BesselRouteOptions& opt) {
    return bessel_element_core(cfg, p, opt, false);
}

double riesz_constant(int dim, double alpha) {
    if (dim < 1) throw DomainError("riesz_constant: dim must be >= 1");
    if (!(alpha > 0.0 && alpha < 2.0))
        throw DomainError("riesz_constant: alpha must lie in (0, 2), got " +
                          std::to_string(alpha));
    const double log_c = (alpha - 1.0) * std::log(2.0) + std::log(alpha) +
                         std::lgamma(0.5 * (alpha + (double)dim)) -
                         0.5 * (double)dim * std::log(M_PI) -
                         std::lgamma(1.0 - 0.5 * alpha);
    return std::exp(log_c);
}

double asymptotic_element_nd(const LatticeConfig& cfg, const MultiIndex& p) {
    cfg.validate();
    check_index(cfg, p);
    long double r2 = 0.0L;
    for (auto v : p) r2 += (long double)v * (long double)v;
    if (r2 == 0.0L) throw DomainError("asymptotic_element_nd: p must be nonzero");
    const double c = riesz_constant(cfg.dim, cfg.alpha);
    const double r = std::sqrt((double)r2);
    return -cfg.omega_sq * c * std::pow(r, -(double)cfg.dim - cfg.alpha);
}

SymToeplitz assemble_matrix_nd(const LatticeConfig& cfg, Convention convention) {
    cfg.validate();
    if (cfg.infinite())
        throw DomainError("assemble_matrix_nd: infinite lattice has no materialized matrix");
    SymToeplitz m;
    m.dims = cfg.sizes;
    m.convention = convention;
    m.scale = (convention == Convention::LaplacianNsd) ? -cfg.mass * cfg.omega_sq
                                                       : cfg.omega_sq;
    const double sign = (convention == Convention::LaplacianNsd) ? -cfg.mass : 1.0;
    m.first_row = spectral_first_row(cfg);
    long double rs = 0.0L;
    for (double& v : m.first_row) {
        v *= sign;
        rs += v;
    }
    m.row_sum = (double)rs;
    return m;
}

} // namespace fraclat::lattice
