// Acceptance suite: one self-contained check per shipping criterion, each
// printed as a single [PASS]/[FAIL] line. Exit code is the number of failures.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fraclat/chain1d.hpp"
#include "fraclat/continuum.hpp"
#include "fraclat/dynamics.hpp"
#include "fraclat/lattice_nd.hpp"
#include "fraclat/transforms.hpp"

using namespace fraclat;
using cplx = std::complex<double>;
using clock_type = std::chrono::steady_clock;

namespace {

int failures = 0;

double seconds_since(clock_type::time_point t0) {
    return std::chrono::duration<double>(clock_type::now() - t0).count();
}

void report(int id, const char* label, bool ok, const std::string& detail) {
    std::printf("[%s] criterion %2d: %-38s %s\n", ok ? "PASS" : "FAIL", id, label,
                detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
}

std::string fmt_rel(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.3e", v);
    return buf;
}

std::string fmt_time(double s) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.2fs", s);
    return buf;
}

ChainConfig ring(std::int64_t n, double alpha) {
    ChainConfig c;
    c.size = n;
    c.alpha = alpha;
    return c;
}

ChainConfig open_chain(double alpha) {
    ChainConfig c;
    c.alpha = alpha;
    return c;
}

LatticeConfig grid2(std::int64_t n, double alpha) {
    LatticeConfig c;
    c.dim = 2;
    c.sizes = {n, n};
    c.alpha = alpha;
    return c;
}

// --- 1: classical ring comes out bit-exact and instantly ---------------------

void criterion_1() {
    const auto t0 = clock_type::now();
    const ChainConfig cfg = ring(4, 2.0);
    double row[4];
    for (std::int64_t p = 0; p < 4; ++p) row[p] = chain::finite_element_periodized(cfg, p);
    const double expect[4] = {2.0, -1.0, 0.0, -1.0};
    const double dt = seconds_since(t0);
    const bool bits_ok = std::memcmp(row, expect, sizeof row) == 0;
    const bool time_ok = dt < 1.0;
    std::ostringstream os;
    os << "row {" << row[0] << "," << row[1] << "," << row[2] << "," << row[3]
       << "} bitwise " << (bits_ok ? "==" : "!=") << " {2,-1,0,-1}, " << fmt_time(dt);
    report(1, "exact classical ring row", bits_ok && time_ok, os.str());
}

// --- 2: periodized and spectral routes agree on rings ------------------------

void criterion_2() {
    const auto t0 = clock_type::now();
    double worst = 0.0;
    for (double alpha : {0.5, 1.0, 1.5, 2.0, 2.5, 3.0, 4.0})
        for (std::int64_t n : {4, 8, 16, 64}) {
            const ChainConfig cfg = ring(n, alpha);
            for (std::int64_t p = 0; p < n; ++p) {
                const double a = chain::finite_element_periodized(cfg, p);
                const double b = chain::finite_element_spectral(cfg, p);
                worst = std::max(worst, std::fabs(a - b) / std::max(1.0, std::fabs(b)));
            }
        }
    const double dt = seconds_since(t0);
    const bool ok = worst <= 1e-9 && dt < 10.0;
    report(2, "periodized vs spectral rings",
           ok, "max rel dev " + fmt_rel(worst) + " (tol 1e-9), " + fmt_time(dt));
}

// --- 3: closed form vs Brillouin-zone quadrature ------------------------------

void criterion_3() {
    const auto t0 = clock_type::now();
    double worst = 0.0;
    for (double alpha : {0.5, 1.0, 1.5, 2.5, 3.0}) {
        const ChainConfig cfg = open_chain(alpha);
        for (std::int64_t p = 0; p <= 50; ++p) {
            const double closed = chain::infinite_element(cfg, p);
            const double quad = chain::infinite_element_quadrature(cfg, p);
            worst = std::max(worst, std::fabs(quad - closed) / std::fabs(closed));
        }
    }
    const double dt = seconds_since(t0);
    const bool ok = worst <= 1e-10 && dt < 30.0;
    report(3, "closed form vs zone quadrature",
           ok, "max rel dev " + fmt_rel(worst) + " (tol 1e-10), " + fmt_time(dt));
}

// --- 4: assembled matrices annihilate constants -------------------------------

void criterion_4() {
    double worst = 0.0;
    for (double alpha : {0.5, 1.5, 2.5}) {
        const auto m =
            chain::assemble_matrix(ring(64, alpha), Convention::CharacteristicPsd);
        worst = std::max(worst, std::fabs(m.row_sum));
    }
    const auto m2 = lattice::assemble_matrix_nd(grid2(32, 1.3), Convention::CharacteristicPsd);
    worst = std::max(worst, std::fabs(m2.row_sum));
    report(4, "row sums vanish", worst <= 1e-12,
           "max |row sum| " + fmt_rel(worst) + " (tol 1e-12)");
}

// --- 5: power-law decay of the infinite-chain elements -------------------------

void criterion_5() {
    bool ok = true;
    std::ostringstream os;
    os << "f_200/asymptote =";
    for (double alpha : {0.5, 1.0, 1.5}) {
        const ChainConfig cfg = open_chain(alpha);
        const double ratio =
            chain::infinite_element(cfg, 200) / chain::asymptotic_element(cfg, 200);
        ok = ok && ratio >= 0.99 && ratio <= 1.01;
        char buf[32];
        std::snprintf(buf, sizeof buf, " %.6f", ratio);
        os << buf;
    }
    os << " (window [0.99, 1.01])";
    report(5, "large-distance asymptote", ok, os.str());
}

// --- 6: periodic kernel, closed zeta form vs direct image sum ------------------

void criterion_6() {
    double worst = 0.0;
    for (double alpha : {0.25, 0.5, 1.0, 1.5, 1.75})
        for (int i = 1; i <= 9; ++i) {
            const double xi = 0.1 * i;
            const double z = continuum::periodic_kernel_zeta(alpha, 1.0, xi);
            const auto d = continuum::periodic_kernel_direct(alpha, 1.0, xi, 200000);
            worst = std::max(worst, std::fabs(d.value - z) / std::fabs(z));
        }
    report(6, "periodic kernel, zeta vs direct", worst <= 1e-8,
           "max rel dev " + fmt_rel(worst) + " (tol 1e-8)");
}

// --- 7: scaled lattice elements converge to the Riesz kernel -------------------

void criterion_7() {
    const std::vector<double> hs{1.0 / 16, 1.0 / 64, 1.0 / 256};
    bool ok = true;
    double final_worst = 0.0;
    for (double alpha : {0.5, 1.0, 1.5}) {
        const auto rep = continuum::continuum_limit_check(alpha, 1.0, hs);
        ok = ok && rep.monotone && rep.final_deviation < 0.02;
        final_worst = std::max(final_worst, rep.final_deviation);
    }
    report(7, "continuum limit at x = 1", ok,
           "deviation decreases monotonically, final " + fmt_rel(final_worst) +
               " (< 2e-2)");
}

// --- 8: 2D decay constant on a large grid --------------------------------------

void criterion_8() {
    const auto t0 = clock_type::now();
    LatticeConfig cfg = grid2(1024, 1.0);
    const double f = lattice::finite_element_spectral_nd(cfg, {30, 0});
    const double target = -lattice::riesz_constant(2, 1.0) * std::pow(30.0, -3.0);
    const double rel = std::fabs(f - target) / std::fabs(target);
    const double dt = seconds_since(t0);
    const bool ok = rel <= 0.05 && dt < 120.0;
    report(8, "2D decay constant, 1024^2 grid", ok,
           "rel dev " + fmt_rel(rel) + " from -C_{2,1}/30^3 (tol 5e-2), " + fmt_time(dt));
}

// --- 9: regularized Bessel-integral route ---------------------------------------

void criterion_9() {
    double worst = 0.0;
    for (double alpha : {0.5, 1.0, 1.5}) {
        const LatticeConfig c1{1, {}, alpha};
        const ChainConfig cref = open_chain(alpha);
        for (std::int64_t p = 0; p <= 4; ++p) {
            const double b = lattice::bessel_integral_element(c1, {p});
            const double r = chain::infinite_element_quadrature(cref, p);
            worst = std::max(worst, std::fabs(b - r) / std::fabs(r));
        }
        const LatticeConfig c2{2, {}, alpha};
        for (std::int64_t p1 = 0; p1 <= 4; ++p1)
            for (std::int64_t p2 = 0; p2 <= p1; ++p2) {
                const double b = lattice::bessel_integral_element(c2, {p1, p2});
                const double r = lattice::infinite_element_nd(c2, {p1, p2}, 1e-6);
                worst = std::max(worst, std::fabs(b - r) / std::fabs(r));
            }
    }
    report(9, "Bessel-integral route", worst <= 1e-3,
           "max rel dev " + fmt_rel(worst) + " vs quadrature (tol 1e-3)");
}

// --- 10: normalized dispersion at the 2D band edge ------------------------------

void criterion_10() {
    const std::vector<double> edge{M_PI, M_PI};
    const double at2 = lattice::dispersion_nd_normalized(grid2(8, 2.0), edge);
    bool ok = (at2 == 1.0);
    double prev = at2;
    std::ostringstream os;
    os << "value(alpha=2) = " << at2 << ", sequence";
    for (double alpha : {1.5, 1.0, 0.5}) {
        const double v = lattice::dispersion_nd_normalized(grid2(8, alpha), edge);
        ok = ok && v < prev;
        char buf[32];
        std::snprintf(buf, sizeof buf, " %.4f", v);
        os << buf;
        prev = v;
    }
    os << " strictly decreasing";
    report(10, "normalized band edge", ok, os.str());
}

// --- 11: diffusion dynamics ------------------------------------------------------

void criterion_11() {
    const std::int64_t n = 64;
    bool ok = true;
    std::ostringstream os;

    dynamics::FieldState st;
    st.config.dim = 1;
    st.config.sizes = {n};
    st.config.alpha = 1.0;
    st.values.assign(n, {0.0, 0.0});
    std::mt19937 rng(2016);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (auto& v : st.values) v = {u(rng), u(rng)};

    // mass conservation across two decades of time
    const cplx m0 = dynamics::total_mass(st);
    double mass_dev = 0.0;
    for (double t : {0.1, 1.0, 10.0, 100.0})
        mass_dev = std::max(mass_dev,
                            std::abs(dynamics::total_mass(dynamics::evolve_diffusion(st, t)) - m0));
    ok = ok && mass_dev <= 1e-12;

    // a Bloch mode decays at exactly the dispersion rate
    dynamics::FieldState bloch = st;
    for (std::int64_t p = 0; p < n; ++p)
        bloch.values[p] = std::exp(cplx(0.0, 2.0 * M_PI * 5.0 * (double)p / (double)n));
    const double lam = std::pow(4.0 * std::pow(std::sin(M_PI * 5.0 / (double)n), 2), 0.5);
    const double c = 0.7, t = 3.0;
    const auto evolved = dynamics::evolve_diffusion(bloch, t, c);
    const double expect = std::exp(-c * lam * t);
    double decay_dev = 0.0;
    for (std::int64_t p = 0; p < n; ++p)
        decay_dev = std::max(decay_dev,
                             std::abs(evolved.values[p] - expect * bloch.values[p]) / expect);
    ok = ok && decay_dev <= 1e-10;

    // the propagator composes as a semigroup
    const auto two = dynamics::evolve_diffusion(dynamics::evolve_diffusion(st, 0.9), 1.3);
    const auto one = dynamics::evolve_diffusion(st, 2.2);
    double semi_dev = 0.0;
    for (std::int64_t p = 0; p < n; ++p)
        semi_dev = std::max(semi_dev, std::abs(two.values[p] - one.values[p]));
    ok = ok && semi_dev <= 1e-11;

    os << "mass dev " << fmt_rel(mass_dev) << " (tol 1e-12), Bloch decay dev "
       << fmt_rel(decay_dev) << " (tol 1e-10), semigroup dev " << fmt_rel(semi_dev)
       << " (tol 1e-11)";
    report(11, "diffusion dynamics", ok, os.str());
}

// --- 12: structural properties, exhaustively over small rings --------------------

void criterion_12() {
    bool ok = true;
    std::ostringstream os;

    // positive semidefinite with exactly one zero mode, symmetric first row
    double worst_neg = 0.0;
    bool zero_mode_ok = true, sym_ok = true;
    for (std::int64_t n = 3; n <= 64; ++n)
        for (double alpha : {0.5, 1.5, 2.0, 3.7}) {
            const auto m =
                chain::assemble_matrix(ring(n, alpha), Convention::CharacteristicPsd);
            for (std::int64_t p = 1; p < n; ++p)
                if (std::fabs(m.first_row[p] - m.first_row[n - p]) >
                    1e-15 * std::max(1.0, std::fabs(m.first_row[p])))
                    sym_ok = false;
            const auto eigs = transforms::real_even_dft(m.first_row, {n});
            double emax = 0.0;
            for (double e : eigs) emax = std::max(emax, std::fabs(e));
            int zero_modes = 0;
            for (double e : eigs) {
                if (e < 0.0) worst_neg = std::max(worst_neg, -e / emax);
                if (std::fabs(e) <= 1e-10 * emax) ++zero_modes;
            }
            if (zero_modes != 1) zero_mode_ok = false;
        }
    ok = ok && worst_neg <= 1e-12 && zero_mode_ok && sym_ok;

    // cubic symmetry of the 2D block row
    const LatticeConfig c2 = grid2(8, 1.4);
    bool cubic_ok = true;
    for (std::int64_t p1 = 0; p1 < 8 && cubic_ok; ++p1)
        for (std::int64_t p2 = 0; p2 < 8 && cubic_ok; ++p2) {
            const double v = lattice::finite_element_spectral_nd(c2, {p1, p2});
            const double vt = lattice::finite_element_spectral_nd(c2, {p2, p1});
            const double vr =
                lattice::finite_element_spectral_nd(c2, {(8 - p1) % 8, p2});
            if (std::fabs(v - vt) > 1e-14 * std::max(1.0, std::fabs(v)) ||
                std::fabs(v - vr) > 1e-14 * std::max(1.0, std::fabs(v)))
                cubic_ok = false;
        }
    ok = ok && cubic_ok;

    // sign structure: positive diagonal, negative off-diagonal for 0 < alpha < 2
    bool sign_ok = true;
    for (double alpha : {0.5, 1.0, 1.5}) {
        const ChainConfig cfg = ring(64, alpha);
        if (!(chain::finite_element_periodized(cfg, 0) > 0.0)) sign_ok = false;
        for (std::int64_t p = 1; p < 64; ++p)
            if (!(chain::finite_element_periodized(cfg, p) < 0.0)) sign_ok = false;
    }
    ok = ok && sign_ok;

    // even integer alpha truncates to the binomial stencil, exactly
    bool trunc_ok = true;
    for (double alpha : {2.0, 4.0, 6.0}) {
        const ChainConfig cfg = open_chain(alpha);
        const std::int64_t half = (std::int64_t)std::llround(0.5 * alpha);
        for (std::int64_t p = half + 1; p <= half + 10; ++p)
            if (chain::infinite_element(cfg, p) != 0.0) trunc_ok = false;
    }
    ok = ok && trunc_ok;

    // dispersion increases monotonically across the half zone
    bool disp_ok = true;
    for (double alpha : {0.5, 2.0, 3.7}) {
        const ChainConfig cfg = ring(8, alpha);
        double prev = -1.0;
        for (int i = 0; i <= 100; ++i) {
            const double w = chain::dispersion(cfg, M_PI * (double)i / 100.0);
            if (w <= prev) disp_ok = false;
            prev = w;
        }
    }
    ok = ok && disp_ok;

    os << "PSD (worst neg eig " << fmt_rel(worst_neg) << " rel), single zero mode "
       << (zero_mode_ok ? "yes" : "NO") << ", row symmetry " << (sym_ok ? "yes" : "NO")
       << ", cubic symmetry " << (cubic_ok ? "yes" : "NO") << ", signs "
       << (sign_ok ? "yes" : "NO") << ", binomial truncation "
       << (trunc_ok ? "yes" : "NO") << ", dispersion monotone "
       << (disp_ok ? "yes" : "NO");
    report(12, "structural property sweep", ok, os.str());
}

} // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    criterion_11();
    criterion_12();
    if (failures == 0)
        std::printf("all 12 criteria passed\n");
    else
        std::printf("%d criteria FAILED\n", failures);
    return failures;
}
