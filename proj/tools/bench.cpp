// Benchmark of the OpenMP kernels against their serial reference
// implementations. Prints one table row per kernel with both timings and the
// worst relative deviation between the two results, which must sit at rounding
// level. --quick shrinks the problem sizes so the suite can run it as a smoke
// test.

#include <omp.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <string>
#include <vector>

#include "fraclat/chain1d.hpp"
#include "fraclat/lattice_nd.hpp"

using namespace fraclat;

namespace {

template <class F>
double timed(F&& f) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    const auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(t1 - t0).count();
}

double rel_dev(double a, double b) {
    return std::fabs(a - b) / std::max(1.0, std::fabs(b));
}

void report(const char* name, double t_par, double t_ser, double dev) {
    std::printf("%-28s %10.4fs %10.4fs %8.2fx   max rel dev %.3e\n", name, t_par, t_ser,
                t_ser / std::max(t_par, 1e-12), dev);
}

} // namespace

int main(int argc, char** argv) {
    bool quick = false;
    for (int i = 1; i < argc; ++i)
        if (std::strcmp(argv[i], "--quick") == 0) quick = true;

    std::printf("threads: %d\n", omp_get_max_threads());
    std::printf("%-28s %11s %11s %9s\n", "kernel", "parallel", "serial", "speedup");

    {
        ChainConfig cfg;
        cfg.size = quick ? 2048 : 16384;
        cfg.alpha = 1.5;
        const std::int64_t n = *cfg.size;
        std::vector<double> par(8), ser(8);
        const double tp = timed([&] {
            for (int i = 0; i < 8; ++i) par[i] = chain::finite_element_spectral(cfg, i * n / 8);
        });
        const double ts = timed([&] {
            for (int i = 0; i < 8; ++i)
                ser[i] = chain::ref::finite_element_spectral(cfg, i * n / 8);
        });
        double dev = 0.0;
        for (int i = 0; i < 8; ++i) dev = std::max(dev, rel_dev(par[i], ser[i]));
        report("1D spectral element", tp, ts, dev);
    }

    {
        LatticeConfig cfg;
        cfg.dim = 2;
        const std::int64_t n = quick ? 128 : 512;
        cfg.sizes = {n, n};
        cfg.alpha = 1.0;
        double par = 0.0, ser = 0.0;
        const double tp =
            timed([&] { par = lattice::finite_element_spectral_nd(cfg, {n / 3, n / 5}); });
        const double ts =
            timed([&] { ser = lattice::ref::finite_element_spectral_nd(cfg, {n / 3, n / 5}); });
        report("2D spectral element", tp, ts, rel_dev(par, ser));
    }

    {
        LatticeConfig cfg;
        cfg.dim = 2;
        cfg.alpha = 1.5;
        lattice::BesselRouteOptions opt;
        if (quick) opt.cutoff = 200.0;
        double par = 0.0, ser = 0.0;
        const double tp = timed([&] { par = lattice::bessel_integral_element(cfg, {2, 1}, opt); });
        const double ts =
            timed([&] { ser = lattice::ref::bessel_integral_element(cfg, {2, 1}, opt); });
        report("Bessel-integral element", tp, ts, rel_dev(par, ser));
    }

    {
        ChainConfig cfg;
        cfg.size = quick ? 512 : 2048;
        cfg.alpha = 1.5;
        const std::int64_t n = *cfg.size;
        std::vector<std::complex<double>> u(n);
        for (std::int64_t p = 0; p < n; ++p)
            u[p] = {std::cos(2.0 * M_PI * 3.0 * (double)p / (double)n),
                    std::sin(2.0 * M_PI * 3.0 * (double)p / (double)n)};
        double par = 0.0, ser = 0.0;
        const double tp = timed([&] { par = chain::elastic_potential(cfg, u); });
        const double ts = timed([&] { ser = chain::ref::elastic_potential(cfg, u); });
        report("1D elastic potential", tp, ts, rel_dev(par, ser));
    }

    return 0;
}
