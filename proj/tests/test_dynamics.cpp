#include <cmath>
#include <complex>
#include <cstring>
#include <random>
#include <vector>

#include "doctest.h"
#include "fraclat/chain1d.hpp"
#include "fraclat/dynamics.hpp"
#include "fraclat/errors.hpp"
#include "fraclat/toeplitz.hpp"

using namespace fraclat;
using cplx = std::complex<double>;

namespace {

dynamics::FieldState ring_state(std::int64_t n, double alpha) {
    dynamics::FieldState st;
    st.config.dim = 1;
    st.config.sizes = {n};
    st.config.alpha = alpha;
    st.values.assign(n, cplx{0.0, 0.0});
    return st;
}

dynamics::FieldState bloch_state(std::int64_t n, double alpha, std::int64_t mode) {
    dynamics::FieldState st = ring_state(n, alpha);
    for (std::int64_t p = 0; p < n; ++p)
        st.values[p] = std::exp(cplx(0.0, 2.0 * M_PI * (double)mode * (double)p / (double)n));
    return st;
}

double mode_lambda_pow(const LatticeConfig& cfg, double kappa) {
    return std::pow(4.0 * std::pow(std::sin(0.5 * kappa), 2), 0.5 * cfg.alpha);
}

} // namespace

TEST_CASE("constant fields are annihilated") {
    dynamics::FieldState st = ring_state(20, 1.3);
    for (auto& v : st.values) v = {2.5, -1.0};
    for (const cplx& r : dynamics::apply_laplacian(st)) CHECK(std::abs(r) <= 1e-12);
}

TEST_CASE("Bloch modes are eigenvectors") {
    const std::int64_t n = 32;
    dynamics::FieldState st = bloch_state(n, 1.6, 7);
    st.config.omega_sq = 1.8;
    st.config.mass = 0.7;
    const double lam = mode_lambda_pow(st.config, 2.0 * M_PI * 7.0 / (double)n);
    const auto lap = dynamics::apply_laplacian(st, Convention::LaplacianNsd);
    const auto chr = dynamics::apply_laplacian(st, Convention::CharacteristicPsd);
    for (std::int64_t p = 0; p < n; ++p) {
        const cplx expect_lap = -0.7 * 1.8 * lam * st.values[p];
        const cplx expect_chr = 1.8 * lam * st.values[p];
        CHECK(std::abs(lap[p] - expect_lap) <= 1e-12 * std::abs(expect_lap));
        CHECK(std::abs(chr[p] - expect_chr) <= 1e-12 * std::abs(expect_chr));
    }
}

TEST_CASE("alpha = 2 reduces to the classical three-point stencil") {
    const std::int64_t n = 17;
    dynamics::FieldState st = ring_state(n, 2.0);
    std::mt19937 rng(404);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (auto& v : st.values) v = {u(rng), u(rng)};
    const auto r = dynamics::apply_laplacian(st, Convention::LaplacianNsd);
    for (std::int64_t p = 0; p < n; ++p) {
        const cplx stencil = -(2.0 * st.values[p] - st.values[(p + n - 1) % n] -
                               st.values[(p + 1) % n]);
        CHECK(std::abs(r[p] - stencil) <= 1e-13);
    }
}

TEST_CASE("spectral application matches the dense matrix") {
    const std::int64_t n = 24;
    ChainConfig cc;
    cc.size = n;
    cc.alpha = 1.7;
    const SymToeplitz m = chain::assemble_matrix(cc, Convention::LaplacianNsd);

    dynamics::FieldState st = ring_state(n, 1.7);
    std::mt19937 rng(77);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (auto& v : st.values) v = {u(rng), u(rng)};

    const auto dense = m.matvec(st.values);
    const auto spectral = dynamics::apply_laplacian(st, Convention::LaplacianNsd);
    for (std::int64_t p = 0; p < n; ++p)
        CHECK(std::abs(dense[p] - spectral[p]) <= 1e-10);
}

TEST_CASE("uniform fields do not evolve") {
    dynamics::FieldState st = ring_state(16, 0.9);
    for (auto& v : st.values) v = {3.0, 0.5};
    const auto out = dynamics::evolve_diffusion(st, 3.0);
    CHECK(out.time == doctest::Approx(3.0));
    for (std::int64_t p = 0; p < 16; ++p)
        CHECK(std::abs(out.values[p] - st.values[p]) <= 1e-14);
}

TEST_CASE("Bloch decay rate equals the dispersion") {
    const std::int64_t n = 64;
    dynamics::FieldState st = bloch_state(n, 1.0, 5);
    const double c = 0.35, t = 2.0;
    const double rate = mode_lambda_pow(st.config, 2.0 * M_PI * 5.0 / (double)n);
    const auto out = dynamics::evolve_diffusion(st, t, c);
    const double expect = std::exp(-c * rate * t);
    for (std::int64_t p = 0; p < n; ++p)
        CHECK(std::abs(out.values[p] - expect * st.values[p]) <= 1e-10 * expect);
}

TEST_CASE("evolution is a semigroup") {
    const std::int64_t n = 40;
    dynamics::FieldState st = ring_state(n, 1.0);
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (auto& v : st.values) v = {u(rng), u(rng)};
    const auto two_steps = dynamics::evolve_diffusion(dynamics::evolve_diffusion(st, 0.9), 1.3);
    const auto one_step = dynamics::evolve_diffusion(st, 2.2);
    for (std::int64_t p = 0; p < n; ++p)
        CHECK(std::abs(two_steps.values[p] - one_step.values[p]) <= 1e-11);
    CHECK(two_steps.time == doctest::Approx(one_step.time).epsilon(1e-15));
}

TEST_CASE("mass is conserved under diffusion") {
    const std::int64_t n = 48;
    dynamics::FieldState st = ring_state(n, 0.75);
    st.values[3] = {1.0, 0.0};
    st.values[20] = {0.0, -2.0};
    const cplx m0 = dynamics::total_mass(st);
    for (double t : {0.5, 10.0, 100.0}) {
        const cplx mt = dynamics::total_mass(dynamics::evolve_diffusion(st, t));
        CHECK(std::abs(mt - m0) <= 1e-12);
    }
}

TEST_CASE("zero-duration evolution is the identity, bit for bit") {
    dynamics::FieldState st = ring_state(10, 1.1);
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (auto& v : st.values) v = {u(rng), u(rng)};
    const auto out = dynamics::evolve_diffusion(st, 0.0);
    REQUIRE(out.values.size() == st.values.size());
    CHECK(std::memcmp(out.values.data(), st.values.data(),
                      st.values.size() * sizeof(cplx)) == 0);
    CHECK(out.time == st.time);
}

TEST_CASE("normal mode frequencies of the classical ring") {
    ChainConfig cc;
    cc.size = 4;
    cc.alpha = 2.0;
    const auto w = dynamics::normal_mode_frequencies(cc);
    REQUIRE(w.size() == 4);
    CHECK(w[0] == 0.0);
    CHECK(w[1] == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
    CHECK(w[2] == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
    CHECK(w[3] == doctest::Approx(2.0).epsilon(1e-15));
    for (std::size_t i = 1; i < w.size(); ++i) CHECK(w[i] >= w[i - 1]);
}

TEST_CASE("guards") {
    dynamics::FieldState st = ring_state(8, 1.0);
    CHECK_THROWS_AS(dynamics::evolve_diffusion(st, -1.0), DomainError);
    st.values.resize(7);
    CHECK_THROWS_AS(st.validate(), DimensionMismatch);
    CHECK_THROWS_AS(dynamics::apply_laplacian(st), DimensionMismatch);
}
