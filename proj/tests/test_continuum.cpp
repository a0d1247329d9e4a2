#include <cmath>
#include <vector>

#include "doctest.h"
#include "fraclat/continuum.hpp"
#include "fraclat/errors.hpp"

using namespace fraclat;

TEST_CASE("infinite-line kernel values and symmetry") {
    // alpha = 1: K(x) = 1/(pi x^2), so K(1) = 1/pi
    CHECK(continuum::riesz_kernel_infinite(1.0, 1.0) ==
          doctest::Approx(M_1_PI).epsilon(1e-15));
    CHECK(continuum::riesz_kernel_infinite(1.0, 0.5) ==
          doctest::Approx(4.0 / M_PI).epsilon(1e-15));
    CHECK(continuum::riesz_kernel_infinite(0.7, -1.3) ==
          continuum::riesz_kernel_infinite(0.7, 1.3));
    CHECK_THROWS_AS(continuum::riesz_kernel_infinite(1.0, 0.0), SingularityError);
    CHECK_THROWS_AS(continuum::riesz_kernel_infinite(0.0, 1.0), DomainError);
    CHECK_THROWS_AS(continuum::riesz_kernel_infinite(2.0, 1.0), DomainError);
    CHECK_THROWS_AS(continuum::riesz_kernel_infinite(4.0, 1.0), DomainError);
}

TEST_CASE("periodic kernel: periodicity and reflection") {
    const double L = 3.0;
    for (double alpha : {0.5, 1.25}) {
        const double base = continuum::periodic_kernel_zeta(alpha, L, 0.7);
        CHECK(continuum::periodic_kernel_zeta(alpha, L, 0.7 + L) ==
              doctest::Approx(base).epsilon(1e-12));
        CHECK(continuum::periodic_kernel_zeta(alpha, L, 0.7 - 2.0 * L) ==
              doctest::Approx(base).epsilon(1e-12));
        CHECK(continuum::periodic_kernel_zeta(alpha, L, L - 0.7) ==
              doctest::Approx(base).epsilon(1e-12));
        CHECK(continuum::periodic_kernel_zeta(alpha, L, -0.7) ==
              doctest::Approx(base).epsilon(1e-12));
    }
    CHECK_THROWS_AS(continuum::periodic_kernel_zeta(1.0, 3.0, 6.0), SingularityError);
}

TEST_CASE("zeta and direct image sums agree") {
    for (double alpha : {0.25, 0.5, 1.0, 1.5, 1.75})
        for (double xi : {0.1, 0.3, 0.5, 0.7, 0.9}) {
            const double z = continuum::periodic_kernel_zeta(alpha, 1.0, xi);
            const auto d = continuum::periodic_kernel_direct(alpha, 1.0, xi, 200000);
            CHECK(d.value == doctest::Approx(z).epsilon(1e-8));
        }
}

TEST_CASE("direct-route tail bound is honest") {
    for (double alpha : {0.3, 1.1})
        for (double xi : {0.2, 0.6}) {
            const double z = continuum::periodic_kernel_zeta(alpha, 1.0, xi);
            const auto d = continuum::periodic_kernel_direct(alpha, 1.0, xi, 50);
            CHECK(std::fabs(d.value - z) <= d.tail_bound + 1e-12 * std::fabs(z));
            CHECK(d.tail_bound > 0.0);
        }
}

TEST_CASE("periodic kernel is positive and decreasing toward the cell midpoint") {
    double prev = INFINITY;
    for (double xi : {0.05, 0.1, 0.2, 0.3, 0.4, 0.5}) {
        const double v = continuum::periodic_kernel_zeta(0.8, 1.0, xi);
        CHECK(v > 0.0);
        CHECK(v < prev);
        prev = v;
    }
}

TEST_CASE("periodic kernel approaches the infinite-line kernel as L grows") {
    const double x = 0.4;
    const double inf = continuum::riesz_kernel_infinite(1.2, x);
    const double dev10 = std::fabs(continuum::periodic_kernel_zeta(1.2, 10.0, x) - inf);
    const double dev100 = std::fabs(continuum::periodic_kernel_zeta(1.2, 100.0, x) - inf);
    CHECK(dev100 < dev10);
    CHECK(dev100 <= 1e-3 * inf);
}

TEST_CASE("lattice-constant scaling") {
    const auto s = continuum::scaling(1.5, 0.25, 2.0, 3.0);
    CHECK(s.omega_sq == doctest::Approx(2.0 * std::pow(0.25, -1.5)).epsilon(1e-15));
    CHECK(s.mu == doctest::Approx(0.75).epsilon(1e-15));
    CHECK_THROWS_AS(continuum::scaling(1.5, 0.0, 1.0, 1.0), DomainError);
    CHECK_THROWS_AS(continuum::scaling(1.5, -0.1, 1.0, 1.0), DomainError);
}

TEST_CASE("scaled lattice elements converge to the kernel") {
    const std::vector<double> hs{1.0 / 16, 1.0 / 64, 1.0 / 256};
    const auto rep = continuum::continuum_limit_check(0.5, 1.0, hs);
    REQUIRE(rep.steps.size() == 3);
    CHECK(rep.monotone);
    CHECK(rep.final_deviation < 0.02);
    for (const auto& st : rep.steps) {
        CHECK(st.on_grid);
        CHECK(st.rel_deviation >= 0.0);
        CHECK(std::isfinite(st.rel_deviation));
    }
    // off-grid abscissa is flagged, not hidden
    const auto off = continuum::continuum_limit_check(0.5, 0.97, {1.0 / 16});
    CHECK_FALSE(off.steps[0].on_grid);

    CHECK_THROWS_AS(continuum::continuum_limit_check(2.0, 1.0, hs), DomainError);
    // spacing coarser than the abscissa leaves no lattice site to compare
    CHECK_THROWS_AS(continuum::continuum_limit_check(0.5, 1.0, {3.0}), DomainError);
}

TEST_CASE("kernel sampling helper routes") {
    ContinuumConfig cfg;
    cfg.alpha = 1.0;
    SUBCASE("infinite route") {
        const auto s = continuum::sample_kernel(cfg, {0.5, 1.0, 2.0}, "infinite");
        REQUIRE(s.value.size() == 3);
        CHECK(s.value[1] == doctest::Approx(M_1_PI).epsilon(1e-15));
        CHECK(s.tail_bound.empty());
        CHECK(s.route == "infinite");
    }
    SUBCASE("periodic routes need a period") {
        CHECK_THROWS_AS(continuum::sample_kernel(cfg, {0.5}, "zeta"), DomainError);
        cfg.period = 2.0;
        const auto z = continuum::sample_kernel(cfg, {0.5}, "zeta");
        const auto d = continuum::sample_kernel(cfg, {0.5}, "direct", 100000);
        CHECK(d.value[0] == doctest::Approx(z.value[0]).epsilon(1e-8));
        REQUIRE(d.tail_bound.size() == 1);
    }
    SUBCASE("unknown route") {
        CHECK_THROWS_AS(continuum::sample_kernel(cfg, {0.5}, "series"), DomainError);
    }
    SUBCASE("singular abscissa") {
        CHECK_THROWS_AS(continuum::sample_kernel(cfg, {0.0}, "infinite"), SingularityError);
    }
}
