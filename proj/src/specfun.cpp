#include "fraclat/specfun.hpp"

#include <cmath>
#include <cstdint>
#include <string>

namespace fraclat::specfun {

namespace {

bool is_nonpositive_integer(double x) {
    return x <= 0.0 && x == std::rint(x);
}

// Exact binomial C(n, r) for n <= 56; every value and intermediate fits in
// uint64 and each division in the running product is exact.
double exact_binomial(std::int64_t n, std::int64_t r) {
    if (r < 0 || r > n) return 0.0;
    if (r > n - r) r = n - r;
    std::uint64_t c = 1;
    for (std::int64_t i = 1; i <= r; ++i) {
        c = c * (std::uint64_t)(n - r + i) / (std::uint64_t)i;
    }
    return (double)c;
}

} // namespace

LogGamma log_gamma(double x) {
    if (!std::isfinite(x)) throw DomainError("log_gamma: non-finite argument");
    if (is_nonpositive_integer(x))
        throw PoleError("log_gamma: pole at x = " + std::to_string(x));
    LogGamma r;
    r.log_abs = std::lgamma(x);
    // Gamma alternates sign between consecutive negative integers:
    // negative on (-1,0), positive on (-2,-1), ...
    r.sign = (x > 0.0 || ((std::int64_t)std::floor(x)) % 2 == 0) ? 1 : -1;
    return r;
}

double gen_binomial(double alpha, double k) {
    if (!(alpha > 0.0) || !std::isfinite(alpha))
        throw DomainError("gen_binomial: alpha must be positive, got " + std::to_string(alpha));
    const double half = 0.5 * alpha;
    const double x1 = half - k + 1.0;
    const double x2 = half + k + 1.0;
    // A denominator pole means the analytic limit is 0 (the numerator
    // Gamma(alpha+1) is finite for alpha > 0; both denominators cannot hit
    // poles at once since that would force alpha < 0).
    if (is_nonpositive_integer(x1) || is_nonpositive_integer(x2)) return 0.0;
    // Exact path: ordinary binomial C(alpha, alpha/2 + k) for even integer
    // alpha and integer k, so small-alpha stencils come out bit-exact.
    if (alpha == std::rint(alpha) && half == std::rint(half) && k == std::rint(k) &&
        alpha <= 56.0) {
        return exact_binomial((std::int64_t)alpha, (std::int64_t)std::llrint(half + k));
    }
    const LogGamma num = log_gamma(alpha + 1.0);
    const LogGamma d1 = log_gamma(x1);
    const LogGamma d2 = log_gamma(x2);
    const double mag = std::exp(num.log_abs - d1.log_abs - d2.log_abs);
    return num.sign * d1.sign * d2.sign * mag;
}

namespace {

// Euler-Maclaurin tail of sum_{n>=M} (x+n)^{-beta} from a = x+M:
// a^{1-beta}/(beta-1) + a^{-beta}/2 + sum_j B_{2j}/(2j)! * beta...(beta+2j-2) * a^{-beta-2j+1}
double zeta_tail(double beta, double a) {
    static const double B_over_fact[4] = {
        1.0 / 12.0,       // B2/2!
        -1.0 / 720.0,     // B4/4!
        1.0 / 30240.0,    // B6/6!
        -1.0 / 1209600.0, // B8/8!
    };
    double tail = std::pow(a, 1.0 - beta) / (beta - 1.0) + 0.5 * std::pow(a, -beta);
    double rising = beta; // beta (beta+1) ... (beta+2j-2)
    for (int j = 0; j < 4; ++j) {
        tail += B_over_fact[j] * rising * std::pow(a, -(beta + 2.0 * j + 1.0));
        rising *= (beta + 2.0 * j + 1.0) * (beta + 2.0 * j + 2.0);
    }
    return tail;
}

double zeta_standard(double beta, double x) {
    const int m = std::max(20, (int)std::ceil(10.0 / (beta - 1.0)));
    double s = 0.0;
    for (int n = 0; n < m; ++n) s += std::pow(x + n, -beta);
    return s + zeta_tail(beta, x + m);
}

} // namespace

double hurwitz_zeta(ZetaVariant variant, double beta, double x) {
    if (!(beta > 1.0) || !std::isfinite(beta))
        throw DomainError("hurwitz_zeta: beta must exceed 1, got " + std::to_string(beta));
    if (variant == ZetaVariant::Standard) {
        if (!(x > 0.0))
            throw DomainError("hurwitz_zeta: standard variant needs x > 0, got " +
                              std::to_string(x));
        return zeta_standard(beta, x);
    }
    // Absolute-value variant: peel off the terms with x+n < 0, the rest is a
    // standard Hurwitz sum started at the first positive offset.
    if (is_nonpositive_integer(x))
        throw PoleError("hurwitz_zeta: x + n vanishes at n = " + std::to_string(-x));
    if (x > 0.0) return zeta_standard(beta, x);
    const std::int64_t n0 = (std::int64_t)std::ceil(-x);
    double s = 0.0;
    for (std::int64_t n = 0; n < n0; ++n) s += std::pow(-(x + n), -beta);
    return s + zeta_standard(beta, x + (double)n0);
}

double bessel_j(int order, double x) {
    if (order < 0) throw DomainError("bessel_j: order must be >= 0");
    if (!std::isfinite(x)) throw DomainError("bessel_j: non-finite argument");
    // J_m(-x) = (-1)^m J_m(x)
    const double ax = std::fabs(x);
    const double v = std::cyl_bessel_j((double)order, ax);
    return (x < 0.0 && order % 2 == 1) ? -v : v;
}

} // namespace fraclat::specfun
