#pragma once

#include "fraclat/errors.hpp"

namespace fraclat::specfun {

struct LogGamma {
    double log_abs; // ln |Gamma(x)|
    int sign;       // sign of Gamma(x), +1 or -1
};

// ln |Gamma(x)| with the sign tracked separately so callers can work in log
// space across negative arguments. Throws PoleError at 0, -1, -2, ...
LogGamma log_gamma(double x);

// Generalized binomial Gamma(alpha+1) / (Gamma(alpha/2 - k + 1) * Gamma(alpha/2 + k + 1)),
// evaluated in log space with sign tracking. When a denominator Gamma argument
// lands on a pole the analytic limit 0 is returned exactly; in particular for
// even integer alpha the value vanishes for |k| > alpha/2 and reduces to the
// ordinary binomial C(alpha, alpha/2 + k) otherwise (computed exactly for
// alpha <= 56). Throws DomainError for alpha <= 0.
double gen_binomial(double alpha, double k);

enum class ZetaVariant { Standard, AbsoluteValue };

// Hurwitz zeta sum_{n>=0} (x+n)^{-beta} (Standard, requires x > 0) or its
// absolute-value variant sum_{n>=0} |x+n|^{-beta} (any real x off the
// nonpositive integers). Direct summation up to M = max(20, ceil(10/(beta-1)))
// plus an Euler-Maclaurin tail with four Bernoulli corrections; absolute error
// ~1e-13 for values of order unity (relative ~1e-15 for large values).
// Throws DomainError for beta <= 1, PoleError when some x+n == 0.
double hurwitz_zeta(ZetaVariant variant, double beta, double x);

// Bessel function of the first kind J_order(x), integer order >= 0, any real x
// (negative arguments folded by parity). Absolute error <= 1e-12 for |x| <= 1e4.
double bessel_j(int order, double x);

} // namespace fraclat::specfun
