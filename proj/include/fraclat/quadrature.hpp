#pragma once

// Adaptive Gauss-Kronrod 15(7) quadrature in long double. The embedded 7-point
// Gauss result supplies the per-panel error estimate; panels are bisected until
// the estimate drops below the allotted tolerance. Long double accumulation
// keeps the roundoff floor low enough for the heavily cancelling oscillatory
// integrals this library feeds through it.

#include <cmath>
#include <cstdint>

#include "fraclat/errors.hpp"

namespace fraclat::quad {

struct Result {
    long double value = 0.0L;
    long double error = 0.0L; // accumulated per-panel estimates
    std::int64_t evals = 0;
};

namespace detail {

// Kronrod-15 abscissae/weights and the embedded Gauss-7 weights.
inline constexpr long double kXgk[8] = {
    0.991455371120812639206854697526329L,
    0.949107912342758524526189684047851L,
    0.864864423359769072789712788640926L,
    0.741531185599394439863864773280788L,
    0.586087235467691130294144838258730L,
    0.405845151377397166906606412076961L,
    0.207784955007898467600689403773245L,
    0.000000000000000000000000000000000L,
};
inline constexpr long double kWgk[8] = {
    0.022935322010529224963732008058970L,
    0.063092092629978553290700663189204L,
    0.104790010322250183839876322541518L,
    0.140653259715525918745189590510238L,
    0.169004726639267902826583426598550L,
    0.190350578064785409913256402421014L,
    0.204432940075298892414161999234649L,
    0.209482141084727828012999174891714L,
};
inline constexpr long double kWg[4] = {
    0.129484966168869693270611432679082L,
    0.279705391489276667901467771423780L,
    0.381830050505118944950369775488975L,
    0.417959183673469387755102040816327L,
};

template <class F>
void gk15(F&& f, long double a, long double b, long double& value, long double& err,
          long double& resabs) {
    const long double c = 0.5L * (a + b);
    const long double h = 0.5L * (b - a);
    const long double fc = f(c);
    long double resk = kWgk[7] * fc;
    long double resg = kWg[3] * fc;
    long double rabs = kWgk[7] * fabsl(fc);
    for (int i = 0; i < 7; ++i) {
        const long double fv1 = f(c - h * kXgk[i]);
        const long double fv2 = f(c + h * kXgk[i]);
        resk += kWgk[i] * (fv1 + fv2);
        rabs += kWgk[i] * (fabsl(fv1) + fabsl(fv2));
        if (i % 2 == 1) resg += kWg[i / 2] * (fv1 + fv2);
    }
    value = resk * h;
    err = fabsl((resk - resg) * h);
    resabs = rabs * fabsl(h);
}

template <class F>
void gk15(F&& f, long double a, long double b, long double& value, long double& err) {
    long double resabs;
    gk15(f, a, b, value, err, resabs);
}

// Evaluation budget across one adaptive() call; a panel whose error estimate
// sits at the long double roundoff floor of its absolute integral is accepted
// as converged: bisecting further only shuffles noise.
inline constexpr std::int64_t kEvalBudget = 20'000'000;
inline constexpr long double kRoundoffFactor = 50.0L * 1.0842e-19L; // 50 ulp

template <class F>
void adaptive_step(F&& f, long double a, long double b, long double tol, int depth,
                   Result& out, bool& converged) {
    long double v, e, resabs;
    gk15(f, a, b, v, e, resabs);
    out.evals += 15;
    const long double floor = kRoundoffFactor * resabs;
    if (e <= tol || e <= floor || depth <= 0 || out.evals >= kEvalBudget) {
        out.value += v;
        out.error += e;
        if (e > tol && e > floor) converged = false;
        return;
    }
    const long double m = 0.5L * (a + b);
    adaptive_step(f, a, m, 0.5L * tol, depth - 1, out, converged);
    adaptive_step(f, m, b, 0.5L * tol, depth - 1, out, converged);
}

} // namespace detail

// Integrate f over [a,b] to the given absolute tolerance. Throws
// QuadratureNonConvergence if the depth limit is exhausted with the error
// estimate still above 10x the request.
template <class F>
Result adaptive(F&& f, long double a, long double b, long double abs_tol, int max_depth = 48) {
    Result out;
    bool converged = true;
    detail::adaptive_step(f, a, b, abs_tol, max_depth, out, converged);
    if (!converged && out.error > 10.0L * abs_tol)
        throw QuadratureNonConvergence("adaptive quadrature: depth limit reached, error "
                                       + std::to_string((double)out.error));
    return out;
}

// Two-pass driver for a relative target: a loose pass sizes the integral, the
// second pass runs at rel_tol * |estimate| (never below abs_floor, which caps
// the demand near the long double roundoff floor).
template <class F>
Result integrate_rel(F&& f, long double a, long double b, double rel_tol,
                     long double abs_floor = 1e-19L, int max_depth = 48) {
    Result coarse;
    bool conv = true;
    detail::adaptive_step(f, a, b, 1e-6L, 24, coarse, conv);
    long double scale = fabsl(coarse.value);
    if (scale < 1e-300L) scale = 1e-300L;
    long double tol = (long double)rel_tol * scale;
    if (tol < abs_floor) tol = abs_floor;
    return adaptive(f, a, b, tol, max_depth);
}

// Single GK15 panel, exposed for callers that schedule panels themselves.
template <class F>
void panel15(F&& f, long double a, long double b, long double& value, long double& err) {
    detail::gk15(f, a, b, value, err);
}

// Fixed-panel GK15 for oscillatory integrands whose scale is known up front:
// [a,b] is covered by ceil((b-a)/width) equal panels, no recursion.
template <class F>
Result fixed_panels(F&& f, long double a, long double b, long double width) {
    Result out;
    const auto n = (std::int64_t)ceill((b - a) / width);
    for (std::int64_t i = 0; i < n; ++i) {
        const long double pa = a + (b - a) * i / n;
        const long double pb = a + (b - a) * (i + 1) / n;
        long double v, e;
        detail::gk15(f, pa, pb, v, e);
        out.value += v;
        out.error += e;
        out.evals += 15;
    }
    return out;
}

} // namespace fraclat::quad
