#include "fraclat/transforms.hpp"

#include <fftw3.h>
#include <omp.h>

#include <cmath>
#include <mutex>

#include "fraclat/errors.hpp"

namespace fraclat::transforms {

namespace {

// FFTW's planner is not thread-safe; execution of a made plan is.
std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
}

std::int64_t product(const std::vector<std::int64_t>& dims) {
    std::int64_t n = 1;
    for (auto d : dims) n *= d;
    return n;
}

// Direct O(N^2) multi-dimensional DFT, one output mode at a time. Phases are
// reduced per axis in integer arithmetic so no large-argument trig is needed.
void dft_direct(std::vector<std::complex<double>>& data,
                const std::vector<std::int64_t>& dims, int sign) {
    const std::int64_t n = product(dims);
    const int rank = (int)dims.size();
    std::vector<std::complex<double>> out(n);
#pragma omp parallel for schedule(static)
    for (std::int64_t k = 0; k < n; ++k) {
        // decode k into per-axis indices
        std::int64_t rem = k;
        std::int64_t kidx[8];
        for (int a = rank - 1; a >= 0; --a) {
            kidx[a] = rem % dims[a];
            rem /= dims[a];
        }
        std::complex<long double> acc = 0.0L;
        for (std::int64_t p = 0; p < n; ++p) {
            std::int64_t prem = p;
            long double phase = 0.0L;
            for (int a = rank - 1; a >= 0; --a) {
                const std::int64_t pa = prem % dims[a];
                prem /= dims[a];
                phase += (long double)((kidx[a] * pa) % dims[a]) / (long double)dims[a];
            }
            const long double ang = 2.0L * (long double)M_PIl * phase * (long double)sign;
            const std::complex<long double> w(cosl(ang), sinl(ang));
            acc += std::complex<long double>(data[p]) * w;
        }
        out[k] = std::complex<double>((double)acc.real(), (double)acc.imag());
    }
    data = std::move(out);
}

void dft_fftw(std::vector<std::complex<double>>& data,
              const std::vector<std::int64_t>& dims, int sign) {
    std::vector<int> n(dims.begin(), dims.end());
    fftw_plan plan;
    {
        std::lock_guard<std::mutex> lock(planner_mutex());
        plan = fftw_plan_dft((int)n.size(), n.data(),
                             reinterpret_cast<fftw_complex*>(data.data()),
                             reinterpret_cast<fftw_complex*>(data.data()),
                             sign < 0 ? FFTW_FORWARD : FFTW_BACKWARD, FFTW_ESTIMATE);
    }
    if (!plan) throw ResourceLimit("transforms: fftw plan creation failed");
    fftw_execute(plan);
    {
        std::lock_guard<std::mutex> lock(planner_mutex());
        fftw_destroy_plan(plan);
    }
}

} // namespace

void dft(std::vector<std::complex<double>>& data, const std::vector<std::int64_t>& dims,
         int sign) {
    if (product(dims) != (std::int64_t)data.size())
        throw DimensionMismatch("transforms: data length does not match dims");
    if (dims.size() > 8) throw ResourceLimit("transforms: rank > 8 unsupported");
    if ((std::int64_t)data.size() <= kDirectLimit)
        dft_direct(data, dims, sign);
    else
        dft_fftw(data, dims, sign);
}

std::vector<double> real_even_dft_direct(const std::vector<double>& data,
                                         const std::vector<std::int64_t>& dims) {
    const std::int64_t n = product(dims);
    const int rank = (int)dims.size();
    std::vector<double> out(n);
#pragma omp parallel for schedule(static)
    for (std::int64_t k = 0; k < n; ++k) {
        std::int64_t rem = k;
        std::int64_t kidx[8];
        for (int a = rank - 1; a >= 0; --a) {
            kidx[a] = rem % dims[a];
            rem /= dims[a];
        }
        long double acc = 0.0L;
        for (std::int64_t p = 0; p < n; ++p) {
            std::int64_t prem = p;
            long double phase = 0.0L;
            for (int a = rank - 1; a >= 0; --a) {
                const std::int64_t pa = prem % dims[a];
                prem /= dims[a];
                phase += (long double)((kidx[a] * pa) % dims[a]) / (long double)dims[a];
            }
            acc += (long double)data[p] * cosl(2.0L * (long double)M_PIl * phase);
        }
        out[k] = (double)acc;
    }
    return out;
}

std::vector<double> real_even_dft_fft(const std::vector<double>& data,
                                      const std::vector<std::int64_t>& dims) {
    const std::int64_t n = product(dims);
    const int rank = (int)dims.size();
    std::vector<int> nd(dims.begin(), dims.end());
    const std::int64_t last = dims[rank - 1];
    const std::int64_t half = last / 2 + 1;
    const std::int64_t nhalf = n / last * half;

    std::vector<double> in(data);
    std::vector<std::complex<double>> spec(nhalf);
    fftw_plan plan;
    {
        std::lock_guard<std::mutex> lock(planner_mutex());
        plan = fftw_plan_dft_r2c(rank, nd.data(), in.data(),
                                 reinterpret_cast<fftw_complex*>(spec.data()), FFTW_ESTIMATE);
    }
    if (!plan) throw ResourceLimit("transforms: fftw r2c plan creation failed");
    fftw_execute(plan);
    {
        std::lock_guard<std::mutex> lock(planner_mutex());
        fftw_destroy_plan(plan);
    }

    // Expand the half spectrum: for k_last > last/2 use the Hermitian mirror
    // out[k] = conj(out[(dims - k) mod dims]), whose real part we want anyway.
    std::vector<double> out(n);
#pragma omp parallel for schedule(static)
    for (std::int64_t k = 0; k < n; ++k) {
        std::int64_t rem = k;
        std::int64_t kidx[8];
        for (int a = rank - 1; a >= 0; --a) {
            kidx[a] = rem % dims[a];
            rem /= dims[a];
        }
        std::int64_t idx[8];
        if (kidx[rank - 1] < half) {
            for (int a = 0; a < rank; ++a) idx[a] = kidx[a];
        } else {
            for (int a = 0; a < rank; ++a) idx[a] = (dims[a] - kidx[a]) % dims[a];
        }
        std::int64_t flat = 0;
        for (int a = 0; a < rank; ++a) flat = flat * (a == rank - 1 ? half : dims[a]) + idx[a];
        out[k] = spec[flat].real();
    }
    return out;
}

std::vector<double> real_even_dft(const std::vector<double>& data,
                                  const std::vector<std::int64_t>& dims) {
    if (product(dims) != (std::int64_t)data.size())
        throw DimensionMismatch("transforms: data length does not match dims");
    if (dims.size() > 8) throw ResourceLimit("transforms: rank > 8 unsupported");
    if ((std::int64_t)data.size() <= kDirectLimit) return real_even_dft_direct(data, dims);
    return real_even_dft_fft(data, dims);
}

} // namespace fraclat::transforms
