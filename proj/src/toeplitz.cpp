#include "fraclat/toeplitz.hpp"

#include <string>

namespace fraclat {

std::int64_t SymToeplitz::size() const {
    std::int64_t n = 1;
    for (auto d : dims) n *= d;
    return n;
}

std::int64_t SymToeplitz::flatten(const MultiIndex& p) const {
    if (p.size() != dims.size())
        throw DimensionMismatch("toeplitz: index rank " + std::to_string(p.size()) +
                                " vs lattice rank " + std::to_string(dims.size()));
    std::int64_t flat = 0;
    for (std::size_t a = 0; a < dims.size(); ++a) {
        std::int64_t i = p[a] % dims[a];
        if (i < 0) i += dims[a];
        flat = flat * dims[a] + i;
    }
    return flat;
}

double SymToeplitz::element(const MultiIndex& p, const MultiIndex& q) const {
    if (p.size() != q.size())
        throw DimensionMismatch("toeplitz: mismatched index ranks");
    MultiIndex d(p.size());
    for (std::size_t a = 0; a < p.size(); ++a) d[a] = p[a] - q[a];
    return first_row[flatten(d)];
}

std::vector<std::complex<double>> SymToeplitz::matvec(
    const std::vector<std::complex<double>>& u) const {
    const std::int64_t n = size();
    if ((std::int64_t)u.size() != n)
        throw DimensionMismatch("toeplitz: vector length " + std::to_string(u.size()) +
                                " vs matrix size " + std::to_string(n));
    const int rank = (int)dims.size();
    std::vector<std::complex<double>> out(n);
    std::vector<std::int64_t> pi(rank), pj(rank);
    for (std::int64_t i = 0; i < n; ++i) {
        std::int64_t irem = i;
        for (int a = rank - 1; a >= 0; --a) {
            pi[a] = irem % dims[a];
            irem /= dims[a];
        }
        std::complex<long double> acc = 0.0L;
        for (std::int64_t j = 0; j < n; ++j) {
            std::int64_t jrem = j;
            for (int a = rank - 1; a >= 0; --a) {
                pj[a] = jrem % dims[a];
                jrem /= dims[a];
            }
            std::int64_t flat = 0;
            for (int a = 0; a < rank; ++a) {
                std::int64_t d = (pi[a] - pj[a]) % dims[a];
                if (d < 0) d += dims[a];
                flat = flat * dims[a] + d;
            }
            acc += (std::complex<long double>)first_row[flat] * std::complex<long double>(u[j]);
        }
        out[i] = std::complex<double>((double)acc.real(), (double)acc.imag());
    }
    return out;
}

} // namespace fraclat
