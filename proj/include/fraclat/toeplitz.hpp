#pragma once

#include <complex>
#include <vector>

#include "fraclat/types.hpp"

namespace fraclat {

// Symmetric (block-)Toeplitz matrix of a periodic lattice, stored as its first
// row only: M[p][q] = first_row[fold(p - q)] with per-axis circular folding.
// first_row holds the final matrix entries (sign and prefactor applied);
// scale records the signed prefactor that multiplied the dimensionless
// generator-power elements.
struct SymToeplitz {
    std::vector<std::int64_t> dims;
    std::vector<double> first_row; // flattened row-major, length prod(dims)
    double scale = 1.0;
    Convention convention = Convention::LaplacianNsd;
    double row_sum = 0.0; // sum of first_row, recorded at assembly

    std::int64_t size() const;
    std::int64_t flatten(const MultiIndex& p) const;
    // entry M[p][q]; p and q are multi-indices on the lattice
    double element(const MultiIndex& p, const MultiIndex& q) const;
    // dense O(N^2) reference mat-vec, used by tests as the transform oracle
    std::vector<std::complex<double>> matvec(const std::vector<std::complex<double>>& u) const;
};

} // namespace fraclat
