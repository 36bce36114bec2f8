// complex_matrix.hpp — dense complex matrix, row-major, sized for dim <= 256

#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace ergophase {

using cdouble = std::complex<double>;

struct ComplexMatrix {
    std::size_t rows{0};
    std::size_t cols{0};
    std::vector<cdouble> data;  // row-major, rows*cols entries

    ComplexMatrix() = default;
    ComplexMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}

    static ComplexMatrix identity(std::size_t n);

    cdouble& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
    const cdouble& at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }

    bool square() const { return rows == cols; }
    bool finite() const;

    ComplexMatrix adjoint() const;
    ComplexMatrix operator*(const ComplexMatrix& rhs) const;
    std::vector<cdouble> apply(std::span<const cdouble> v) const;

    double max_abs() const;
};

// max-norm of A - B; dimension mismatch raises DimensionMismatch
double max_norm_diff(const ComplexMatrix& a, const ComplexMatrix& b);

// max |A(i,j) - conj(A(j,i))|
double hermiticity_defect(const ComplexMatrix& a);

// max-norm of A A^dag - I
double unitarity_defect(const ComplexMatrix& a);

}  // namespace ergophase
