#include "ergophase/complex_matrix.hpp"

#include <cmath>

#include "ergophase/errors.hpp"

namespace ergophase {

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1.0;
    return m;
}

bool ComplexMatrix::finite() const {
    for (const auto& z : data)
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    return true;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix m(cols, rows);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.at(j, i) = std::conj(at(i, j));
    return m;
}

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix& rhs) const {
    if (cols != rhs.rows)
        fail(ErrorCode::DimensionMismatch, "matrix product shape mismatch");
    ComplexMatrix m(rows, rhs.cols);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t k = 0; k < cols; ++k) {
            const cdouble aik = at(i, k);
            if (aik == cdouble{}) continue;
            for (std::size_t j = 0; j < rhs.cols; ++j)
                m.at(i, j) += aik * rhs.at(k, j);
        }
    }
    return m;
}

std::vector<cdouble> ComplexMatrix::apply(std::span<const cdouble> v) const {
    if (v.size() != cols)
        fail(ErrorCode::DimensionMismatch, "matrix-vector shape mismatch");
    std::vector<cdouble> out(rows);
    for (std::size_t i = 0; i < rows; ++i) {
        cdouble acc{};
        for (std::size_t j = 0; j < cols; ++j) acc += at(i, j) * v[j];
        out[i] = acc;
    }
    return out;
}

double ComplexMatrix::max_abs() const {
    double m = 0.0;
    for (const auto& z : data) m = std::max(m, std::abs(z));
    return m;
}

double max_norm_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows != b.rows || a.cols != b.cols)
        fail(ErrorCode::DimensionMismatch, "max_norm_diff shape mismatch");
    double m = 0.0;
    for (std::size_t i = 0; i < a.data.size(); ++i)
        m = std::max(m, std::abs(a.data[i] - b.data[i]));
    return m;
}

double hermiticity_defect(const ComplexMatrix& a) {
    if (!a.square()) fail(ErrorCode::DimensionMismatch, "hermiticity check on non-square matrix");
    double m = 0.0;
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t j = 0; j < a.cols; ++j)
            m = std::max(m, std::abs(a.at(i, j) - std::conj(a.at(j, i))));
    return m;
}

double unitarity_defect(const ComplexMatrix& a) {
    return max_norm_diff(a * a.adjoint(), ComplexMatrix::identity(a.rows));
}

}  // namespace ergophase
