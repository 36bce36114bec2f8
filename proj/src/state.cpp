#include "ergophase/state.hpp"

#include <cmath>

#include "ergophase/errors.hpp"

namespace ergophase {

double StateVector::norm() const {
    double s = 0.0;
    for (const auto& z : amplitudes) s += std::norm(z);
    return std::sqrt(s);
}

StateVector StateVector::unit(std::vector<cdouble> amplitudes, std::string label, double tol) {
    StateVector v{std::move(amplitudes), std::move(label)};
    for (const auto& z : v.amplitudes)
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
            fail(ErrorCode::ValidationError, "state '" + v.label + "' has non-finite amplitudes");
    const double n = v.norm();
    if (std::abs(n - 1.0) > tol)
        fail(ErrorCode::ValidationError,
             "state '" + v.label + "' is not normalized (norm = " + std::to_string(n) + ")");
    return v;
}

StateVector StateVector::normalized(std::vector<cdouble> amplitudes, std::string label) {
    StateVector v{std::move(amplitudes), std::move(label)};
    const double n = v.norm();
    if (!(n > 1e-150))
        fail(ErrorCode::ZeroNorm, "cannot normalize state '" + v.label + "'");
    for (auto& z : v.amplitudes) z /= n;
    return v;
}

cdouble inner(const StateVector& u, const StateVector& v) {
    if (u.dim() != v.dim())
        fail(ErrorCode::DimensionMismatch, "inner product of states with different dimensions");
    cdouble acc{};
    for (std::size_t i = 0; i < u.dim(); ++i) acc += std::conj(u.amplitudes[i]) * v.amplitudes[i];
    return acc;
}

std::vector<std::string> OrthonormalBasis::labels() const {
    std::vector<std::string> out;
    out.reserve(vectors.size());
    for (const auto& v : vectors) out.push_back(v.label);
    return out;
}

OrthonormalBasis OrthonormalBasis::from_columns_unchecked(const ComplexMatrix& u,
                                                          std::vector<std::string> labels) {
    OrthonormalBasis b;
    b.vectors.reserve(u.cols);
    for (std::size_t j = 0; j < u.cols; ++j) {
        StateVector v;
        v.amplitudes.resize(u.rows);
        for (std::size_t i = 0; i < u.rows; ++i) v.amplitudes[i] = u.at(i, j);
        v.label = j < labels.size() ? labels[j] : std::to_string(j);
        b.vectors.push_back(std::move(v));
    }
    return b;
}

OrthonormalBasis OrthonormalBasis::from_columns(const ComplexMatrix& u,
                                                std::vector<std::string> labels, double tol) {
    if (!u.square())
        fail(ErrorCode::ValidationError, "basis matrix must be square");
    OrthonormalBasis b = from_columns_unchecked(u, std::move(labels));
    const double defect = b.orthonormality_defect();
    if (defect > tol)
        fail(ErrorCode::ValidationError,
             "basis columns are not orthonormal (defect = " + std::to_string(defect) + ")");
    return b;
}

double OrthonormalBasis::orthonormality_defect() const {
    double m = 0.0;
    for (std::size_t i = 0; i < vectors.size(); ++i)
        for (std::size_t j = 0; j < vectors.size(); ++j) {
            const cdouble g = inner(vectors[i], vectors[j]);
            const double target = i == j ? 1.0 : 0.0;
            m = std::max(m, std::abs(g - target));
        }
    return m;
}

ComplexMatrix OrthonormalBasis::column_matrix() const {
    ComplexMatrix u(dim(), size());
    for (std::size_t j = 0; j < size(); ++j)
        for (std::size_t i = 0; i < dim(); ++i) u.at(i, j) = vectors[j].amplitudes[i];
    return u;
}

}  // namespace ergophase
