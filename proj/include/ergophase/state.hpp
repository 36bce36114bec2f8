// state.hpp — unit state vectors and labelled orthonormal bases

#pragma once

#include <string>
#include <vector>

#include "ergophase/complex_matrix.hpp"

namespace ergophase {

struct StateVector {
    std::vector<cdouble> amplitudes;
    std::string label;

    std::size_t dim() const { return amplitudes.size(); }
    double norm() const;

    // validated constructor: finite amplitudes, unit norm within tol
    static StateVector unit(std::vector<cdouble> amplitudes, std::string label = {},
                            double tol = 1e-10);

    // normalize whatever is passed in; ZeroNorm if the norm underflows
    static StateVector normalized(std::vector<cdouble> amplitudes, std::string label = {});
};

// conjugate-linear in the first argument
cdouble inner(const StateVector& u, const StateVector& v);

struct OrthonormalBasis {
    std::vector<StateVector> vectors;

    std::size_t dim() const { return vectors.empty() ? 0 : vectors.front().dim(); }
    std::size_t size() const { return vectors.size(); }
    const StateVector& operator[](std::size_t i) const { return vectors[i]; }
    const std::string& label(std::size_t i) const { return vectors[i].label; }
    std::vector<std::string> labels() const;

    // column i of the matrix is vector i; unitarity enforced within tol
    static OrthonormalBasis from_columns(const ComplexMatrix& u,
                                         std::vector<std::string> labels = {},
                                         double tol = 1e-10);

    // used by producers whose output is orthonormal by construction
    static OrthonormalBasis from_columns_unchecked(const ComplexMatrix& u,
                                                   std::vector<std::string> labels = {});

    // pairwise inner-product defect against the Kronecker delta
    double orthonormality_defect() const;

    ComplexMatrix column_matrix() const;
};

}  // namespace ergophase
