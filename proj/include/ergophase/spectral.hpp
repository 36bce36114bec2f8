// spectral.hpp — complex Hermitian eigensolver (cyclic Jacobi) and the exact
// propagator built from the spectral decomposition

#pragma once

#include <optional>

#include "ergophase/state.hpp"

namespace ergophase {

struct SpectralDecomposition {
    std::vector<double> eigenvalues;  // ascending
    OrthonormalBasis eigenvectors;    // phase-fixed: largest component real positive
    std::vector<std::vector<std::size_t>> degeneracy_groups;
    double eps_deg{0.0};  // the grouping tolerance actually used

    std::size_t dim() const { return eigenvalues.size(); }
    std::size_t group_of(std::size_t n) const;

    // smallest/largest gap between distinct adjacent levels; 0 if fully degenerate
    double min_gap() const;
    double max_gap() const;

    ComplexMatrix reconstruct() const;  // sum_n E_n |n><n|
};

// Cyclic Jacobi sweeps on the full complex Hermitian matrix. Deterministic:
// fixed sweep order, fixed rotation formulas, no threading.
// eps_deg: absolute degeneracy tolerance; defaults to 1e-9 * max|E_n|.
SpectralDecomposition eigendecompose_hermitian(const ComplexMatrix& h,
                                               std::optional<double> eps_deg = {});

// U(t) = sum_n exp(-i E_n t / hbar) |n><n|
ComplexMatrix propagator(const SpectralDecomposition& spec, double t, double hbar);

// <bra|k><k|ket> for every eigenvector k
std::vector<cdouble> spectral_overlaps(const SpectralDecomposition& spec, const StateVector& bra,
                                       const StateVector& ket);

// <bra|U(t)|ket> evaluated from precomputed overlaps
cdouble phased_overlap_sum(const std::vector<cdouble>& overlaps,
                           const std::vector<double>& energies, double t, double hbar);

// <bra|U(t)|ket>
cdouble transition_amplitude(const SpectralDecomposition& spec, const StateVector& bra,
                             const StateVector& ket, double t, double hbar);

// <bra|Pi_g|ket> over the degeneracy group g
cdouble group_projection(const SpectralDecomposition& spec, std::size_t group,
                         const StateVector& bra, const StateVector& ket);

}  // namespace ergophase
