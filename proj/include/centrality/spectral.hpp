#pragma once

#include <vector>

#include "centrality/graph.hpp"

namespace centrality {

/// Eigenvalues (descending) and orthonormal eigenvectors of a symmetric
/// matrix A, so that A = U diag(eigenvalues) U^T.
///
/// Column j of U pairs with eigenvalues[j]. Each column is sign-normalized:
/// its entry of largest magnitude (ties broken by lowest row index) is
/// positive, so identical inputs give bit-identical output.
struct SpectralDecomposition {
    int n = 0;
    std::vector<double> eigenvalues;
    std::vector<double> eigenvectors; // row-major n x n; u(i,j) = eigenvectors[i*n + j]

    double eigenvector(int i, int j) const {
        return eigenvectors[static_cast<std::size_t>(i) * n + j];
    }
};

/// Dense symmetric eigendecomposition by cyclic Jacobi rotations.
///
/// Converges when the off-diagonal Frobenius norm drops below
/// 1e-12 * ||A||_F; throws NoConvergence if 100 full sweeps are not
/// enough, and NotSymmetric if the input fails an exact symmetry check.
SpectralDecomposition eigendecompose(const SymmetricMatrix& a);

/// Largest eigenvalue. Requires n >= 1.
double spectral_radius(const SpectralDecomposition& d);

} // namespace centrality
