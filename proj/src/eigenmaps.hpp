#pragma once

#include "dense.hpp"
#include "neighborhood.hpp"

namespace scx {

struct EigenmapsResult {
    Mat z;            // rows x d, Z^T D Z = I; rows of isolated nodes are zero
    Vec eigenvalues;  // the d smallest nonzero generalized eigenvalues, ascending
};

/// Spectral embedding of a weighted adjacency matrix: generalized
/// eigenvectors of (L, D) with L = D - A, skipping the zero eigenvalue of
/// every connected component. Isolated nodes carry no degree mass and embed
/// at the origin. Throws when d exceeds the number of available nonzero
/// eigenpairs (the message states the maximum).
EigenmapsResult laplacian_eigenmaps_solve(const SparseMatrix& adjacency, Eigen::Index d);

/// Connected components of a symmetric adjacency; returns one component id
/// per node, ids dense from 0 in first-seen order.
std::vector<std::size_t> connected_components(const SparseMatrix& adjacency);

} // namespace scx
