#include "neighborhood.hpp"

#include <string>

#include "error.hpp"

namespace scx {

void SparseMatrix::check_bounds(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_) {
        throw invalid_argument("sparse index (" + std::to_string(i) + "," + std::to_string(j) +
                               ") out of bounds for " + std::to_string(rows_) + "x" + std::to_string(cols_));
    }
}

double SparseMatrix::at(std::size_t i, std::size_t j) const {
    check_bounds(i, j);
    auto it = entries_.find({i, j});
    return it == entries_.end() ? 0.0 : it->second;
}

void SparseMatrix::store(std::size_t i, std::size_t j, double v) {
    if (v == 0.0) {
        entries_.erase({i, j});
    } else {
        entries_[{i, j}] = v;
    }
}

void SparseMatrix::set(std::size_t i, std::size_t j, double v) {
    check_bounds(i, j);
    store(i, j, v);
    if (symmetric_ && i != j) store(j, i, v);
}

void SparseMatrix::add(std::size_t i, std::size_t j, double v) {
    check_bounds(i, j);
    double updated = at(i, j) + v;
    store(i, j, updated);
    if (symmetric_ && i != j) store(j, i, updated);
}

Mat SparseMatrix::to_dense() const {
    Mat d = Mat::Zero(static_cast<Eigen::Index>(rows_), static_cast<Eigen::Index>(cols_));
    for (const auto& [ij, v] : entries_) {
        d(static_cast<Eigen::Index>(ij.first), static_cast<Eigen::Index>(ij.second)) = v;
    }
    return d;
}

Vec SparseMatrix::row_sums() const {
    Vec s = Vec::Zero(static_cast<Eigen::Index>(rows_));
    for (const auto& [ij, v] : entries_) s(static_cast<Eigen::Index>(ij.first)) += v;
    return s;
}

Vec SparseMatrix::col_sums() const {
    Vec s = Vec::Zero(static_cast<Eigen::Index>(cols_));
    for (const auto& [ij, v] : entries_) s(static_cast<Eigen::Index>(ij.second)) += v;
    return s;
}

SparseMatrix per_dim_adjacency(const SimplicialComplex& X, int k) {
    if (k >= X.dim()) throw invalid_argument("no adjacency at top dimension (k=" + std::to_string(k) + ")");
    if (k < 0) throw invalid_argument("per_dim_adjacency: negative dimension");
    SparseMatrix A(X.count(k), X.count(k), /*symmetric=*/true);
    // Each shared cofacet contributes one unit to |CO[a, b]|.
    std::size_t off = X.dim_offset(k + 1);
    for (std::size_t g = off; g < off + X.count(k + 1); ++g) {
        const auto& fs = X.facet_ordinals(g);
        for (std::size_t i = 0; i < fs.size(); ++i) {
            for (std::size_t j = i + 1; j < fs.size(); ++j) {
                A.add(fs[i] - X.dim_offset(k), fs[j] - X.dim_offset(k), 1.0);
            }
        }
    }
    return A;
}

SparseMatrix adjacency_matrix(const SimplicialComplex& X) {
    // Canonical order makes X^{<n} the prefix of the global ordering, so
    // the global matrix is the block-diagonal stack of the A^k_adj.
    SparseMatrix A(X.size_below_top(), X.size_below_top(), /*symmetric=*/true);
    for (int k = 0; k < X.dim(); ++k) {
        SparseMatrix Ak = per_dim_adjacency(X, k);
        std::size_t off = X.dim_offset(k);
        for (const auto& [ij, v] : Ak.entries()) {
            A.set(ij.first + off, ij.second + off, v);
        }
    }
    return A;
}

SparseMatrix per_dim_coadjacency(const SimplicialComplex& X, int k) {
    if (k <= 0) throw invalid_argument("no co-adjacency at dimension zero (k=" + std::to_string(k) + ")");
    if (k > X.dim()) throw invalid_argument("per_dim_coadjacency: k exceeds complex dimension");
    SparseMatrix A(X.count(k), X.count(k), /*symmetric=*/true);
    std::size_t off = X.dim_offset(k - 1);
    for (std::size_t g = off; g < off + X.count(k - 1); ++g) {
        const auto& cfs = X.cofacet_ordinals(g);
        for (std::size_t i = 0; i < cfs.size(); ++i) {
            for (std::size_t j = i + 1; j < cfs.size(); ++j) {
                A.add(cfs[i] - X.dim_offset(k), cfs[j] - X.dim_offset(k), 1.0);
            }
        }
    }
    return A;
}

SparseMatrix coadjacency_matrix(const SimplicialComplex& X) {
    // Indexed over X^{>0}: vertices have no facets, so their rows are
    // dropped rather than stored as zeros.
    std::size_t base = X.count(0);
    SparseMatrix A(X.size() - base, X.size() - base, /*symmetric=*/true);
    for (int k = 1; k <= X.dim(); ++k) {
        SparseMatrix Ak = per_dim_coadjacency(X, k);
        std::size_t off = X.dim_offset(k) - base;
        for (const auto& [ij, v] : Ak.entries()) {
            A.set(ij.first + off, ij.second + off, v);
        }
    }
    return A;
}

SparseMatrix coboundary_incidence(const SimplicialComplex& X, int m) {
    if (m < 0 || m >= X.dim()) {
        throw invalid_argument("coboundary_incidence: need 0 <= m < dim, got m=" + std::to_string(m));
    }
    SparseMatrix B(X.count(m), X.count(m + 1), /*symmetric=*/false);
    std::size_t off = X.dim_offset(m + 1);
    for (std::size_t g = off; g < off + X.count(m + 1); ++g) {
        for (std::size_t fg : X.facet_ordinals(g)) {
            B.set(fg - X.dim_offset(m), g - off, 1.0);
        }
    }
    return B;
}

} // namespace scx
