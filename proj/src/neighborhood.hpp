#pragma once

#include <map>
#include <utility>

#include "dense.hpp"
#include "simplex.hpp"

namespace scx {

/// Integer-weighted sparse matrix; no explicit zeros are stored. When the
/// symmetric flag is set both (i,j) and (j,i) are kept in the entry map.
class SparseMatrix {
public:
    SparseMatrix(std::size_t rows, std::size_t cols, bool symmetric = false)
        : rows_(rows), cols_(cols), symmetric_(symmetric) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool symmetric() const { return symmetric_; }
    std::size_t nnz() const { return entries_.size(); }

    double at(std::size_t i, std::size_t j) const;
    void add(std::size_t i, std::size_t j, double v); // mirrors when symmetric
    void set(std::size_t i, std::size_t j, double v);

    const std::map<std::pair<std::size_t, std::size_t>, double>& entries() const { return entries_; }

    Mat to_dense() const;
    Vec row_sums() const;
    Vec col_sums() const;

private:
    void check_bounds(std::size_t i, std::size_t j) const;
    void store(std::size_t i, std::size_t j, double v);

    std::size_t rows_, cols_;
    bool symmetric_;
    std::map<std::pair<std::size_t, std::size_t>, double> entries_;
};

/// A^k_adj: |X^k| x |X^k|, entry (i,j) = |CO[c_i, c_j]| for adjacent pairs,
/// zero diagonal. Requires 0 <= k < dim(X).
SparseMatrix per_dim_adjacency(const SimplicialComplex& X, int k);

/// Global adjacency over X^{<n} (size N-hat); block diagonal in the
/// canonical ordering.
SparseMatrix adjacency_matrix(const SimplicialComplex& X);

/// A^k_co: |X^k| x |X^k|, entry (i,j) = |C[c_i, c_j]| for co-adjacent pairs.
/// Requires 0 < k <= dim(X).
SparseMatrix per_dim_coadjacency(const SimplicialComplex& X, int k);

/// Global co-adjacency over X^{>0} (size N - |X^0|).
SparseMatrix coadjacency_matrix(const SimplicialComplex& X);

/// B_m: |X^m| x |X^{m+1}|, entry 1 iff the m-simplex is a facet of the
/// (m+1)-simplex. Requires 0 <= m < dim(X).
SparseMatrix coboundary_incidence(const SimplicialComplex& X, int m);

} // namespace scx
