#include "eigenmaps.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <string>
#include <vector>

#include "error.hpp"

namespace scx {

std::vector<std::size_t> connected_components(const SparseMatrix& adjacency) {
    if (adjacency.rows() != adjacency.cols()) throw invalid_argument("adjacency must be square");
    std::size_t n = adjacency.rows();
    std::vector<std::vector<std::size_t>> nbr(n);
    for (const auto& [key, v] : adjacency.entries()) {
        if (v != 0.0) nbr[key.first].push_back(key.second);
    }
    const std::size_t none = static_cast<std::size_t>(-1);
    std::vector<std::size_t> comp(n, none);
    std::size_t next = 0;
    for (std::size_t s = 0; s < n; ++s) {
        if (comp[s] != none) continue;
        comp[s] = next;
        std::deque<std::size_t> q{s};
        while (!q.empty()) {
            std::size_t u = q.front();
            q.pop_front();
            for (std::size_t v : nbr[u]) {
                if (comp[v] == none) {
                    comp[v] = next;
                    q.push_back(v);
                }
            }
        }
        ++next;
    }
    return comp;
}

EigenmapsResult laplacian_eigenmaps_solve(const SparseMatrix& adjacency, Eigen::Index d) {
    if (d < 1) throw invalid_argument("embedding dimension must be positive");
    auto n = static_cast<Eigen::Index>(adjacency.rows());
    Mat A = adjacency.to_dense();
    if ((A - A.transpose()).cwiseAbs().maxCoeff() != 0.0) {
        throw invalid_argument("adjacency must be symmetric");
    }

    auto comp = connected_components(adjacency);
    std::size_t num_comp = 0;
    for (std::size_t c : comp) num_comp = std::max(num_comp, c + 1);
    std::vector<std::size_t> comp_size(num_comp, 0);
    for (std::size_t c : comp) ++comp_size[c];

    // Isolated nodes have zero degree: excluded from the solve, embedded at 0.
    std::vector<Eigen::Index> keep;
    std::size_t solved_components = 0;
    {
        std::vector<bool> counted(num_comp, false);
        for (Eigen::Index i = 0; i < n; ++i) {
            std::size_t c = comp[static_cast<std::size_t>(i)];
            if (comp_size[c] < 2) continue;
            keep.push_back(i);
            if (!counted[c]) {
                counted[c] = true;
                ++solved_components;
            }
        }
    }
    auto m = static_cast<Eigen::Index>(keep.size());
    auto zero_modes = static_cast<Eigen::Index>(solved_components);
    Eigen::Index available = m - zero_modes;
    if (d > available) {
        throw invalid_argument("embedding dimension too large: maximum is " + std::to_string(available));
    }

    Mat As(m, m);
    for (Eigen::Index i = 0; i < m; ++i) {
        for (Eigen::Index j = 0; j < m; ++j) As(i, j) = A(keep[static_cast<std::size_t>(i)],
                                                          keep[static_cast<std::size_t>(j)]);
    }
    Vec deg = As.rowwise().sum();
    Mat L = Mat(deg.asDiagonal()) - As;
    Mat D = Mat(deg.asDiagonal());

    Eigen::GeneralizedSelfAdjointEigenSolver<Mat> solver(L, D);
    if (solver.info() != Eigen::Success) throw numeric_error("generalized eigensolver failed");

    EigenmapsResult out;
    out.z = Mat::Zero(n, d);
    out.eigenvalues = solver.eigenvalues().segment(zero_modes, d);
    Mat vs = solver.eigenvectors().middleCols(zero_modes, d);
    // deterministic sign: first entry of noticeable magnitude made positive
    for (Eigen::Index c = 0; c < d; ++c) {
        for (Eigen::Index r = 0; r < m; ++r) {
            double v = vs(r, c);
            if (std::abs(v) > 1e-10) {
                if (v < 0.0) vs.col(c) = -vs.col(c);
                break;
            }
        }
    }
    for (Eigen::Index i = 0; i < m; ++i) out.z.row(keep[static_cast<std::size_t>(i)]) = vs.row(i);
    return out;
}

} // namespace scx
