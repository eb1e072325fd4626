#pragma once

#include <cstdint>
#include <vector>

#include "dense.hpp"
#include "simplex.hpp"

namespace scx {

struct SamplingConfig {
    int points_per_top_simplex = 0; // 0 = vertices only
    std::uint64_t seed = 0;
};

/// Discretization of a complex: its vertices plus uniform barycentric
/// samples on every maximal simplex. The same (complex, cfg) pair always
/// yields the same point set, which makes the metric laws below exact.
std::vector<Vec> sample_points(const SimplicialComplex& X, const SamplingConfig& cfg);

/// Hausdorff distance between the sampled point sets of two complexes.
double hausdorff(const SimplicialComplex& X, const SimplicialComplex& Y, const SamplingConfig& cfg);

/// Symmetric pairwise matrix with exact zero diagonal; each unordered pair
/// is computed once.
Mat distance_matrix(const std::vector<const SimplicialComplex*>& dataset, const SamplingConfig& cfg);

} // namespace scx
