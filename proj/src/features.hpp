#pragma once

#include <string>
#include <vector>

#include "dense.hpp"
#include "simplex.hpp"

namespace scx {

enum class FeatureInit { Structural, Ones, Given };
const char* feature_init_name(FeatureInit f);
FeatureInit feature_init_from_name(const std::string& s);

/// Per-dimension feature matrices H_m, m = 0..dim(X). Row i of h[m] belongs
/// to the i-th m-simplex in canonical order.
struct FeatureSet {
    std::vector<Mat> h;

    int max_dim() const { return static_cast<int>(h.size()) - 1; }
};

/// Raw structural row per m-simplex: [#cofacets, #facets, dim, 1].
Mat structural_features_raw(const SimplicialComplex& X, int m);

/// Initial features. Structural rows are column-wise max-normalized per
/// dimension (columns with zero maximum are left untouched). Given matrices
/// must cover every dimension with one common width.
FeatureSet init_features(const SimplicialComplex& X, FeatureInit scheme,
                         const std::vector<Mat>* given = nullptr);

} // namespace scx
