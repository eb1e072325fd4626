#include "features.hpp"

#include <string>

#include "error.hpp"

namespace scx {

const char* feature_init_name(FeatureInit f) {
    switch (f) {
    case FeatureInit::Structural: return "structural";
    case FeatureInit::Ones: return "ones";
    case FeatureInit::Given: return "given";
    }
    throw invalid_argument("unknown feature init");
}

FeatureInit feature_init_from_name(const std::string& s) {
    if (s == "structural") return FeatureInit::Structural;
    if (s == "ones") return FeatureInit::Ones;
    if (s == "given") return FeatureInit::Given;
    throw config_error("unknown feature init \"" + s + "\"");
}

Mat structural_features_raw(const SimplicialComplex& X, int m) {
    auto rows = static_cast<Eigen::Index>(X.count(m));
    Mat f(rows, 4);
    std::size_t off = X.dim_offset(m);
    for (Eigen::Index i = 0; i < rows; ++i) {
        std::size_t g = off + static_cast<std::size_t>(i);
        f(i, 0) = static_cast<double>(X.cofacet_ordinals(g).size());
        f(i, 1) = static_cast<double>(X.facet_ordinals(g).size());
        f(i, 2) = static_cast<double>(m);
        f(i, 3) = 1.0;
    }
    return f;
}

FeatureSet init_features(const SimplicialComplex& X, FeatureInit scheme, const std::vector<Mat>* given) {
    FeatureSet fs;
    int n = X.dim();
    fs.h.resize(static_cast<std::size_t>(n) + 1);

    switch (scheme) {
    case FeatureInit::Ones:
        for (int m = 0; m <= n; ++m) {
            fs.h[static_cast<std::size_t>(m)] = Mat::Ones(static_cast<Eigen::Index>(X.count(m)), 1);
        }
        break;
    case FeatureInit::Structural:
        for (int m = 0; m <= n; ++m) {
            Mat f = structural_features_raw(X, m);
            for (Eigen::Index c = 0; c < f.cols(); ++c) {
                double mx = f.col(c).maxCoeff();
                if (mx > 0.0) f.col(c) /= mx;
            }
            fs.h[static_cast<std::size_t>(m)] = std::move(f);
        }
        break;
    case FeatureInit::Given: {
        if (given == nullptr || static_cast<int>(given->size()) != n + 1) {
            throw invalid_argument("init_features: given features must cover dimensions 0.." +
                                   std::to_string(n));
        }
        Eigen::Index width = (*given)[0].cols();
        for (int m = 0; m <= n; ++m) {
            const Mat& g = (*given)[static_cast<std::size_t>(m)];
            if (g.rows() != static_cast<Eigen::Index>(X.count(m)) || g.cols() != width) {
                throw invalid_argument("init_features: shape mismatch at dimension " + std::to_string(m) +
                                       " (" + std::to_string(g.rows()) + "x" + std::to_string(g.cols()) + ")");
            }
            require_finite(g, "init_features");
        }
        fs.h = *given;
        break;
    }
    }
    return fs;
}

} // namespace scx
