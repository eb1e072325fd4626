#include "hausdorff.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "error.hpp"
#include "rng.hpp"

namespace scx {

std::vector<Vec> sample_points(const SimplicialComplex& X, const SamplingConfig& cfg) {
    if (cfg.points_per_top_simplex < 0) throw config_error("points_per_top_simplex must be non-negative");
    if (!X.has_coords()) throw invalid_argument("coordinates required");
    const auto& coords = X.coords();
    auto dim = static_cast<Eigen::Index>(coords.ambient_dim);

    std::vector<Vec> pts;
    auto point_of = [&](VertexId v) {
        const auto& p = coords.points.at(v);
        Vec out(dim);
        for (Eigen::Index i = 0; i < dim; ++i) out(i) = p[static_cast<std::size_t>(i)];
        return out;
    };
    for (std::size_t i = 0; i < X.count(0); ++i) {
        pts.push_back(point_of(X.simplex(i).vertices[0]));
    }

    if (cfg.points_per_top_simplex > 0) {
        // the stream depends only on the seed, so identical complexes sample
        // identical points regardless of surrounding context
        RngState rng = RngState::substream(cfg.seed, 0);
        for (std::size_t g = 0; g < X.size(); ++g) {
            if (!X.is_maximal(g)) continue;
            const auto& vs = X.simplex(g).vertices;
            std::vector<Vec> corners;
            for (VertexId v : vs) corners.push_back(point_of(v));
            for (int s = 0; s < cfg.points_per_top_simplex; ++s) {
                // uniform barycentric weights via normalized exponentials
                Vec w(static_cast<Eigen::Index>(corners.size()));
                double total = 0.0;
                for (Eigen::Index i = 0; i < w.size(); ++i) {
                    w(i) = -std::log(1.0 - rng.next_double());
                    total += w(i);
                }
                Vec p = Vec::Zero(dim);
                if (total <= 0.0) {
                    p = corners[0];
                } else {
                    for (Eigen::Index i = 0; i < w.size(); ++i) {
                        p += (w(i) / total) * corners[static_cast<std::size_t>(i)];
                    }
                }
                pts.push_back(std::move(p));
            }
        }
    }
    return pts;
}

namespace {

double directed_hausdorff(const std::vector<Vec>& from, const std::vector<Vec>& to) {
    double worst = 0.0;
    for (const Vec& p : from) {
        double best = std::numeric_limits<double>::infinity();
        for (const Vec& q : to) best = std::min(best, (p - q).norm());
        worst = std::max(worst, best);
    }
    return worst;
}

} // namespace

double hausdorff(const SimplicialComplex& X, const SimplicialComplex& Y, const SamplingConfig& cfg) {
    if (!X.has_coords() || !Y.has_coords()) throw invalid_argument("coordinates required");
    if (X.coords().ambient_dim != Y.coords().ambient_dim) {
        throw invalid_argument("ambient dimensions differ: " + std::to_string(X.coords().ambient_dim) +
                               " vs " + std::to_string(Y.coords().ambient_dim));
    }
    auto px = sample_points(X, cfg);
    auto py = sample_points(Y, cfg);
    return std::max(directed_hausdorff(px, py), directed_hausdorff(py, px));
}

Mat distance_matrix(const std::vector<const SimplicialComplex*>& dataset, const SamplingConfig& cfg) {
    auto n = static_cast<Eigen::Index>(dataset.size());
    if (n == 0) throw invalid_argument("empty dataset");
    int ambient = -1;
    std::vector<std::vector<Vec>> pts;
    for (const SimplicialComplex* X : dataset) {
        if (!X->has_coords()) throw invalid_argument("coordinates required");
        if (ambient < 0) ambient = X->coords().ambient_dim;
        if (X->coords().ambient_dim != ambient) throw invalid_argument("ambient dimensions differ");
        pts.push_back(sample_points(*X, cfg));
    }
    Mat d = Mat::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = i + 1; j < n; ++j) {
            double v = std::max(directed_hausdorff(pts[static_cast<std::size_t>(i)],
                                                   pts[static_cast<std::size_t>(j)]),
                                directed_hausdorff(pts[static_cast<std::size_t>(j)],
                                                   pts[static_cast<std::size_t>(i)]));
            d(i, j) = v;
            d(j, i) = v;
        }
    }
    return d;
}

} // namespace scx
