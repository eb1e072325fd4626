#include "evaluate.hpp"

#include <limits>

#include "error.hpp"
#include "neighborhood.hpp"
#include "pooling.hpp"

namespace scx {

double auc(const std::vector<double>& positive_scores, const std::vector<double>& negative_scores) {
    if (positive_scores.empty() || negative_scores.empty()) {
        throw invalid_argument("auc needs at least one score of each class");
    }
    double wins = 0.0;
    for (double p : positive_scores) {
        for (double n : negative_scores) {
            if (p > n) {
                wins += 1.0;
            } else if (p == n) {
                wins += 0.5;
            }
        }
    }
    return wins / (static_cast<double>(positive_scores.size()) *
                   static_cast<double>(negative_scores.size()));
}

namespace {

double pair_score(DecoderKind decoder, const Vec& a, const Vec& c) {
    // higher must mean "more similar" for the ranking; the laplacian decoder
    // outputs a distance, so flip its sign
    if (decoder == DecoderKind::Laplacian) return -decode(decoder, a, c);
    return a.dot(c);
}

} // namespace

double reconstruction_auc(const SimplicialComplex& X, int k, const Mat& u_k, DecoderKind decoder) {
    auto nk = static_cast<Eigen::Index>(X.count(k));
    if (u_k.rows() != nk) {
        throw invalid_argument("embedding rows do not match the simplex count at dimension " +
                               std::to_string(k));
    }
    auto adj = per_dim_adjacency(X, k);
    std::vector<double> pos, neg;
    for (Eigen::Index a = 0; a < nk; ++a) {
        for (Eigen::Index c = a + 1; c < nk; ++c) {
            double score = pair_score(decoder, u_k.row(a).transpose(), u_k.row(c).transpose());
            if (adj.at(a, c) > 0.0) {
                pos.push_back(score);
            } else {
                neg.push_back(score);
            }
        }
    }
    if (pos.empty() || neg.empty()) {
        throw invalid_argument("dimension " + std::to_string(k) +
                               " has no pair of each class to rank");
    }
    return auc(pos, neg);
}

double loo_knn_accuracy(const std::vector<Vec>& h, const std::vector<std::string>& labels) {
    if (h.size() != labels.size()) throw invalid_argument("labels do not match embeddings");
    if (h.size() < 2) throw invalid_argument("leave-one-out needs at least two items");
    std::size_t correct = 0;
    for (std::size_t i = 0; i < h.size(); ++i) {
        double best = std::numeric_limits<double>::infinity();
        std::size_t arg = i;
        for (std::size_t j = 0; j < h.size(); ++j) {
            if (j == i) continue;
            double d = (h[i] - h[j]).norm();
            if (d < best) {
                best = d;
                arg = j;
            }
        }
        if (labels[arg] == labels[i]) ++correct;
    }
    return static_cast<double>(correct) / static_cast<double>(h.size());
}

double triplet_satisfaction(const std::vector<Vec>& h, const std::vector<std::string>& labels,
                            double margin) {
    if (h.size() != labels.size()) throw invalid_argument("labels do not match embeddings");
    auto trips = label_triplets(labels);
    if (trips.empty()) throw invalid_argument("labels admit no triplets");
    std::size_t satisfied = 0;
    for (const auto& t : trips) {
        if (triplet_loss(h[t[0]], h[t[1]], h[t[2]], margin) == 0.0) ++satisfied;
    }
    return static_cast<double>(satisfied) / static_cast<double>(trips.size());
}

} // namespace scx
