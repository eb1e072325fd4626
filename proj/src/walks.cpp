#include "walks.hpp"

#include <algorithm>
#include <cstddef>
#include <string>

#include "error.hpp"
#include "neighborhood.hpp"
#include "rng.hpp"

namespace scx {

namespace {

void validate(const RandomWalkConfig& cfg) {
    if (cfg.walks_per_simplex < 1) throw config_error("walks_per_simplex must be positive");
    if (cfg.walk_length < 1) throw config_error("walk_length must be positive");
    if (cfg.window < 1) throw config_error("window must be positive");
}

} // namespace

std::vector<Walk> random_walk_corpus(const SimplicialComplex& X, int k, const RandomWalkConfig& cfg) {
    validate(cfg);
    if (k < 0 || k >= X.dim()) {
        throw invalid_argument("random walks need 0 <= k < dim, got k=" + std::to_string(k));
    }
    std::size_t nk = X.count(k);

    // neighbor lists with cumulative weights from A^k_adj
    std::vector<std::vector<std::size_t>> nbr(nk);
    std::vector<std::vector<double>> cum(nk);
    auto A = per_dim_adjacency(X, k);
    for (const auto& [key, w] : A.entries()) {
        nbr[key.first].push_back(key.second);
        double prev = cum[key.first].empty() ? 0.0 : cum[key.first].back();
        cum[key.first].push_back(prev + w);
    }

    RngState rng = RngState::substream(cfg.seed, static_cast<std::uint64_t>(k));
    std::vector<Walk> corpus;
    corpus.reserve(nk * static_cast<std::size_t>(cfg.walks_per_simplex));
    for (std::size_t start = 0; start < nk; ++start) {
        for (int rep = 0; rep < cfg.walks_per_simplex; ++rep) {
            Walk walk{start};
            while (static_cast<int>(walk.size()) < cfg.walk_length) {
                std::size_t cur = walk.back();
                if (nbr[cur].empty()) break;
                double total = cum[cur].back();
                double u = rng.next_double() * total;
                auto it = std::upper_bound(cum[cur].begin(), cum[cur].end(), u);
                std::size_t idx = static_cast<std::size_t>(it - cum[cur].begin());
                if (idx >= nbr[cur].size()) idx = nbr[cur].size() - 1;
                walk.push_back(nbr[cur][idx]);
            }
            corpus.push_back(std::move(walk));
        }
    }
    return corpus;
}

SimilarityEstimate empirical_similarity(const std::vector<Walk>& corpus, int window,
                                        std::size_t num_simplices) {
    if (corpus.empty()) throw invalid_argument("empty walk corpus");
    if (window < 1) throw config_error("window must be positive");
    auto n = static_cast<Eigen::Index>(num_simplices);
    Mat counts = Mat::Zero(n, n);
    for (const auto& [center, context] : co_occurrence_pairs(corpus, window)) {
        counts(static_cast<Eigen::Index>(center), static_cast<Eigen::Index>(context)) += 1.0;
    }
    SimilarityEstimate est;
    est.populated.assign(num_simplices, false);
    est.p = Mat::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        double total = counts.row(i).sum();
        if (total > 0.0) {
            est.p.row(i) = counts.row(i) / total;
            est.populated[static_cast<std::size_t>(i)] = true;
        }
    }
    return est;
}

std::vector<std::pair<std::size_t, std::size_t>> co_occurrence_pairs(const std::vector<Walk>& corpus,
                                                                     int window) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (const Walk& walk : corpus) {
        auto len = static_cast<std::ptrdiff_t>(walk.size());
        for (std::ptrdiff_t i = 0; i < len; ++i) {
            std::ptrdiff_t lo = std::max<std::ptrdiff_t>(0, i - window);
            std::ptrdiff_t hi = std::min(len - 1, i + window);
            for (std::ptrdiff_t j = lo; j <= hi; ++j) {
                if (j != i) pairs.emplace_back(walk[static_cast<std::size_t>(i)],
                                               walk[static_cast<std::size_t>(j)]);
            }
        }
    }
    return pairs;
}

} // namespace scx
