#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "dense.hpp"
#include "simplex.hpp"

namespace scx {

struct RandomWalkConfig {
    int walks_per_simplex = 10;
    int walk_length = 40; // number of visited simplices, start included
    int window = 2;
    std::uint64_t seed = 0;
};

/// One walk is a sequence of local k-simplex ordinals.
using Walk = std::vector<std::size_t>;

/// Walks over the k-simplex adjacency graph: every k-simplex serves as the
/// start of cfg.walks_per_simplex walks; each step moves to a neighbor with
/// probability proportional to the adjacency weight; a simplex without
/// neighbors ends the walk early. Deterministic per (cfg.seed, k).
std::vector<Walk> random_walk_corpus(const SimplicialComplex& X, int k, const RandomWalkConfig& cfg);

/// Skip-gram style window co-occurrence estimate of p(a | c).
struct SimilarityEstimate {
    Mat p;                         // row-stochastic on populated rows
    std::vector<bool> populated;   // rows with at least one co-occurrence
};

SimilarityEstimate empirical_similarity(const std::vector<Walk>& corpus, int window, std::size_t num_simplices);

/// The (center, context) pairs feeding the likelihood loss, with multiplicity.
std::vector<std::pair<std::size_t, std::size_t>> co_occurrence_pairs(const std::vector<Walk>& corpus,
                                                                     int window);

} // namespace scx
