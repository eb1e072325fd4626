#pragma once

#include <string>
#include <vector>

#include "autoencoder.hpp"
#include "dense.hpp"
#include "simplex.hpp"

namespace scx {

/// Rank-based AUC for scores labeled positive/negative; ties count 1/2.
double auc(const std::vector<double>& positive_scores, const std::vector<double>& negative_scores);

/// How well the decoder separates adjacent from non-adjacent k-simplex pairs
/// given that dimension's embedding rows. All unordered same-dimension pairs
/// enter; adjacency (shared cofacet) marks the positive class.
double reconstruction_auc(const SimplicialComplex& X, int k, const Mat& u_k, DecoderKind decoder);

/// Leave-one-out 1-nearest-neighbor accuracy of labeled pooled embeddings;
/// distance ties resolve to the smallest index.
double loo_knn_accuracy(const std::vector<Vec>& h, const std::vector<std::string>& labels);

/// Fraction of label-induced triplets whose hinge is exactly zero.
double triplet_satisfaction(const std::vector<Vec>& h, const std::vector<std::string>& labels,
                            double margin);

} // namespace scx
