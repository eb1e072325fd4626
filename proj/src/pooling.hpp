#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "dense.hpp"
#include "optim.hpp"

namespace scx {

enum class PoolingMode { Stress, Triplet };
const char* pooling_mode_name(PoolingMode m);
PoolingMode pooling_mode_from_name(const std::string& s);

struct PoolingConfig {
    PoolingMode mode = PoolingMode::Stress;
    double margin = 1.0; // triplet mode
    int epochs = 300;
    OptimizerConfig optimizer;
    std::uint64_t seed = 0;
};

/// Attention weight per embedding row: w_m = sigmoid(z_m . relu(W sum_n z_n)).
Vec attention_weights(const Mat& u, const Mat& w);

struct PoolResult {
    Vec h;       // attention-weighted sum of the rows of u
    Vec weights; // the w_m, each in (0, 1)
};

PoolResult pool(const Mat& u, const Mat& w);

/// Gradient of a scalar with respect to W, given its gradient d_h at the
/// pooled vector. Only W is trainable; the embedding table stays fixed.
Mat pool_backward(const Mat& u, const Mat& w, const Vec& d_h);

/// Sum over ordered pairs of (||h_i - h_j|| - d_ij)^2; the subgradient at
/// coincident points is taken as zero.
double stress_loss(const std::vector<Vec>& h, const Mat& d);

struct StressGrad {
    double value = 0.0;
    std::vector<Vec> d_h;
};
StressGrad stress_loss_with_grad(const std::vector<Vec>& h, const Mat& d);

/// max(0, ||h - h_pos||^2 - ||h - h_neg||^2 + margin).
double triplet_loss(const Vec& h, const Vec& h_pos, const Vec& h_neg, double margin);

struct TripletGrad {
    double value = 0.0;
    Vec d_h, d_pos, d_neg;
};
TripletGrad triplet_loss_with_grad(const Vec& h, const Vec& h_pos, const Vec& h_neg, double margin);

/// Index triples (anchor, positive, negative) induced by class labels:
/// same-label positives, different-label negatives, anchor != positive.
std::vector<std::array<std::size_t, 3>> label_triplets(const std::vector<std::string>& labels);

struct PoolingTrainResult {
    Mat w;
    std::vector<Vec> h;       // pooled embedding per complex, final W
    std::vector<Vec> weights; // attention weights per complex, final W
    std::vector<double> log;  // objective per epoch (before that epoch's update)
};

/// Trains the shared W on the whole dataset: stress mode fits pairwise
/// distances to `distance`; triplet mode runs the hinge over label_triplets.
/// Tables stay frozen. Deterministic per cfg.seed.
PoolingTrainResult train_pooling(const std::vector<Mat>& tables, const PoolingConfig& cfg,
                                 const Mat* distance, const std::vector<std::string>* labels);

} // namespace scx
