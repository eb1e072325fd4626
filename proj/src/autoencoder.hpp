#pragma once

#include <cstdint>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "dense.hpp"
#include "message_passing.hpp"
#include "optim.hpp"
#include "simplex.hpp"
#include "walks.hpp"

namespace scx {

enum class EncoderKind { ShallowTable, Cxn };
enum class DecoderKind { Laplacian, InnerProduct, SoftmaxRw };
enum class SimilarityKind { Adjacency, RandomWalk };
enum class LossKind { LapProduct, SquaredError, NegLogLikelihood };

const char* encoder_name(EncoderKind k);
const char* decoder_name(DecoderKind k);
const char* similarity_name(SimilarityKind k);
const char* loss_name(LossKind k);
EncoderKind encoder_from_name(const std::string& s);
DecoderKind decoder_from_name(const std::string& s);
SimilarityKind similarity_from_name(const std::string& s);
LossKind loss_from_name(const std::string& s);

struct AutoencoderConfig {
    EncoderKind encoder = EncoderKind::Cxn;
    Scheme scheme = Scheme::Amps; // cxn only
    int layers = 2;               // cxn only
    FeatureInit feature_init = FeatureInit::Structural;

    DecoderKind decoder = DecoderKind::InnerProduct;
    SimilarityKind similarity = SimilarityKind::Adjacency;
    LossKind loss = LossKind::SquaredError;

    Eigen::Index embed_dim = 16;
    int negative_ratio = 5; // squared-error route
    RandomWalkConfig walk;  // random-walk route

    int epochs = 200;
    int batch_size = 0; // pairs per step; 0 = all
    OptimizerConfig optimizer;
    std::uint64_t seed = 0;
};

/// Rejects anything other than the three supported (decoder, similarity,
/// loss) rows and validates the numeric fields.
void validate_autoencoder_config(const AutoencoderConfig& cfg);

/// Pairwise decoder score. The softmax decoder normalizes over a context
/// set and lives in softmax_decode.
double decode(DecoderKind kind, const Vec& z_a, const Vec& z_c);

/// Softmax scores of every context row given center row a; sums to 1.
Vec softmax_decode(const Mat& u_k, Eigen::Index a);

/// Adjacent unordered pairs (a, c, |CO[a,c]|) at dimension k, a < c.
std::vector<std::tuple<Eigen::Index, Eigen::Index, double>> positive_pairs(const SimplicialComplex& X,
                                                                           int k);

/// The pairs entering one evaluation of L_k.
struct DimensionBatch {
    std::vector<std::tuple<Eigen::Index, Eigen::Index, double>> positives; // (a, c, target)
    std::vector<std::pair<Eigen::Index, Eigen::Index>> negatives;          // target 0
    std::vector<std::pair<Eigen::Index, Eigen::Index>> walk_pairs;         // (center, context)
};

struct AeLossResult {
    double value = 0.0;
    Mat d_u; // gradient w.r.t. the embedding rows of X^k
};

/// L_k and its exact gradient for one dimension's embedding table.
AeLossResult ae_loss(LossKind kind, const Mat& u_k, const DimensionBatch& batch);

struct TrainLogEntry {
    int epoch = 0;
    std::vector<double> per_dim; // aligned with TrainedAutoencoder::trained_dims
    double total = 0.0;
};

struct TrainedAutoencoder {
    Mat u;                                // embedding table in canonical row order
    std::vector<int> embedded;            // dimensions covered by u's row blocks
    std::vector<std::size_t> row_offsets; // start row of each embedded dimension
    std::vector<int> trained_dims;        // dimensions whose pairs entered the loss
    std::vector<TrainLogEntry> log;
    std::vector<std::string> warnings;
};

/// Trains the configured triple on one complex. The eigenmaps row is solved
/// in closed form; the other two run minibatch gradient descent. Deterministic
/// per cfg.seed.
TrainedAutoencoder train_autoencoder(const SimplicialComplex& X, const AutoencoderConfig& cfg);

} // namespace scx
