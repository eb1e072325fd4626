#pragma once

#include <utility>
#include <vector>

#include "dense.hpp"
#include "features.hpp"
#include "neighborhood.hpp"
#include "simplex.hpp"

namespace scx {

enum class Scheme { Amps, Cmps, Hcmps };

const char* scheme_name(Scheme s);
Scheme scheme_from_name(const std::string& name);

/// Trainable state of one layer. Which vectors are populated depends on the
/// scheme:
///   AMPS  - theta_same[m], theta_cross[m] for 0 <= m < n
///   CMPS  - theta_same[m], theta_cross[m] for 1 <= m <= n
///   HCMPS - phi_facet[m] (m >= 1), phi_cofacet[m] (m < n), combine[m] (all m)
/// Unused slots stay empty (0x0).
struct LayerParams {
    std::vector<Mat> theta_same;
    std::vector<Mat> theta_cross;
    std::vector<Mat> phi_facet;
    std::vector<Mat> phi_cofacet;
    std::vector<Mat> combine;

    std::vector<Mat*> trainable();
    std::vector<const Mat*> trainable() const;
    LayerParams zeros_like() const;
};

/// Normalized neighborhood operators for one complex, shared by every layer.
/// adj_norm[m] is the self-loop-augmented, symmetrically degree-normalized
/// A^m_adj; up_mean[m] row-normalizes B_m (zero-cofacet rows pass zero);
/// down_mean[m] row-normalizes B_{m-1}^T; facet_pairs[m] lists (m-simplex,
/// facet) ordinal pairs for the face/coface scheme.
struct MessagePassingContext {
    const SimplicialComplex* X = nullptr;
    std::vector<Mat> adj_norm;    // m in 0..n-1
    std::vector<Mat> coadj_norm;  // m in 1..n
    std::vector<Mat> up_mean;     // m in 0..n-1
    std::vector<Mat> down_mean;   // m in 1..n
    std::vector<std::vector<std::pair<Eigen::Index, Eigen::Index>>> facet_pairs; // m in 1..n

    static MessagePassingContext build(const SimplicialComplex& X);
};

/// Forward caches needed by the backward pass.
struct LayerCache {
    FeatureSet input;
    std::vector<Mat> same_in;   // A-hat * H_m (AMPS/CMPS)
    std::vector<Mat> cross_in;  // mean-pooled incidence * neighbor features
    std::vector<Mat> pre;       // pre-activation per updated dimension
    // HCMPS only:
    std::vector<Mat> phi_facet_pre, phi_facet_in;
    std::vector<Mat> phi_cofacet_pre, phi_cofacet_in;
    std::vector<Mat> combine_in;
};

FeatureSet amps_layer(const MessagePassingContext& ctx, const FeatureSet& H, const LayerParams& params,
                      LayerCache* cache = nullptr);
FeatureSet cmps_layer(const MessagePassingContext& ctx, const FeatureSet& H, const LayerParams& params,
                      LayerCache* cache = nullptr);
FeatureSet hcmps_layer(const MessagePassingContext& ctx, const FeatureSet& H, const LayerParams& params,
                       LayerCache* cache = nullptr);

FeatureSet scheme_layer(Scheme s, const MessagePassingContext& ctx, const FeatureSet& H,
                        const LayerParams& params, LayerCache* cache = nullptr);

/// Backward pass of one layer: accumulates parameter gradients into `grads`
/// and returns the gradient with respect to the layer input.
FeatureSet scheme_layer_backward(Scheme s, const MessagePassingContext& ctx, const LayerParams& params,
                                 const LayerCache& cache, const FeatureSet& d_out, LayerParams* grads);

/// Convenience wrappers building the context on the fly.
FeatureSet amps_layer(const SimplicialComplex& X, const FeatureSet& H, const LayerParams& params);
FeatureSet cmps_layer(const SimplicialComplex& X, const FeatureSet& H, const LayerParams& params);
FeatureSet hcmps_layer(const SimplicialComplex& X, const FeatureSet& H, const LayerParams& params);

/// Dimensions whose rows enter the embedding table U for a scheme:
/// X^{<n} for AMPS, X^{>0} for CMPS, all of X for HCMPS.
std::vector<int> embedded_dims(Scheme s, int n);

/// Random parameters for one layer given the input widths per dimension.
LayerParams init_layer_params(Scheme s, const SimplicialComplex& X, const std::vector<Eigen::Index>& in_widths,
                              Eigen::Index out_width, RngState& rng);

/// L-layer encoder stack producing the embedding table over the scheme's
/// embedded simplex set (rows in canonical order).
class CxnEncoder {
public:
    CxnEncoder(const SimplicialComplex& X, Scheme scheme, int layers, Eigen::Index width,
               FeatureInit init, std::uint64_t seed, const std::vector<Mat>* given = nullptr);

    /// Forward pass; caches intermediates when `train` is set.
    Mat encode(bool train = false);

    /// Backward from the gradient of the embedding table; requires a
    /// preceding encode(true). Accumulates into the internal gradients.
    void backward(const Mat& d_embed);

    std::vector<Mat*> parameters();
    std::vector<Mat> collect_gradients() const;
    void zero_gradients();

    Scheme scheme() const { return scheme_; }
    int layers() const { return static_cast<int>(params_.size()); }
    const std::vector<LayerParams>& layer_params() const { return params_; }
    std::vector<LayerParams>& layer_params() { return params_; }
    const std::vector<int>& embedded() const { return embedded_dims_; }
    std::size_t embedded_rows() const;
    /// Row range of dimension k inside the embedding table.
    std::pair<std::size_t, std::size_t> embed_row_range(int k) const;

private:
    const SimplicialComplex* X_;
    MessagePassingContext ctx_;
    Scheme scheme_;
    FeatureSet h0_;
    FeatureSet last_output_;
    std::vector<LayerParams> params_;
    std::vector<LayerParams> grads_;
    std::vector<LayerCache> caches_;
    std::vector<int> embedded_dims_;
};

} // namespace scx
