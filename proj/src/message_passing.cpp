#include "message_passing.hpp"

#include <string>

#include "error.hpp"

namespace scx {

const char* scheme_name(Scheme s) {
    switch (s) {
    case Scheme::Amps: return "amps";
    case Scheme::Cmps: return "cmps";
    case Scheme::Hcmps: return "hcmps";
    }
    return "?";
}

Scheme scheme_from_name(const std::string& name) {
    if (name == "amps") return Scheme::Amps;
    if (name == "cmps") return Scheme::Cmps;
    if (name == "hcmps") return Scheme::Hcmps;
    throw config_error("unknown message passing scheme '" + name + "'");
}

std::vector<Mat*> LayerParams::trainable() {
    std::vector<Mat*> out;
    for (auto* group : {&theta_same, &theta_cross, &phi_facet, &phi_cofacet, &combine}) {
        for (Mat& m : *group) {
            if (m.size() > 0) out.push_back(&m);
        }
    }
    return out;
}

std::vector<const Mat*> LayerParams::trainable() const {
    std::vector<const Mat*> out;
    for (auto* group : {&theta_same, &theta_cross, &phi_facet, &phi_cofacet, &combine}) {
        for (const Mat& m : *group) {
            if (m.size() > 0) out.push_back(&m);
        }
    }
    return out;
}

LayerParams LayerParams::zeros_like() const {
    LayerParams z;
    auto zero_group = [](const std::vector<Mat>& src) {
        std::vector<Mat> dst(src.size());
        for (std::size_t i = 0; i < src.size(); ++i) {
            if (src[i].size() > 0) dst[i] = Mat::Zero(src[i].rows(), src[i].cols());
        }
        return dst;
    };
    z.theta_same = zero_group(theta_same);
    z.theta_cross = zero_group(theta_cross);
    z.phi_facet = zero_group(phi_facet);
    z.phi_cofacet = zero_group(phi_cofacet);
    z.combine = zero_group(combine);
    return z;
}

MessagePassingContext MessagePassingContext::build(const SimplicialComplex& X) {
    MessagePassingContext ctx;
    ctx.X = &X;
    int n = X.dim();
    auto slots = static_cast<std::size_t>(n) + 1;
    ctx.adj_norm.resize(slots);
    ctx.coadj_norm.resize(slots);
    ctx.up_mean.resize(slots);
    ctx.down_mean.resize(slots);
    ctx.facet_pairs.resize(slots);

    auto normalize_with_self_loops = [](Mat a) {
        a += Mat::Identity(a.rows(), a.cols());
        Vec deg = a.rowwise().sum();
        Vec scale = deg.array().rsqrt();
        return Mat(scale.asDiagonal() * a * scale.asDiagonal());
    };

    for (int m = 0; m < n; ++m) {
        auto s = static_cast<std::size_t>(m);
        ctx.adj_norm[s] = normalize_with_self_loops(per_dim_adjacency(X, m).to_dense());
        ctx.up_mean[s] = row_normalize(coboundary_incidence(X, m).to_dense());
    }
    for (int m = 1; m <= n; ++m) {
        auto s = static_cast<std::size_t>(m);
        ctx.coadj_norm[s] = normalize_with_self_loops(per_dim_coadjacency(X, m).to_dense());
        ctx.down_mean[s] = row_normalize(coboundary_incidence(X, m - 1).to_dense().transpose());
        auto& pairs = ctx.facet_pairs[s];
        std::size_t off = X.dim_offset(m);
        for (std::size_t local = 0; local < X.count(m); ++local) {
            for (std::size_t fg : X.facet_ordinals(off + local)) {
                pairs.emplace_back(static_cast<Eigen::Index>(local),
                                   static_cast<Eigen::Index>(fg - X.dim_offset(m - 1)));
            }
        }
    }
    return ctx;
}

namespace {

void check_widths(const Mat& theta, const Mat& h, const char* which, int m) {
    if (theta.rows() != h.cols()) {
        throw invalid_argument(std::string(which) + " width mismatch at dimension " + std::to_string(m) +
                               ": parameter expects " + std::to_string(theta.rows()) + ", features have " +
                               std::to_string(h.cols()));
    }
}

Mat relu_mask(const Mat& pre) {
    return (pre.array() > 0.0).cast<double>();
}

// Shared core of AMPS and CMPS: same-dimension convolution plus mean-pooled
// incidence from the neighbor dimension, then relu. `updated` lists the
// dimensions recomputed by the scheme; the rest pass through unchanged.
FeatureSet conv_layer(const MessagePassingContext& ctx, const FeatureSet& H, const LayerParams& params,
                      LayerCache* cache, bool upward) {
    const SimplicialComplex& X = *ctx.X;
    int n = X.dim();
    if (H.max_dim() != n) throw invalid_argument("layer: feature set does not cover all dimensions");

    FeatureSet out;
    out.h.resize(static_cast<std::size_t>(n) + 1);
    if (cache) {
        cache->input = H;
        cache->same_in.assign(static_cast<std::size_t>(n) + 1, Mat());
        cache->cross_in.assign(static_cast<std::size_t>(n) + 1, Mat());
        cache->pre.assign(static_cast<std::size_t>(n) + 1, Mat());
    }

    int lo = upward ? 0 : 1;
    int hi = upward ? n - 1 : n;
    for (int m = 0; m <= n; ++m) {
        auto s = static_cast<std::size_t>(m);
        if (m < lo || m > hi) {
            out.h[s] = H.h[s]; // fixed dimension, passes through bitwise
            continue;
        }
        const Mat& same_op = upward ? ctx.adj_norm[s] : ctx.coadj_norm[s];
        const Mat& cross_op = upward ? ctx.up_mean[s] : ctx.down_mean[s];
        const Mat& neighbor = upward ? H.h[s + 1] : H.h[s - 1];
        const Mat& t_same = params.theta_same[s];
        const Mat& t_cross = params.theta_cross[s];
        check_widths(t_same, H.h[s], "theta_same", m);
        check_widths(t_cross, neighbor, "theta_cross", m);
        if (t_same.cols() != t_cross.cols()) {
            throw invalid_argument("theta output widths disagree at dimension " + std::to_string(m));
        }

        Mat same_in = same_op * H.h[s];
        Mat cross_in = cross_op * neighbor;
        Mat pre = same_in * t_same + cross_in * t_cross;
        out.h[s] = relu(pre);
        if (cache) {
            cache->same_in[s] = std::move(same_in);
            cache->cross_in[s] = std::move(cross_in);
            cache->pre[s] = std::move(pre);
        }
    }
    return out;
}

FeatureSet conv_layer_backward(const MessagePassingContext& ctx, const LayerParams& params,
                               const LayerCache& cache, const FeatureSet& d_out, LayerParams* grads,
                               bool upward) {
    const SimplicialComplex& X = *ctx.X;
    int n = X.dim();

    FeatureSet d_in;
    d_in.h.resize(static_cast<std::size_t>(n) + 1);
    for (int m = 0; m <= n; ++m) {
        auto s = static_cast<std::size_t>(m);
        d_in.h[s] = Mat::Zero(cache.input.h[s].rows(), cache.input.h[s].cols());
    }

    int lo = upward ? 0 : 1;
    int hi = upward ? n - 1 : n;
    for (int m = 0; m <= n; ++m) {
        auto s = static_cast<std::size_t>(m);
        if (m < lo || m > hi) {
            d_in.h[s] += d_out.h[s]; // identity path of the fixed dimension
            continue;
        }
        Mat dz = d_out.h[s].cwiseProduct(relu_mask(cache.pre[s]));
        grads->theta_same[s] += cache.same_in[s].transpose() * dz;
        grads->theta_cross[s] += cache.cross_in[s].transpose() * dz;

        const Mat& same_op = upward ? ctx.adj_norm[s] : ctx.coadj_norm[s];
        const Mat& cross_op = upward ? ctx.up_mean[s] : ctx.down_mean[s];
        auto neighbor = static_cast<std::size_t>(upward ? m + 1 : m - 1);
        d_in.h[s] += same_op.transpose() * (dz * params.theta_same[s].transpose());
        d_in.h[neighbor] += cross_op.transpose() * (dz * params.theta_cross[s].transpose());
    }
    return d_in;
}

} // namespace

FeatureSet amps_layer(const MessagePassingContext& ctx, const FeatureSet& H, const LayerParams& params,
                      LayerCache* cache) {
    return conv_layer(ctx, H, params, cache, /*upward=*/true);
}

FeatureSet cmps_layer(const MessagePassingContext& ctx, const FeatureSet& H, const LayerParams& params,
                      LayerCache* cache) {
    return conv_layer(ctx, H, params, cache, /*upward=*/false);
}

FeatureSet hcmps_layer(const MessagePassingContext& ctx, const FeatureSet& H, const LayerParams& params,
                       LayerCache* cache) {
    const SimplicialComplex& X = *ctx.X;
    int n = X.dim();
    if (H.max_dim() != n) throw invalid_argument("layer: feature set does not cover all dimensions");

    FeatureSet out;
    auto slots = static_cast<std::size_t>(n) + 1;
    out.h.resize(slots);
    if (cache) {
        cache->input = H;
        cache->pre.assign(slots, Mat());
        cache->phi_facet_pre.assign(slots, Mat());
        cache->phi_facet_in.assign(slots, Mat());
        cache->phi_cofacet_pre.assign(slots, Mat());
        cache->phi_cofacet_in.assign(slots, Mat());
        cache->combine_in.assign(slots, Mat());
    }

    for (int m = 0; m <= n; ++m) {
        auto s = static_cast<std::size_t>(m);
        const Mat& comb = params.combine[s];
        if (comb.size() == 0) throw invalid_argument("hcmps: missing combiner at dimension " + std::to_string(m));
        Eigen::Index w_in = H.h[s].cols();
        Eigen::Index w_msg = comb.rows() - w_in;
        if (w_msg <= 0) {
            throw invalid_argument("hcmps: combiner width mismatch at dimension " + std::to_string(m));
        }
        Mat agg = Mat::Zero(H.h[s].rows(), w_msg);

        // Faces: messages from the facets of each m-simplex.
        if (m >= 1 && !ctx.facet_pairs[s].empty()) {
            const auto& pairs = ctx.facet_pairs[s];
            const Mat& phi = params.phi_facet[s];
            if (phi.rows() != H.h[s].cols() + H.h[s - 1].cols()) {
                throw invalid_argument("phi_facet width mismatch at dimension " + std::to_string(m));
            }
            Mat in(static_cast<Eigen::Index>(pairs.size()), H.h[s].cols() + H.h[s - 1].cols());
            for (std::size_t p = 0; p < pairs.size(); ++p) {
                auto r = static_cast<Eigen::Index>(p);
                in.row(r) << H.h[s].row(pairs[p].first), H.h[s - 1].row(pairs[p].second);
            }
            Mat pre = in * phi;
            Mat msg = relu(pre);
            for (std::size_t p = 0; p < pairs.size(); ++p) {
                agg.row(pairs[p].first) += msg.row(static_cast<Eigen::Index>(p));
            }
            if (cache) {
                cache->phi_facet_in[s] = std::move(in);
                cache->phi_facet_pre[s] = std::move(pre);
            }
        }
        // Cofaces: messages from the cofacets, read off the (m+1)-level pair list.
        if (m < n && !ctx.facet_pairs[s + 1].empty()) {
            const auto& pairs = ctx.facet_pairs[s + 1]; // (cofacet, m-simplex)
            const Mat& phi = params.phi_cofacet[s];
            if (phi.rows() != H.h[s].cols() + H.h[s + 1].cols()) {
                throw invalid_argument("phi_cofacet width mismatch at dimension " + std::to_string(m));
            }
            Mat in(static_cast<Eigen::Index>(pairs.size()), H.h[s].cols() + H.h[s + 1].cols());
            for (std::size_t p = 0; p < pairs.size(); ++p) {
                auto r = static_cast<Eigen::Index>(p);
                in.row(r) << H.h[s].row(pairs[p].second), H.h[s + 1].row(pairs[p].first);
            }
            Mat pre = in * phi;
            Mat msg = relu(pre);
            for (std::size_t p = 0; p < pairs.size(); ++p) {
                agg.row(pairs[p].second) += msg.row(static_cast<Eigen::Index>(p));
            }
            if (cache) {
                cache->phi_cofacet_in[s] = std::move(in);
                cache->phi_cofacet_pre[s] = std::move(pre);
            }
        }

        Mat combine_in = concat_cols(H.h[s], agg);
        Mat pre = combine_in * comb;
        out.h[s] = relu(pre);
        if (cache) {
            cache->combine_in[s] = std::move(combine_in);
            cache->pre[s] = std::move(pre);
        }
    }
    return out;
}

namespace {

FeatureSet hcmps_layer_backward(const MessagePassingContext& ctx, const LayerParams& params,
                                const LayerCache& cache, const FeatureSet& d_out, LayerParams* grads) {
    const SimplicialComplex& X = *ctx.X;
    int n = X.dim();

    FeatureSet d_in;
    d_in.h.resize(static_cast<std::size_t>(n) + 1);
    for (int m = 0; m <= n; ++m) {
        auto s = static_cast<std::size_t>(m);
        d_in.h[s] = Mat::Zero(cache.input.h[s].rows(), cache.input.h[s].cols());
    }

    for (int m = n; m >= 0; --m) {
        auto s = static_cast<std::size_t>(m);
        Eigen::Index w_in = cache.input.h[s].cols();
        Mat dz = d_out.h[s].cwiseProduct(relu_mask(cache.pre[s]));
        grads->combine[s] += cache.combine_in[s].transpose() * dz;
        Mat d_combine_in = dz * params.combine[s].transpose();
        d_in.h[s] += d_combine_in.leftCols(w_in);
        Mat d_agg = d_combine_in.rightCols(d_combine_in.cols() - w_in);

        if (m >= 1 && !ctx.facet_pairs[s].empty()) {
            const auto& pairs = ctx.facet_pairs[s];
            Mat d_msg(static_cast<Eigen::Index>(pairs.size()), d_agg.cols());
            for (std::size_t p = 0; p < pairs.size(); ++p) {
                d_msg.row(static_cast<Eigen::Index>(p)) = d_agg.row(pairs[p].first);
            }
            Mat d_pre = d_msg.cwiseProduct(relu_mask(cache.phi_facet_pre[s]));
            grads->phi_facet[s] += cache.phi_facet_in[s].transpose() * d_pre;
            Mat d_pairs = d_pre * params.phi_facet[s].transpose();
            Eigen::Index w_self = cache.input.h[s].cols();
            for (std::size_t p = 0; p < pairs.size(); ++p) {
                auto r = static_cast<Eigen::Index>(p);
                d_in.h[s].row(pairs[p].first) += d_pairs.row(r).head(w_self);
                d_in.h[s - 1].row(pairs[p].second) += d_pairs.row(r).tail(d_pairs.cols() - w_self);
            }
        }
        if (m < n && !ctx.facet_pairs[s + 1].empty()) {
            const auto& pairs = ctx.facet_pairs[s + 1];
            Mat d_msg(static_cast<Eigen::Index>(pairs.size()), d_agg.cols());
            for (std::size_t p = 0; p < pairs.size(); ++p) {
                d_msg.row(static_cast<Eigen::Index>(p)) = d_agg.row(pairs[p].second);
            }
            Mat d_pre = d_msg.cwiseProduct(relu_mask(cache.phi_cofacet_pre[s]));
            grads->phi_cofacet[s] += cache.phi_cofacet_in[s].transpose() * d_pre;
            Mat d_pairs = d_pre * params.phi_cofacet[s].transpose();
            Eigen::Index w_self = cache.input.h[s].cols();
            for (std::size_t p = 0; p < pairs.size(); ++p) {
                auto r = static_cast<Eigen::Index>(p);
                d_in.h[s].row(pairs[p].second) += d_pairs.row(r).head(w_self);
                d_in.h[s + 1].row(pairs[p].first) += d_pairs.row(r).tail(d_pairs.cols() - w_self);
            }
        }
    }
    return d_in;
}

} // namespace

FeatureSet scheme_layer(Scheme s, const MessagePassingContext& ctx, const FeatureSet& H,
                        const LayerParams& params, LayerCache* cache) {
    switch (s) {
    case Scheme::Amps: return amps_layer(ctx, H, params, cache);
    case Scheme::Cmps: return cmps_layer(ctx, H, params, cache);
    case Scheme::Hcmps: return hcmps_layer(ctx, H, params, cache);
    }
    throw invalid_argument("unknown scheme");
}

FeatureSet scheme_layer_backward(Scheme s, const MessagePassingContext& ctx, const LayerParams& params,
                                 const LayerCache& cache, const FeatureSet& d_out, LayerParams* grads) {
    switch (s) {
    case Scheme::Amps: return conv_layer_backward(ctx, params, cache, d_out, grads, /*upward=*/true);
    case Scheme::Cmps: return conv_layer_backward(ctx, params, cache, d_out, grads, /*upward=*/false);
    case Scheme::Hcmps: return hcmps_layer_backward(ctx, params, cache, d_out, grads);
    }
    throw invalid_argument("unknown scheme");
}

FeatureSet amps_layer(const SimplicialComplex& X, const FeatureSet& H, const LayerParams& params) {
    auto ctx = MessagePassingContext::build(X);
    return amps_layer(ctx, H, params);
}

FeatureSet cmps_layer(const SimplicialComplex& X, const FeatureSet& H, const LayerParams& params) {
    auto ctx = MessagePassingContext::build(X);
    return cmps_layer(ctx, H, params);
}

FeatureSet hcmps_layer(const SimplicialComplex& X, const FeatureSet& H, const LayerParams& params) {
    auto ctx = MessagePassingContext::build(X);
    return hcmps_layer(ctx, H, params);
}

std::vector<int> embedded_dims(Scheme s, int n) {
    std::vector<int> dims;
    int lo = (s == Scheme::Cmps) ? 1 : 0;
    int hi = (s == Scheme::Amps) ? n - 1 : n;
    for (int m = lo; m <= hi; ++m) dims.push_back(m);
    return dims;
}

LayerParams init_layer_params(Scheme s, const SimplicialComplex& X, const std::vector<Eigen::Index>& in_widths,
                              Eigen::Index out_width, RngState& rng) {
    int n = X.dim();
    if (static_cast<int>(in_widths.size()) != n + 1) {
        throw invalid_argument("init_layer_params: need one input width per dimension");
    }
    LayerParams p;
    auto slots = static_cast<std::size_t>(n) + 1;
    p.theta_same.resize(slots);
    p.theta_cross.resize(slots);
    p.phi_facet.resize(slots);
    p.phi_cofacet.resize(slots);
    p.combine.resize(slots);

    switch (s) {
    case Scheme::Amps:
        for (int m = 0; m < n; ++m) {
            auto i = static_cast<std::size_t>(m);
            p.theta_same[i] = nonneg_uniform(in_widths[i], out_width, rng);
            p.theta_cross[i] = nonneg_uniform(in_widths[i + 1], out_width, rng);
        }
        break;
    case Scheme::Cmps:
        for (int m = 1; m <= n; ++m) {
            auto i = static_cast<std::size_t>(m);
            p.theta_same[i] = nonneg_uniform(in_widths[i], out_width, rng);
            p.theta_cross[i] = nonneg_uniform(in_widths[i - 1], out_width, rng);
        }
        break;
    case Scheme::Hcmps:
        for (int m = 0; m <= n; ++m) {
            auto i = static_cast<std::size_t>(m);
            if (m >= 1) p.phi_facet[i] = nonneg_uniform(in_widths[i] + in_widths[i - 1], out_width, rng);
            if (m < n) p.phi_cofacet[i] = nonneg_uniform(in_widths[i] + in_widths[i + 1], out_width, rng);
            p.combine[i] = nonneg_uniform(in_widths[i] + out_width, out_width, rng);
        }
        break;
    }
    return p;
}

CxnEncoder::CxnEncoder(const SimplicialComplex& X, Scheme scheme, int layers, Eigen::Index width,
                       FeatureInit init, std::uint64_t seed, const std::vector<Mat>* given)
    : X_(&X), scheme_(scheme) {
    if (layers < 1) throw invalid_argument("encoder needs at least one layer");
    ctx_ = MessagePassingContext::build(X);
    h0_ = init_features(X, init, given);
    embedded_dims_ = embedded_dims(scheme, X.dim());

    std::vector<Eigen::Index> widths;
    for (const Mat& h : h0_.h) widths.push_back(h.cols());
    // Every scheme updates exactly the dimensions it embeds; the rest keep
    // their input width across layers.
    const auto& updated = embedded_dims_;

    for (int l = 0; l < layers; ++l) {
        RngState rng = RngState::substream(seed, static_cast<std::uint64_t>(l));
        params_.push_back(init_layer_params(scheme, X, widths, width, rng));
        for (int m : updated) widths[static_cast<std::size_t>(m)] = width;
    }
    zero_gradients();
}

Mat CxnEncoder::encode(bool train) {
    caches_.clear();
    FeatureSet H = h0_;
    for (std::size_t l = 0; l < params_.size(); ++l) {
        if (train) {
            caches_.emplace_back();
            H = scheme_layer(scheme_, ctx_, H, params_[l], &caches_.back());
        } else {
            H = scheme_layer(scheme_, ctx_, H, params_[l]);
        }
    }
    std::size_t rows = 0;
    for (int m : embedded_dims_) rows += X_->count(m);
    Eigen::Index w = embedded_dims_.empty() ? 0 : H.h[static_cast<std::size_t>(embedded_dims_[0])].cols();
    Mat U(static_cast<Eigen::Index>(rows), w);
    Eigen::Index r = 0;
    for (int m : embedded_dims_) {
        const Mat& hm = H.h[static_cast<std::size_t>(m)];
        U.middleRows(r, hm.rows()) = hm;
        r += hm.rows();
    }
    if (train) last_output_ = H;
    return U;
}

void CxnEncoder::backward(const Mat& d_embed) {
    if (caches_.size() != params_.size()) {
        throw invalid_argument("encoder backward without a cached forward pass");
    }
    FeatureSet d_out;
    int n = X_->dim();
    d_out.h.resize(static_cast<std::size_t>(n) + 1);
    for (int m = 0; m <= n; ++m) {
        const Mat& hm = last_output_.h[static_cast<std::size_t>(m)];
        d_out.h[static_cast<std::size_t>(m)] = Mat::Zero(hm.rows(), hm.cols());
    }
    Eigen::Index r = 0;
    for (int m : embedded_dims_) {
        auto s = static_cast<std::size_t>(m);
        d_out.h[s] = d_embed.middleRows(r, last_output_.h[s].rows());
        r += last_output_.h[s].rows();
    }
    for (std::size_t l = params_.size(); l-- > 0;) {
        d_out = scheme_layer_backward(scheme_, ctx_, params_[l], caches_[l], d_out, &grads_[l]);
    }
}

std::vector<Mat*> CxnEncoder::parameters() {
    std::vector<Mat*> out;
    for (LayerParams& p : params_) {
        for (Mat* m : p.trainable()) out.push_back(m);
    }
    return out;
}

std::vector<Mat> CxnEncoder::collect_gradients() const {
    std::vector<Mat> out;
    for (const LayerParams& g : grads_) {
        for (const Mat* m : g.trainable()) out.push_back(*m);
    }
    return out;
}

void CxnEncoder::zero_gradients() {
    grads_.clear();
    for (const LayerParams& p : params_) grads_.push_back(p.zeros_like());
}

std::size_t CxnEncoder::embedded_rows() const {
    std::size_t rows = 0;
    for (int m : embedded_dims_) rows += X_->count(m);
    return rows;
}

std::pair<std::size_t, std::size_t> CxnEncoder::embed_row_range(int k) const {
    std::size_t r = 0;
    for (int m : embedded_dims_) {
        std::size_t c = X_->count(m);
        if (m == k) return {r, r + c};
        r += c;
    }
    throw invalid_argument("dimension " + std::to_string(k) + " is not embedded by this scheme");
}

} // namespace scx
