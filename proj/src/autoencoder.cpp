#include "autoencoder.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>

#include "eigenmaps.hpp"
#include "error.hpp"
#include "neighborhood.hpp"

namespace scx {

const char* encoder_name(EncoderKind k) {
    return k == EncoderKind::ShallowTable ? "shallow_table" : "cxn";
}
const char* decoder_name(DecoderKind k) {
    switch (k) {
    case DecoderKind::Laplacian: return "laplacian";
    case DecoderKind::InnerProduct: return "inner_product";
    case DecoderKind::SoftmaxRw: return "softmax_rw";
    }
    return "?";
}
const char* similarity_name(SimilarityKind k) {
    return k == SimilarityKind::Adjacency ? "adjacency" : "random_walk";
}
const char* loss_name(LossKind k) {
    switch (k) {
    case LossKind::LapProduct: return "lap_product";
    case LossKind::SquaredError: return "squared_error";
    case LossKind::NegLogLikelihood: return "neg_log_likelihood";
    }
    return "?";
}

EncoderKind encoder_from_name(const std::string& s) {
    if (s == "shallow_table") return EncoderKind::ShallowTable;
    if (s == "cxn") return EncoderKind::Cxn;
    throw config_error("unknown encoder '" + s + "'");
}
DecoderKind decoder_from_name(const std::string& s) {
    if (s == "laplacian") return DecoderKind::Laplacian;
    if (s == "inner_product") return DecoderKind::InnerProduct;
    if (s == "softmax_rw") return DecoderKind::SoftmaxRw;
    throw config_error("unknown decoder '" + s + "'");
}
SimilarityKind similarity_from_name(const std::string& s) {
    if (s == "adjacency") return SimilarityKind::Adjacency;
    if (s == "random_walk") return SimilarityKind::RandomWalk;
    throw config_error("unknown similarity '" + s + "'");
}
LossKind loss_from_name(const std::string& s) {
    if (s == "lap_product") return LossKind::LapProduct;
    if (s == "squared_error") return LossKind::SquaredError;
    if (s == "neg_log_likelihood") return LossKind::NegLogLikelihood;
    throw config_error("unknown loss '" + s + "'");
}

void validate_autoencoder_config(const AutoencoderConfig& cfg) {
    bool row1 = cfg.decoder == DecoderKind::Laplacian && cfg.similarity == SimilarityKind::Adjacency &&
                cfg.loss == LossKind::LapProduct;
    bool row2 = cfg.decoder == DecoderKind::InnerProduct && cfg.similarity == SimilarityKind::Adjacency &&
                cfg.loss == LossKind::SquaredError;
    bool row3 = cfg.decoder == DecoderKind::SoftmaxRw && cfg.similarity == SimilarityKind::RandomWalk &&
                cfg.loss == LossKind::NegLogLikelihood;
    if (!row1 && !row2 && !row3) {
        throw config_error(std::string("unsupported decoder/similarity/loss combination: ") +
                           decoder_name(cfg.decoder) + "/" + similarity_name(cfg.similarity) + "/" +
                           loss_name(cfg.loss));
    }
    if (row1 && cfg.encoder != EncoderKind::ShallowTable) {
        throw config_error("the laplacian row is solved in closed form and requires the shallow_table encoder");
    }
    if (cfg.embed_dim < 1) throw config_error("embed_dim must be positive");
    if (cfg.negative_ratio < 0) throw config_error("negative_ratio must be non-negative");
    if (cfg.epochs < 0) throw config_error("epochs must be non-negative");
    if (cfg.batch_size < 0) throw config_error("batch_size must be non-negative");
    if (cfg.encoder == EncoderKind::Cxn && cfg.layers < 1) throw config_error("layers must be positive");
}

double decode(DecoderKind kind, const Vec& z_a, const Vec& z_c) {
    if (z_a.size() != z_c.size()) throw invalid_argument("decoder operands differ in width");
    switch (kind) {
    case DecoderKind::Laplacian: return (z_a - z_c).squaredNorm();
    case DecoderKind::InnerProduct: return z_a.dot(z_c);
    case DecoderKind::SoftmaxRw:
        throw invalid_argument("softmax decoding needs a context set; use softmax_decode");
    }
    throw invalid_argument("unknown decoder");
}

Vec softmax_decode(const Mat& u_k, Eigen::Index a) {
    if (u_k.rows() == 0) throw invalid_argument("softmax decoder: empty context");
    Vec s = u_k * u_k.row(a).transpose();
    double mx = s.maxCoeff();
    Vec e = (s.array() - mx).exp();
    return e / e.sum();
}

std::vector<std::tuple<Eigen::Index, Eigen::Index, double>> positive_pairs(const SimplicialComplex& X,
                                                                           int k) {
    std::vector<std::tuple<Eigen::Index, Eigen::Index, double>> out;
    auto A = per_dim_adjacency(X, k);
    for (const auto& [key, w] : A.entries()) {
        if (key.first < key.second) {
            out.emplace_back(static_cast<Eigen::Index>(key.first), static_cast<Eigen::Index>(key.second), w);
        }
    }
    return out;
}

AeLossResult ae_loss(LossKind kind, const Mat& u_k, const DimensionBatch& batch) {
    AeLossResult res;
    res.d_u = Mat::Zero(u_k.rows(), u_k.cols());

    switch (kind) {
    case LossKind::LapProduct:
        for (const auto& [a, c, t] : batch.positives) {
            Vec diff = (u_k.row(a) - u_k.row(c)).transpose();
            res.value += t * diff.squaredNorm();
            res.d_u.row(a) += 2.0 * t * diff.transpose();
            res.d_u.row(c) -= 2.0 * t * diff.transpose();
        }
        break;

    case LossKind::SquaredError: {
        auto accumulate = [&](Eigen::Index a, Eigen::Index c, double target) {
            double e = u_k.row(a).dot(u_k.row(c)) - target;
            res.value += e * e;
            res.d_u.row(a) += 2.0 * e * u_k.row(c);
            res.d_u.row(c) += 2.0 * e * u_k.row(a);
        };
        for (const auto& [a, c, t] : batch.positives) accumulate(a, c, t);
        for (const auto& [a, b] : batch.negatives) accumulate(a, b, 0.0);
        break;
    }

    case LossKind::NegLogLikelihood: {
        if (batch.walk_pairs.empty()) break;
        // group context counts per center; one softmax per distinct center
        std::map<Eigen::Index, std::map<Eigen::Index, double>> by_center;
        for (const auto& [c, a] : batch.walk_pairs) by_center[c][a] += 1.0;
        for (const auto& [center, counts] : by_center) {
            Vec s = u_k * u_k.row(center).transpose();
            double mx = s.maxCoeff();
            Vec ex = (s.array() - mx).exp().matrix();
            double z = ex.sum();
            Vec p = ex / z;
            double total = 0.0;
            for (const auto& [a, cnt] : counts) {
                res.value += cnt * (std::log(z) - (s(a) - mx));
                total += cnt;
            }
            Vec g = total * p;
            for (const auto& [a, cnt] : counts) g(a) -= cnt;
            // s_b = u_b . u_center: both slots pick up gradient mass
            res.d_u += g * u_k.row(center);
            res.d_u.row(center) += (u_k.transpose() * g).transpose();
        }
        break;
    }
    }
    if (!std::isfinite(res.value)) throw numeric_error("autoencoder loss is not finite");
    return res;
}

namespace {

struct ShallowEncoder {
    Mat table;
    Mat grad;

    Mat encode() const { return table; }
};

std::vector<int> trained_dims_for(const AutoencoderConfig& cfg, int n) {
    std::vector<int> dims;
    if (cfg.encoder == EncoderKind::ShallowTable) {
        for (int k = 0; k < n; ++k) dims.push_back(k);
    } else {
        for (int k : embedded_dims(cfg.scheme, n)) {
            if (k < n) dims.push_back(k); // pairs need cofacets one level up
        }
    }
    return dims;
}

std::vector<int> embedded_dims_for(const AutoencoderConfig& cfg, int n) {
    if (cfg.encoder == EncoderKind::ShallowTable) {
        std::vector<int> dims;
        for (int k = 0; k < n; ++k) dims.push_back(k);
        return dims;
    }
    return embedded_dims(cfg.scheme, n);
}

TrainedAutoencoder solve_eigenmaps_route(const SimplicialComplex& X, const AutoencoderConfig& cfg) {
    TrainedAutoencoder out;
    out.embedded = embedded_dims_for(cfg, X.dim());
    out.trained_dims = out.embedded;
    std::size_t rows = 0;
    for (int k : out.embedded) {
        out.row_offsets.push_back(rows);
        rows += X.count(k);
    }
    out.u = Mat::Zero(static_cast<Eigen::Index>(rows), cfg.embed_dim);
    for (std::size_t i = 0; i < out.embedded.size(); ++i) {
        int k = out.embedded[i];
        auto res = laplacian_eigenmaps_solve(per_dim_adjacency(X, k), cfg.embed_dim);
        out.u.middleRows(static_cast<Eigen::Index>(out.row_offsets[i]),
                         static_cast<Eigen::Index>(X.count(k))) = res.z;
    }
    return out;
}

} // namespace

TrainedAutoencoder train_autoencoder(const SimplicialComplex& X, const AutoencoderConfig& cfg) {
    validate_autoencoder_config(cfg);
    int n = X.dim();
    if (n == 0) throw config_error("cannot train on a 0-dimensional complex: no pairs exist");

    if (cfg.loss == LossKind::LapProduct) return solve_eigenmaps_route(X, cfg);

    TrainedAutoencoder out;
    out.embedded = embedded_dims_for(cfg, n);
    out.trained_dims = trained_dims_for(cfg, n);
    if (out.trained_dims.empty()) throw config_error("encoder embeds no trainable dimension");

    // encoder state
    std::unique_ptr<CxnEncoder> cxn;
    ShallowEncoder shallow;
    std::size_t total_rows = 0;
    for (int k : out.embedded) {
        out.row_offsets.push_back(total_rows);
        total_rows += X.count(k);
    }
    if (cfg.encoder == EncoderKind::Cxn) {
        cxn = std::make_unique<CxnEncoder>(X, cfg.scheme, cfg.layers, cfg.embed_dim, cfg.feature_init,
                                           cfg.seed);
    } else {
        RngState rng = RngState::substream(cfg.seed, 0x5eedULL);
        shallow.table = gaussian(static_cast<Eigen::Index>(total_rows), cfg.embed_dim, 0.1, rng);
        shallow.grad = Mat::Zero(shallow.table.rows(), shallow.table.cols());
    }

    auto row_range = [&](int k) -> std::pair<std::size_t, std::size_t> {
        for (std::size_t i = 0; i < out.embedded.size(); ++i) {
            if (out.embedded[i] == k) return {out.row_offsets[i], out.row_offsets[i] + X.count(k)};
        }
        throw invalid_argument("dimension not embedded");
    };

    // fixed pair sets per trained dimension
    std::map<int, std::vector<std::tuple<Eigen::Index, Eigen::Index, double>>> pos;
    std::map<int, std::vector<std::pair<Eigen::Index, Eigen::Index>>> walk_pairs;
    for (int k : out.trained_dims) {
        if (cfg.similarity == SimilarityKind::Adjacency) {
            pos[k] = positive_pairs(X, k);
            if (pos[k].empty()) {
                out.warnings.push_back("no adjacent pairs at dimension " + std::to_string(k) +
                                       "; its loss term is 0");
            }
        } else {
            RandomWalkConfig wcfg = cfg.walk;
            wcfg.seed = cfg.seed ^ 0x57a1cULL; // decorrelate from parameter-init streams
            auto corpus = random_walk_corpus(X, k, wcfg);
            for (const auto& [c, a] : co_occurrence_pairs(corpus, wcfg.window)) {
                walk_pairs[k].emplace_back(static_cast<Eigen::Index>(c), static_cast<Eigen::Index>(a));
            }
            if (walk_pairs[k].empty()) {
                out.warnings.push_back("no co-occurrences at dimension " + std::to_string(k) +
                                       "; its loss term is 0");
            }
        }
    }

    Optimizer optimizer(cfg.optimizer);
    auto forward = [&]() { return cfg.encoder == EncoderKind::Cxn ? cxn->encode(false) : shallow.table; };

    for (int epoch = 0; epoch < cfg.epochs; ++epoch) {
        RngState erng = RngState::substream(cfg.seed, (1ULL << 32) + static_cast<std::uint64_t>(epoch));
        TrainLogEntry entry;
        entry.epoch = epoch;

        for (int k : out.trained_dims) {
            double dim_loss = 0.0;
            auto nk = static_cast<Eigen::Index>(X.count(k));
            auto [lo, hi] = row_range(k);

            // assemble this epoch's (shuffled) work list for dimension k
            std::size_t work = cfg.similarity == SimilarityKind::Adjacency ? pos[k].size()
                                                                           : walk_pairs[k].size();
            std::vector<std::size_t> order(work);
            for (std::size_t i = 0; i < work; ++i) order[i] = i;
            for (std::size_t i = work; i > 1; --i) { // Fisher-Yates
                std::size_t j = erng.next_below(i);
                std::swap(order[i - 1], order[j]);
            }
            std::size_t batch = cfg.batch_size == 0 ? work : static_cast<std::size_t>(cfg.batch_size);
            if (work == 0) {
                entry.per_dim.push_back(0.0);
                continue;
            }

            for (std::size_t start = 0; start < work; start += batch) {
                std::size_t stop = std::min(work, start + batch);
                DimensionBatch db;
                if (cfg.similarity == SimilarityKind::Adjacency) {
                    for (std::size_t i = start; i < stop; ++i) {
                        db.positives.push_back(pos[k][order[i]]);
                        auto a = std::get<0>(db.positives.back());
                        for (int r = 0; r < cfg.negative_ratio; ++r) {
                            Eigen::Index b;
                            do {
                                b = static_cast<Eigen::Index>(erng.next_below(static_cast<std::uint64_t>(nk)));
                            } while (b == a && nk > 1);
                            db.negatives.emplace_back(a, b);
                        }
                    }
                } else {
                    for (std::size_t i = start; i < stop; ++i) db.walk_pairs.push_back(walk_pairs[k][order[i]]);
                }

                Mat u = cfg.encoder == EncoderKind::Cxn ? cxn->encode(true) : shallow.table;
                Mat u_k = u.middleRows(static_cast<Eigen::Index>(lo), nk);
                AeLossResult res;
                try {
                    res = ae_loss(cfg.loss, u_k, db);
                } catch (const Error& e) {
                    throw numeric_error(std::string(e.what()) + " (epoch " + std::to_string(epoch) + ")");
                }
                dim_loss += res.value;

                Mat d_full = Mat::Zero(u.rows(), u.cols());
                d_full.middleRows(static_cast<Eigen::Index>(lo), nk) = res.d_u;
                if (cfg.encoder == EncoderKind::Cxn) {
                    cxn->zero_gradients();
                    cxn->backward(d_full);
                    optimizer.step(cxn->parameters(), cxn->collect_gradients());
                } else {
                    optimizer.step({&shallow.table}, {d_full});
                }
            }
            entry.per_dim.push_back(dim_loss);
        }
        entry.total = 0.0;
        for (double v : entry.per_dim) entry.total += v;
        if (!std::isfinite(entry.total)) {
            throw numeric_error("training diverged at epoch " + std::to_string(epoch));
        }
        out.log.push_back(std::move(entry));
    }

    out.u = forward();
    require_finite(out.u, "embedding table");
    return out;
}

} // namespace scx
