#include "pooling.hpp"

#include <cmath>

#include "error.hpp"
#include "rng.hpp"

namespace scx {

const char* pooling_mode_name(PoolingMode m) { return m == PoolingMode::Stress ? "stress" : "triplet"; }

PoolingMode pooling_mode_from_name(const std::string& s) {
    if (s == "stress") return PoolingMode::Stress;
    if (s == "triplet") return PoolingMode::Triplet;
    throw config_error("unknown pooling mode '" + s + "'");
}

namespace {

void check_pool_shapes(const Mat& u, const Mat& w) {
    if (w.rows() != w.cols()) throw invalid_argument("pooling matrix must be square");
    if (u.cols() != w.rows()) {
        throw invalid_argument("pooling width mismatch: table has " + std::to_string(u.cols()) +
                               " columns, W is " + std::to_string(w.rows()) + "x" +
                               std::to_string(w.cols()));
    }
    if (u.rows() == 0) throw invalid_argument("cannot pool an empty embedding table");
}

} // namespace

Vec attention_weights(const Mat& u, const Mat& w) {
    check_pool_shapes(u, w);
    Vec t = u.colwise().sum().transpose();
    Vec c = (w * t).cwiseMax(0.0);
    Vec a = u * c;
    Vec out(a.size());
    for (Eigen::Index i = 0; i < a.size(); ++i) out(i) = sigmoid_scalar(a(i));
    return out;
}

PoolResult pool(const Mat& u, const Mat& w) {
    PoolResult res;
    res.weights = attention_weights(u, w);
    res.h = u.transpose() * res.weights;
    return res;
}

Mat pool_backward(const Mat& u, const Mat& w, const Vec& d_h) {
    check_pool_shapes(u, w);
    if (d_h.size() != u.cols()) throw invalid_argument("pool gradient width mismatch");
    Vec t = u.colwise().sum().transpose();
    Vec pre = w * t;
    Vec c = pre.cwiseMax(0.0);
    Vec a = u * c;

    // h = sum_m sigmoid(a_m) z_m
    Vec d_wgt = u * d_h;                      // dL/d sigmoid(a_m)
    Vec d_a(a.size());
    for (Eigen::Index m = 0; m < a.size(); ++m) {
        double s = sigmoid_scalar(a(m));
        d_a(m) = d_wgt(m) * s * (1.0 - s);
    }
    Vec d_c = u.transpose() * d_a;
    Vec d_pre = (pre.array() > 0.0).select(d_c, 0.0);
    return d_pre * t.transpose();
}

double stress_loss(const std::vector<Vec>& h, const Mat& d) {
    return stress_loss_with_grad(h, d).value;
}

StressGrad stress_loss_with_grad(const std::vector<Vec>& h, const Mat& d) {
    auto m = static_cast<Eigen::Index>(h.size());
    if (d.rows() != m || d.cols() != m) {
        throw invalid_argument("distance matrix is " + std::to_string(d.rows()) + "x" +
                               std::to_string(d.cols()) + " but " + std::to_string(m) +
                               " embeddings were given");
    }
    StressGrad out;
    out.d_h.assign(h.size(), Vec());
    for (std::size_t i = 0; i < h.size(); ++i) out.d_h[i] = Vec::Zero(h[i].size());
    for (Eigen::Index i = 0; i < m; ++i) {
        for (Eigen::Index j = 0; j < m; ++j) {
            Vec diff = h[static_cast<std::size_t>(i)] - h[static_cast<std::size_t>(j)];
            double r = diff.norm();
            double e = r - d(i, j);
            out.value += e * e;
            if (r > 0.0) {
                // ordered pair (i, j); the mirrored pair contributes the rest
                Vec g = (2.0 * e / r) * diff;
                out.d_h[static_cast<std::size_t>(i)] += g;
                out.d_h[static_cast<std::size_t>(j)] -= g;
            }
        }
    }
    return out;
}

double triplet_loss(const Vec& h, const Vec& h_pos, const Vec& h_neg, double margin) {
    double v = (h - h_pos).squaredNorm() - (h - h_neg).squaredNorm() + margin;
    return v > 0.0 ? v : 0.0;
}

TripletGrad triplet_loss_with_grad(const Vec& h, const Vec& h_pos, const Vec& h_neg, double margin) {
    TripletGrad out;
    out.d_h = Vec::Zero(h.size());
    out.d_pos = Vec::Zero(h.size());
    out.d_neg = Vec::Zero(h.size());
    double v = (h - h_pos).squaredNorm() - (h - h_neg).squaredNorm() + margin;
    if (v <= 0.0) return out;
    out.value = v;
    out.d_h = 2.0 * (h_neg - h_pos);
    out.d_pos = -2.0 * (h - h_pos);
    out.d_neg = 2.0 * (h - h_neg);
    return out;
}

std::vector<std::array<std::size_t, 3>> label_triplets(const std::vector<std::string>& labels) {
    std::vector<std::array<std::size_t, 3>> out;
    for (std::size_t a = 0; a < labels.size(); ++a) {
        for (std::size_t p = 0; p < labels.size(); ++p) {
            if (p == a || labels[p] != labels[a]) continue;
            for (std::size_t n = 0; n < labels.size(); ++n) {
                if (labels[n] == labels[a]) continue;
                out.push_back({a, p, n});
            }
        }
    }
    return out;
}

PoolingTrainResult train_pooling(const std::vector<Mat>& tables, const PoolingConfig& cfg,
                                 const Mat* distance, const std::vector<std::string>* labels) {
    if (tables.empty()) throw invalid_argument("empty dataset");
    Eigen::Index d = tables[0].cols();
    for (const Mat& u : tables) {
        if (u.cols() != d) throw invalid_argument("embedding tables disagree on width");
        if (u.rows() == 0) throw invalid_argument("cannot pool an empty embedding table");
    }
    if (cfg.epochs < 0) throw config_error("epochs must be non-negative");
    if (cfg.margin < 0.0) throw config_error("margin must be non-negative");

    std::vector<std::array<std::size_t, 3>> triplets;
    if (cfg.mode == PoolingMode::Stress) {
        if (!distance) throw config_error("stress mode needs a distance matrix");
    } else {
        if (!labels) throw config_error("triplet mode needs labels");
        if (labels->size() != tables.size()) throw invalid_argument("one label per complex required");
        triplets = label_triplets(*labels);
        if (triplets.empty()) throw config_error("labels admit no triplets");
    }

    PoolingTrainResult res;
    RngState rng = RngState::substream(cfg.seed, 0xF00ULL);
    res.w = gaussian(d, d, 0.1, rng);
    // Rescale the draw so the largest initial attention score has unit
    // magnitude: large tables would otherwise saturate every sigmoid and the
    // gradient through them vanishes before training starts.
    double smax = 0.0;
    for (const Mat& u : tables) {
        Vec t = u.colwise().sum().transpose();
        Vec c = (res.w * t).cwiseMax(0.0);
        double s = (u * c).cwiseAbs().maxCoeff();
        if (s > smax) smax = s;
    }
    if (smax > 1.0) res.w /= smax;
    Optimizer optimizer(cfg.optimizer);

    auto pool_all = [&]() {
        std::vector<Vec> hs;
        hs.reserve(tables.size());
        for (const Mat& u : tables) hs.push_back(pool(u, res.w).h);
        return hs;
    };

    for (int epoch = 0; epoch < cfg.epochs; ++epoch) {
        auto hs = pool_all();
        std::vector<Vec> d_h(tables.size(), Vec::Zero(d));
        double value = 0.0;
        if (cfg.mode == PoolingMode::Stress) {
            auto sg = stress_loss_with_grad(hs, *distance);
            value = sg.value;
            d_h = std::move(sg.d_h);
        } else {
            for (const auto& [a, p, n] : triplets) {
                auto tg = triplet_loss_with_grad(hs[a], hs[p], hs[n], cfg.margin);
                value += tg.value;
                d_h[a] += tg.d_h;
                d_h[p] += tg.d_pos;
                d_h[n] += tg.d_neg;
            }
        }
        if (!std::isfinite(value)) throw numeric_error("pooling training diverged at epoch " + std::to_string(epoch));
        res.log.push_back(value);

        Mat grad = Mat::Zero(d, d);
        for (std::size_t i = 0; i < tables.size(); ++i) grad += pool_backward(tables[i], res.w, d_h[i]);
        optimizer.step({&res.w}, {grad});
    }

    for (const Mat& u : tables) {
        auto pr = pool(u, res.w);
        res.h.push_back(std::move(pr.h));
        res.weights.push_back(std::move(pr.weights));
    }
    return res;
}

} // namespace scx
