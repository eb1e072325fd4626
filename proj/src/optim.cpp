#include "optim.hpp"

#include <cmath>

#include "error.hpp"

namespace scx {

const char* optimizer_name(OptimizerKind k) {
    switch (k) {
    case OptimizerKind::Sgd: return "sgd";
    case OptimizerKind::Adam: return "adam";
    }
    throw invalid_argument("unknown optimizer");
}

OptimizerKind optimizer_from_name(const std::string& s) {
    if (s == "sgd") return OptimizerKind::Sgd;
    if (s == "adam") return OptimizerKind::Adam;
    throw config_error("unknown optimizer \"" + s + "\"");
}

void Optimizer::step(const std::vector<Mat*>& params, const std::vector<Mat>& grads) {
    if (params.size() != grads.size()) {
        throw invalid_argument("optimizer: parameter/gradient count mismatch");
    }
    for (std::size_t i = 0; i < params.size(); ++i) {
        if (params[i]->rows() != grads[i].rows() || params[i]->cols() != grads[i].cols()) {
            throw invalid_argument("optimizer: shape mismatch at parameter " + std::to_string(i));
        }
    }

    if (cfg_.kind == OptimizerKind::Sgd) {
        ++step_;
        for (std::size_t i = 0; i < params.size(); ++i) {
            *params[i] -= cfg_.learning_rate * grads[i];
        }
        return;
    }

    if (m_.empty()) {
        for (const Mat* p : params) {
            m_.push_back(Mat::Zero(p->rows(), p->cols()));
            v_.push_back(Mat::Zero(p->rows(), p->cols()));
        }
    }
    if (m_.size() != params.size()) {
        throw invalid_argument("optimizer: parameter count changed between steps");
    }

    ++step_;
    double t = static_cast<double>(step_);
    double corr1 = 1.0 - std::pow(cfg_.beta1, t);
    double corr2 = 1.0 - std::pow(cfg_.beta2, t);
    for (std::size_t i = 0; i < params.size(); ++i) {
        m_[i] = cfg_.beta1 * m_[i] + (1.0 - cfg_.beta1) * grads[i];
        v_[i] = cfg_.beta2 * v_[i] + (1.0 - cfg_.beta2) * grads[i].cwiseProduct(grads[i]);
        Mat mhat = m_[i] / corr1;
        Mat vhat = v_[i] / corr2;
        params[i]->array() -= cfg_.learning_rate * mhat.array() / (vhat.array().sqrt() + cfg_.epsilon);
    }
}

} // namespace scx
