#pragma once

#include <string>
#include <vector>

#include "dense.hpp"

namespace scx {

enum class OptimizerKind { Sgd, Adam };
const char* optimizer_name(OptimizerKind k);
OptimizerKind optimizer_from_name(const std::string& s);

struct OptimizerConfig {
    OptimizerKind kind = OptimizerKind::Adam;
    double learning_rate = 0.05;
    double beta1 = 0.9;
    double beta2 = 0.999;
    double epsilon = 1e-8;
};

/// Owns the per-parameter moment state. The parameter list must have the
/// same length and shapes on every step.
class Optimizer {
public:
    explicit Optimizer(OptimizerConfig cfg) : cfg_(cfg) {}

    void step(const std::vector<Mat*>& params, const std::vector<Mat>& grads);

    const OptimizerConfig& config() const { return cfg_; }
    long step_count() const { return step_; }

private:
    OptimizerConfig cfg_;
    long step_ = 0;
    std::vector<Mat> m_; // first moments (adam)
    std::vector<Mat> v_; // second moments (adam)
};

} // namespace scx
