#pragma once

#include <Eigen/Dense>

#include "rng.hpp"

namespace scx {

// Row-major dense matrices; row i of a feature matrix is the embedding of
// the i-th simplex in canonical order.
using Mat = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using Vec = Eigen::VectorXd;

/// Throws if any entry is NaN or infinite.
void require_finite(const Mat& m, const char* what);

Mat matmul(const Mat& a, const Mat& b);
Mat add(const Mat& a, const Mat& b);
Mat hadamard(const Mat& a, const Mat& b);
Mat transpose(const Mat& a);
Mat relu(const Mat& a);
Mat sigmoid(const Mat& a);

/// Numerically stable softmax applied to every row; rows sum to 1.
Mat row_softmax(const Mat& a);

/// Divide each row by its sum. Rows that sum to zero are left as zero.
Mat row_normalize(const Mat& a);

Mat concat_cols(const Mat& a, const Mat& b);

double sigmoid_scalar(double x);

/// Uniform init in [-limit, limit] with limit = sqrt(6 / (fan_in + fan_out)).
Mat glorot_uniform(Eigen::Index rows, Eigen::Index cols, RngState& rng);
Mat nonneg_uniform(Eigen::Index rows, Eigen::Index cols, RngState& rng);

/// Entries drawn i.i.d. from N(0, stddev^2).
Mat gaussian(Eigen::Index rows, Eigen::Index cols, double stddev, RngState& rng);

} // namespace scx
