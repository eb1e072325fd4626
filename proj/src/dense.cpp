#include "dense.hpp"

#include <cmath>
#include <string>

#include "error.hpp"

namespace scx {

namespace {

std::string shape_of(const Mat& m) {
    return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

void require_same_shape(const Mat& a, const Mat& b, const char* op) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw invalid_argument(std::string(op) + ": shape mismatch " + shape_of(a) + " vs " + shape_of(b));
    }
}

} // namespace

void require_finite(const Mat& m, const char* what) {
    if (!m.allFinite()) {
        throw numeric_error(std::string(what) + ": non-finite values");
    }
}

Mat matmul(const Mat& a, const Mat& b) {
    if (a.cols() != b.rows()) {
        throw invalid_argument("matmul: shape mismatch " + shape_of(a) + " vs " + shape_of(b));
    }
    return a * b;
}

Mat add(const Mat& a, const Mat& b) {
    require_same_shape(a, b, "add");
    return a + b;
}

Mat hadamard(const Mat& a, const Mat& b) {
    require_same_shape(a, b, "hadamard");
    return a.cwiseProduct(b);
}

Mat transpose(const Mat& a) {
    return a.transpose();
}

Mat relu(const Mat& a) {
    return a.cwiseMax(0.0);
}

double sigmoid_scalar(double x) {
    if (x >= 0.0) {
        return 1.0 / (1.0 + std::exp(-x));
    }
    double e = std::exp(x);
    return e / (1.0 + e);
}

Mat sigmoid(const Mat& a) {
    return a.unaryExpr([](double x) { return sigmoid_scalar(x); });
}

Mat row_softmax(const Mat& a) {
    Mat out(a.rows(), a.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        double mx = a.row(i).maxCoeff();
        Eigen::RowVectorXd e = (a.row(i).array() - mx).exp();
        out.row(i) = e / e.sum();
    }
    return out;
}

Mat row_normalize(const Mat& a) {
    Mat out = a;
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        double s = a.row(i).sum();
        if (s != 0.0) out.row(i) /= s;
    }
    return out;
}

Mat concat_cols(const Mat& a, const Mat& b) {
    if (a.rows() != b.rows()) {
        throw invalid_argument("concat_cols: shape mismatch " + shape_of(a) + " vs " + shape_of(b));
    }
    Mat out(a.rows(), a.cols() + b.cols());
    out.leftCols(a.cols()) = a;
    out.rightCols(b.cols()) = b;
    return out;
}

Mat glorot_uniform(Eigen::Index rows, Eigen::Index cols, RngState& rng) {
    double limit = std::sqrt(6.0 / static_cast<double>(rows + cols));
    Mat m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i)
        for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = rng.uniform(-limit, limit);
    return m;
}

Mat nonneg_uniform(Eigen::Index rows, Eigen::Index cols, RngState& rng) {
    // Relu layers fed nonnegative features start with every unit active under
    // a nonnegative draw; a sign-symmetric draw kills a constant fraction of
    // units at initialization and those units never recover.
    double limit = std::sqrt(6.0 / static_cast<double>(rows + cols));
    Mat m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i)
        for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = rng.uniform(0.0, limit);
    return m;
}

Mat gaussian(Eigen::Index rows, Eigen::Index cols, double stddev, RngState& rng) {
    Mat m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i)
        for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = stddev * rng.normal();
    return m;
}

} // namespace scx
