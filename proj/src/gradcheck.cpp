#include "gradcheck.hpp"

#include <cmath>
#include <cstdint>

#include "error.hpp"
#include "rng.hpp"

namespace scx {

namespace {

double eval_loss(const std::function<double()>& loss) {
    double v = loss();
    if (!std::isfinite(v)) throw numeric_error("non-finite objective");
    return v;
}

} // namespace

double finite_difference_check(const std::function<double()>& loss,
                               const std::vector<Mat*>& params,
                               const std::vector<Mat>& analytic,
                               double epsilon,
                               std::size_t max_coords,
                               std::uint64_t sample_seed) {
    if (epsilon <= 0.0) throw invalid_argument("finite_difference_check: epsilon must be positive");
    if (params.size() != analytic.size()) {
        throw invalid_argument("finite_difference_check: parameter/gradient count mismatch");
    }
    eval_loss(loss); // reject non-finite objectives up front

    double worst = 0.0;
    for (std::size_t p = 0; p < params.size(); ++p) {
        Mat& theta = *params[p];
        const Mat& grad = analytic[p];
        if (theta.rows() != grad.rows() || theta.cols() != grad.cols()) {
            throw invalid_argument("finite_difference_check: gradient shape mismatch at parameter " +
                                   std::to_string(p));
        }
        auto n = static_cast<std::size_t>(theta.size());
        std::vector<std::size_t> coords;
        if (n <= max_coords) {
            coords.resize(n);
            for (std::size_t i = 0; i < n; ++i) coords[i] = i;
        } else {
            RngState rng = RngState::substream(sample_seed, p);
            coords.reserve(max_coords);
            for (std::size_t i = 0; i < max_coords; ++i) coords.push_back(rng.next_below(n));
        }
        double* data = theta.data();
        for (std::size_t c : coords) {
            double saved = data[c];
            data[c] = saved + epsilon;
            double up = eval_loss(loss);
            data[c] = saved - epsilon;
            double down = eval_loss(loss);
            data[c] = saved;
            double central = (up - down) / (2.0 * epsilon);
            double rel = std::abs(grad.data()[c] - central) / std::max(1e-8, std::abs(central));
            worst = std::max(worst, rel);
        }
    }
    return worst;
}

} // namespace scx
