#pragma once

#include <functional>
#include <vector>

#include "dense.hpp"

namespace scx {

/// Compare analytic gradients against central differences.
///
/// `loss` re-evaluates the objective with the current parameter values (the
/// parameters are perturbed in place and restored). Returns the maximum over
/// checked coordinates of |analytic - central| / max(1e-8, |central|).
/// If a parameter has more than `max_coords` entries, a deterministic
/// sample of coordinates is checked instead of all of them.
double finite_difference_check(const std::function<double()>& loss,
                               const std::vector<Mat*>& params,
                               const std::vector<Mat>& analytic,
                               double epsilon,
                               std::size_t max_coords = 256,
                               std::uint64_t sample_seed = 0);

} // namespace scx
