#include "epsics/sampled_function.hpp"

#include "epsics/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace epsics {

SampledFunction SampledFunction::from_callback(
    std::function<double(double)> f) {
    if (!f)
        throw std::invalid_argument(
            "SampledFunction::from_callback: empty callback");
    SampledFunction out;
    out.callback_ = std::move(f);
    return out;
}

SampledFunction SampledFunction::from_samples(std::vector<double> x_grid,
                                              std::vector<double> values) {
    if (x_grid.size() != values.size())
        throw std::invalid_argument(
            "SampledFunction::from_samples: grid and value sizes differ");
    if (x_grid.empty())
        throw std::invalid_argument(
            "SampledFunction::from_samples: empty sample set");
    for (std::size_t i = 0; i < x_grid.size(); ++i) {
        if (!std::isfinite(x_grid[i]) || !std::isfinite(values[i]))
            throw std::invalid_argument(
                "SampledFunction::from_samples: non-finite sample");
        if (i > 0 && !(x_grid[i] > x_grid[i - 1]))
            throw std::invalid_argument(
                "SampledFunction::from_samples: grid must be strictly "
                "increasing");
    }
    SampledFunction out;
    out.x_ = std::move(x_grid);
    out.v_ = std::move(values);
    return out;
}

SampledFunction SampledFunction::eigenstate(int n) {
    if (n < 0)
        throw std::invalid_argument(
            "SampledFunction::eigenstate: n must be non-negative");
    return from_callback(
        [n](double x) { return specfun::ho_eigenfunction(n, x); });
}

double SampledFunction::operator()(double x) const {
    if (callback_) return callback_(x);
    if (x < x_.front() || x > x_.back()) return 0.0;
    auto it = std::upper_bound(x_.begin(), x_.end(), x);
    if (it == x_.end()) return v_.back();
    if (it == x_.begin()) return v_.front();
    const std::size_t hi = static_cast<std::size_t>(it - x_.begin());
    const std::size_t lo = hi - 1;
    const double t = (x - x_[lo]) / (x_[hi] - x_[lo]);
    return v_[lo] + t * (v_[hi] - v_[lo]);
}

} // namespace epsics
