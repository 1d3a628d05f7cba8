#pragma once

#include <functional>
#include <vector>

namespace epsics {

// A real-valued function of one real variable, either an exact callback or
// grid samples evaluated by linear interpolation (0 outside the grid range).
// Grid mode requires a strictly increasing grid and finite values.
class SampledFunction {
  public:
    static SampledFunction from_callback(std::function<double(double)> f);
    static SampledFunction from_samples(std::vector<double> x_grid,
                                        std::vector<double> values);
    // Harmonic-oscillator eigenstate phi_n as an exact callback.
    static SampledFunction eigenstate(int n);

    double operator()(double x) const;
    bool is_callback() const { return static_cast<bool>(callback_); }
    const std::vector<double>& grid() const { return x_; }
    const std::vector<double>& values() const { return v_; }

  private:
    SampledFunction() = default;
    std::function<double(double)> callback_;
    std::vector<double> x_;
    std::vector<double> v_;
};

} // namespace epsics
