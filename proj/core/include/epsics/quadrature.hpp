#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <vector>

namespace epsics::quad {

using cxd = std::complex<double>;

enum class RuleKind { real_hermite, complex_polar };

// Nodes and weights of a fixed quadrature rule.
//
// real_hermite: integrates int_R e^{-x^2} f(x) dx as sum w_i f(x_i),
// nodes ascending, weights summing to sqrt(pi).
//
// complex_polar: integrates int_C g(z) e^{-|z|^2} dA(z) as sum w_i g(z_i)
// with z_i = r_i e^{i theta_i}, built as Gauss-Laguerre in t = r^2 times a
// uniform trapezoid in theta. Weights sum to pi. Exact for integrands that
// are polynomials in (z, conj z) of radial t-degree <= 2*radial_order - 1
// and angular frequency strictly inside (-angular_order, angular_order).
//
// log_weights[i] = ln w_i is always finite; weights[i] itself can underflow
// to 0 for extreme orders (real_hermite beyond ~370), so positivity is
// validated through the log form.
struct QuadratureRule {
    RuleKind kind = RuleKind::real_hermite;
    std::vector<double> nodes;   // real_hermite: x_i; complex_polar: r_i
    std::vector<double> angles;  // complex_polar only: theta_i
    std::vector<double> weights;
    std::vector<double> log_weights;
    int radial_order = 0;
    int angular_order = 0;

    std::size_t size() const { return weights.size(); }
};

// Gauss-Hermite rule for weight e^{-x^2} on R. 1 <= order <= 512.
QuadratureRule gauss_hermite(int order);

// Gauss-Laguerre rule for weight e^{-t} on [0, inf). order >= 1.
// Returned with kind = real_hermite layout (nodes/weights only).
QuadratureRule gauss_laguerre(int order);

// Product rule for int_C g(z) e^{-|z|^2} dA(z) in polar form.
QuadratureRule polar_rule(int radial_order, int angular_order);

// Weighted sums with Neumaier-compensated accumulation in a fixed order
// (ascending node index). Throws std::domain_error naming the node if the
// integrand is non-finite there.
cxd integrate(const QuadratureRule& rule, const std::function<cxd(double)>& f);
cxd integrate(const QuadratureRule& rule, const std::function<cxd(cxd)>& f);

// Compensated (Neumaier) accumulator for deterministic reductions.
struct CompensatedSum {
    double sum = 0.0;
    double carry = 0.0;
    void add(double x) {
        double t = sum + x;
        if (std::abs(sum) >= std::abs(x))
            carry += (sum - t) + x;
        else
            carry += (x - t) + sum;
        sum = t;
    }
    double value() const { return sum + carry; }
};

} // namespace epsics::quad
