#include "epsics/polyfock.hpp"

#include "epsics/specfun.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace epsics::polyfock {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

// Exact for k <= 22; beyond that the product accumulates only a few ulp.
double factorial(int k) {
    if (k < 0 || k > 170)
        throw std::domain_error("factorial: argument " + std::to_string(k) +
                                " outside [0, 170]");
    double p = 1.0;
    for (int i = 2; i <= k; ++i) p *= i;
    return p;
}

cxd int_pow(cxd base, int k) {
    cxd acc{1.0, 0.0};
    cxd b = base;
    for (int e = k; e > 0; e >>= 1) {
        if (e & 1) acc *= b;
        b *= b;
    }
    return acc;
}

} // namespace

cxd phi(LevelIndex idx, cxd z) {
    if (idx.m < 0 || idx.n < 0)
        throw std::domain_error("phi: level indices must be non-negative");
    const int m = idx.m;
    const int n = idx.n;
    const double t = std::norm(z);
    if (n >= m) {
        const double sign = (m % 2 == 0) ? 1.0 : -1.0;
        const double lag = specfun::laguerre(m, static_cast<double>(n - m), t);
        return sign * factorial(m) * lag * int_pow(z, n - m);
    }
    const double sign = (n % 2 == 0) ? 1.0 : -1.0;
    const double lag = specfun::laguerre(n, static_cast<double>(m - n), t);
    return sign * factorial(n) * lag * int_pow(std::conj(z), m - n);
}

double log_sigma(int m, double eps, int n) {
    if (m < 0 || n < 0)
        throw std::domain_error("log_sigma: indices must be non-negative");
    return std::log(kPi) + specfun::log_factorial(m) +
           specfun::log_factorial(n) + n * eps;
}

double sigma(int m, double eps, int n) {
    return std::exp(log_sigma(m, eps, n));
}

cxd reproducing_kernel(int m, cxd z, cxd w) {
    if (m < 0)
        throw std::domain_error("reproducing_kernel: m must be non-negative");
    const double t = std::norm(z - w);
    return std::exp(z * std::conj(w)) * (specfun::laguerre(m, 0.0, t) / kPi);
}

cxd basis_inner_product(int m, int n, int j,
                        const quad::QuadratureRule& rule) {
    if (m < 0 || n < 0 || j < 0)
        throw std::domain_error(
            "basis_inner_product: indices must be non-negative");
    if (rule.kind != quad::RuleKind::complex_polar)
        throw std::domain_error(
            "basis_inner_product: requires a complex_polar rule");
    const int needed_radial_degree = m + (n + j + 1) / 2;
    const int have_radial_degree = 2 * rule.radial_order - 1;
    const int needed_angular = std::abs(n - j);
    if (have_radial_degree < needed_radial_degree ||
        rule.angular_order <= needed_angular)
        throw std::domain_error(
            "basis_inner_product: rule inadequate for (m=" +
            std::to_string(m) + ", n=" + std::to_string(n) +
            ", j=" + std::to_string(j) + "): needs radial degree >= " +
            std::to_string(needed_radial_degree) + " (rule has " +
            std::to_string(have_radial_degree) +
            ") and angular order > " + std::to_string(needed_angular) +
            " (rule has " + std::to_string(rule.angular_order) + ")");
    return quad::integrate(rule, std::function<cxd(cxd)>([&](cxd z) {
                               return phi({m, j}, z) *
                                      std::conj(phi({m, n}, z));
                           }));
}

} // namespace epsics::polyfock
