#include "epsics/quadrature.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace epsics::quad {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

// Implicit-shift QL iteration for a symmetric tridiagonal matrix given by
// diagonal d and subdiagonal e (e[i] couples rows i and i+1). v enters as
// the first unit vector and leaves holding the first component of each
// normalized eigenvector; d leaves holding the eigenvalues. Rows are then
// sorted ascending. This is the standard Golub-Welsch companion kernel.
void tridiag_ql(std::vector<double>& d, std::vector<double>& e,
                std::vector<double>& v) {
    const int n = static_cast<int>(d.size());
    if (n == 1) return;
    const double prec = std::numeric_limits<double>::epsilon();
    e.resize(n, 0.0);
    for (int l = 0; l < n; ++l) {
        int iter = 0;
        for (;;) {
            int m = l;
            while (m < n - 1) {
                double dd = std::abs(d[m]) + std::abs(d[m + 1]);
                if (std::abs(e[m]) <= prec * dd) break;
                ++m;
            }
            if (m == l) break;
            if (++iter > 60)
                throw std::runtime_error("tridiag_ql: QL iteration stalled");
            double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            double r = std::hypot(g, 1.0);
            g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
            double s = 1.0;
            double c = 1.0;
            double p = 0.0;
            bool underflow = false;
            for (int i = m - 1; i >= l; --i) {
                double f = s * e[i];
                double b = c * e[i];
                r = std::hypot(f, g);
                e[i + 1] = r;
                if (r == 0.0) {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    underflow = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
                double fv = v[i + 1];
                v[i + 1] = s * v[i] + c * fv;
                v[i] = c * v[i] - s * fv;
            }
            if (underflow) continue;
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }
    for (int i = 1; i < n; ++i) {
        double dk = d[i];
        double vk = v[i];
        int j = i - 1;
        while (j >= 0 && d[j] > dk) {
            d[j + 1] = d[j];
            v[j + 1] = v[j];
            --j;
        }
        d[j + 1] = dk;
        v[j + 1] = vk;
    }
}

// Nodes and first-component eigenvector weights for a Jacobi matrix with
// zeroth moment mu0: w_i = mu0 * v_i^2, kept alongside ln w_i since v_i^2
// can underflow for extreme orders.
void golub_welsch(std::vector<double> diag, std::vector<double> sub,
                  double mu0, std::vector<double>& nodes,
                  std::vector<double>& weights,
                  std::vector<double>& log_weights) {
    const int n = static_cast<int>(diag.size());
    std::vector<double> v(n, 0.0);
    v[0] = 1.0;
    tridiag_ql(diag, sub, v);
    nodes = std::move(diag);
    weights.resize(n);
    log_weights.resize(n);
    for (int i = 0; i < n; ++i) {
        double a = std::abs(v[i]);
        if (!(a > 0.0))
            throw std::runtime_error(
                "golub_welsch: eigenvector component underflow at node " +
                std::to_string(i));
        log_weights[i] = std::log(mu0) + 2.0 * std::log(a);
        weights[i] = mu0 * a * a;
    }
}

void check_finite_weights(const QuadratureRule& r) {
    for (double lw : r.log_weights)
        if (!std::isfinite(lw))
            throw std::runtime_error("quadrature: non-finite log weight");
}

} // namespace

QuadratureRule gauss_hermite(int order) {
    if (order < 1 || order > 512)
        throw std::domain_error("gauss_hermite: order " +
                                std::to_string(order) +
                                " outside [1, 512]");
    std::vector<double> diag(order, 0.0);
    std::vector<double> sub(order);
    for (int i = 0; i + 1 < order; ++i) sub[i] = std::sqrt((i + 1) / 2.0);
    QuadratureRule rule;
    rule.kind = RuleKind::real_hermite;
    rule.radial_order = order;
    golub_welsch(std::move(diag), std::move(sub), std::sqrt(kPi), rule.nodes,
                 rule.weights, rule.log_weights);
    // The measure is even, so enforce the node/weight symmetry exactly.
    for (int i = 0, j = order - 1; i < j; ++i, --j) {
        double x = 0.5 * (rule.nodes[j] - rule.nodes[i]);
        rule.nodes[i] = -x;
        rule.nodes[j] = x;
        double w = 0.5 * (rule.weights[i] + rule.weights[j]);
        rule.weights[i] = rule.weights[j] = w;
        double lw = 0.5 * (rule.log_weights[i] + rule.log_weights[j]);
        rule.log_weights[i] = rule.log_weights[j] = lw;
    }
    if (order % 2 == 1) rule.nodes[order / 2] = 0.0;
    check_finite_weights(rule);
    return rule;
}

QuadratureRule gauss_laguerre(int order) {
    if (order < 1 || order > 256)
        throw std::domain_error("gauss_laguerre: order " +
                                std::to_string(order) +
                                " outside [1, 256]");
    std::vector<double> diag(order);
    std::vector<double> sub(order);
    for (int i = 0; i < order; ++i) diag[i] = 2.0 * i + 1.0;
    for (int i = 0; i + 1 < order; ++i) sub[i] = i + 1.0;
    QuadratureRule rule;
    rule.kind = RuleKind::real_hermite;
    rule.radial_order = order;
    golub_welsch(std::move(diag), std::move(sub), 1.0, rule.nodes,
                 rule.weights, rule.log_weights);
    check_finite_weights(rule);
    return rule;
}

QuadratureRule polar_rule(int radial_order, int angular_order) {
    if (radial_order < 1 || radial_order > 256)
        throw std::domain_error("polar_rule: radial_order " +
                                std::to_string(radial_order) +
                                " outside [1, 256]");
    if (angular_order < 1 || angular_order > 4096)
        throw std::domain_error("polar_rule: angular_order " +
                                std::to_string(angular_order) +
                                " outside [1, 4096]");
    QuadratureRule radial = gauss_laguerre(radial_order);
    QuadratureRule rule;
    rule.kind = RuleKind::complex_polar;
    rule.radial_order = radial_order;
    rule.angular_order = angular_order;
    const std::size_t total =
        static_cast<std::size_t>(radial_order) * angular_order;
    rule.nodes.reserve(total);
    rule.angles.reserve(total);
    rule.weights.reserve(total);
    rule.log_weights.reserve(total);
    const double log_scale = std::log(kPi / angular_order);
    for (int i = 0; i < radial_order; ++i) {
        const double r = std::sqrt(radial.nodes[i]);
        const double w = radial.weights[i] * (kPi / angular_order);
        const double lw = radial.log_weights[i] + log_scale;
        for (int k = 0; k < angular_order; ++k) {
            rule.nodes.push_back(r);
            rule.angles.push_back(2.0 * kPi * k / angular_order);
            rule.weights.push_back(w);
            rule.log_weights.push_back(lw);
        }
    }
    check_finite_weights(rule);
    return rule;
}

namespace {

[[noreturn]] void throw_nonfinite(const QuadratureRule& rule, std::size_t i) {
    if (rule.kind == RuleKind::real_hermite)
        throw std::domain_error(
            "integrate: non-finite integrand at node " + std::to_string(i) +
            " (x=" + std::to_string(rule.nodes[i]) + ")");
    throw std::domain_error(
        "integrate: non-finite integrand at node " + std::to_string(i) +
        " (r=" + std::to_string(rule.nodes[i]) +
        ", theta=" + std::to_string(rule.angles[i]) + ")");
}

} // namespace

cxd integrate(const QuadratureRule& rule, const std::function<cxd(double)>& f) {
    if (rule.kind != RuleKind::real_hermite)
        throw std::domain_error(
            "integrate: real integrand requires a real_hermite rule");
    CompensatedSum re;
    CompensatedSum im;
    for (std::size_t i = 0; i < rule.size(); ++i) {
        cxd v = f(rule.nodes[i]);
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            throw_nonfinite(rule, i);
        re.add(rule.weights[i] * v.real());
        im.add(rule.weights[i] * v.imag());
    }
    return {re.value(), im.value()};
}

cxd integrate(const QuadratureRule& rule, const std::function<cxd(cxd)>& f) {
    if (rule.kind != RuleKind::complex_polar)
        throw std::domain_error(
            "integrate: complex integrand requires a complex_polar rule");
    CompensatedSum re;
    CompensatedSum im;
    for (std::size_t i = 0; i < rule.size(); ++i) {
        const cxd z = std::polar(rule.nodes[i], rule.angles[i]);
        cxd v = f(z);
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            throw_nonfinite(rule, i);
        re.add(rule.weights[i] * v.real());
        im.add(rule.weights[i] * v.imag());
    }
    return {re.value(), im.value()};
}

} // namespace epsics::quad
