#include "epsics/bargmann.hpp"

#include "epsics/quadrature.hpp"
#include "epsics/specfun.hpp"
#include "epsics/states.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>
#include <string>

namespace epsics::bargmann {

namespace {

constexpr double kPi = std::numbers::pi;

void check_order(int quad_order, const char* what) {
    if (quad_order < 1 || quad_order > 256)
        throw std::domain_error(std::string(what) + ": quad_order " +
                                std::to_string(quad_order) +
                                " outside [1, 256]");
}

// Integral of f(x) * kernel(x) over the real line. The Gauss rule's weight
// is restored (w_i e^{x_i^2}) so the full integrand, Gaussian envelopes
// included, is what the nodes sample; the log-weight form keeps the
// restored weights finite at every supported order.
cxd weighted_sum(const quad::QuadratureRule& rule, const SampledFunction& f,
                 const std::function<cxd(double)>& kernel) {
    quad::CompensatedSum re;
    quad::CompensatedSum im;
    for (std::size_t i = 0; i < rule.size(); ++i) {
        const double x = rule.nodes[i];
        const double w = std::exp(rule.log_weights[i] + x * x);
        const cxd v = w * f(x) * kernel(x);
        re.add(v.real());
        im.add(v.imag());
    }
    return {re.value(), im.value()};
}

cxd checked_integral(int quad_order, double adequacy_tol,
                     const SampledFunction& f,
                     const std::function<cxd(double)>& kernel,
                     const char* what) {
    check_order(quad_order, what);
    const quad::QuadratureRule base = quad::gauss_hermite(quad_order);
    const quad::QuadratureRule fine = quad::gauss_hermite(2 * quad_order);
    const cxd coarse = weighted_sum(base, f, kernel);
    const cxd refined = weighted_sum(fine, f, kernel);
    const double defect = std::abs(refined - coarse);
    if (defect > adequacy_tol * std::max(1.0, std::abs(refined)))
        throw std::domain_error(
            std::string(what) + ": quadrature self-check failed (order " +
            std::to_string(quad_order) + " vs " +
            std::to_string(2 * quad_order) + " differ by " +
            std::to_string(defect) + ")");
    return refined;
}

// Analytic variant of the state kernel: same Hermite factor, but the
// exponential couples to z rather than conj(z) and the prefactor carries
// pi^{-1/4} instead of pi^{-3/4}. On the real axis this kernel is exactly
// sqrt(pi) times the state kernel.
cxd analytic_kernel_value(double x, cxd z, int m, double eps) {
    const double sqrt2 = std::numbers::sqrt2;
    const double eh = std::exp(eps / 2.0);
    const double ehm = std::exp(-eps / 2.0);
    const cxd zb = std::conj(z);
    const double sign = (m % 2 == 0) ? 1.0 : -1.0;
    const double log_pref = m * std::log(ehm / sqrt2) -
                            0.5 * specfun::log_factorial(m) -
                            0.25 * std::log(kPi);
    const cxd expo = -0.5 * x * x + sqrt2 * x * z * ehm -
                     0.5 * ehm * ehm * z * z;
    const cxd herm_arg = x - (eh * z + ehm * zb) / sqrt2;
    return sign * std::exp(log_pref) * std::exp(expo) *
           specfun::hermite(m, herm_arg);
}

} // namespace

cxd transform(const TransformSpec& spec, const SampledFunction& f, cxd z) {
    if (spec.m < 0)
        throw std::domain_error("transform: m must be non-negative");
    if (!(spec.eps >= 0.0) || !std::isfinite(spec.eps))
        throw std::domain_error("transform: eps must be non-negative");
    return checked_integral(
        spec.quad_order, spec.adequacy_tol, f,
        [&](double x) {
            return states::wavefunction_closed_unnormalized(x, z, spec.m,
                                                            spec.eps);
        },
        "transform");
}

std::vector<cxd> transform_grid(const TransformSpec& spec,
                                const SampledFunction& f,
                                std::span<const cxd> z_points) {
    if (spec.m < 0)
        throw std::domain_error("transform_grid: m must be non-negative");
    if (!(spec.eps >= 0.0) || !std::isfinite(spec.eps))
        throw std::domain_error("transform_grid: eps must be non-negative");
    std::vector<cxd> out;
    if (z_points.empty()) return out;
    check_order(spec.quad_order, "transform_grid");
    const quad::QuadratureRule base = quad::gauss_hermite(spec.quad_order);
    const quad::QuadratureRule fine =
        quad::gauss_hermite(2 * spec.quad_order);
    // f is sampled once per node; only the state kernel varies with z.
    std::vector<double> fw_base(base.size());
    std::vector<double> fw_fine(fine.size());
    for (std::size_t i = 0; i < base.size(); ++i) {
        const double x = base.nodes[i];
        fw_base[i] = std::exp(base.log_weights[i] + x * x) * f(x);
    }
    for (std::size_t i = 0; i < fine.size(); ++i) {
        const double x = fine.nodes[i];
        fw_fine[i] = std::exp(fine.log_weights[i] + x * x) * f(x);
    }
    out.reserve(z_points.size());
    for (const cxd& z : z_points) {
        quad::CompensatedSum cre;
        quad::CompensatedSum cim;
        for (std::size_t i = 0; i < base.size(); ++i) {
            const cxd v = fw_base[i] * states::wavefunction_closed_unnormalized(
                                           base.nodes[i], z, spec.m, spec.eps);
            cre.add(v.real());
            cim.add(v.imag());
        }
        const cxd coarse{cre.value(), cim.value()};
        quad::CompensatedSum fre;
        quad::CompensatedSum fim;
        for (std::size_t i = 0; i < fine.size(); ++i) {
            const cxd v = fw_fine[i] * states::wavefunction_closed_unnormalized(
                                           fine.nodes[i], z, spec.m, spec.eps);
            fre.add(v.real());
            fim.add(v.imag());
        }
        const cxd refined{fre.value(), fim.value()};
        const double defect = std::abs(refined - coarse);
        if (defect > spec.adequacy_tol * std::max(1.0, std::abs(refined)))
            throw std::domain_error(
                "transform_grid: quadrature self-check failed (order " +
                std::to_string(spec.quad_order) + " vs " +
                std::to_string(2 * spec.quad_order) + " differ by " +
                std::to_string(defect) + ")");
        out.push_back(refined);
    }
    return out;
}

cxd transform_analytic_kernel(const TransformSpec& spec,
                              const SampledFunction& f, cxd z) {
    if (spec.m < 0)
        throw std::domain_error(
            "transform_analytic_kernel: m must be non-negative");
    if (!(spec.eps >= 0.0) || !std::isfinite(spec.eps))
        throw std::domain_error(
            "transform_analytic_kernel: eps must be non-negative");
    return checked_integral(
        spec.quad_order, spec.adequacy_tol, f,
        [&](double x) {
            return analytic_kernel_value(x, z, spec.m, spec.eps);
        },
        "transform_analytic_kernel");
}

cxd normalized_kernel(int m, double eps, cxd z, cxd w) {
    if (m < 0)
        throw std::domain_error("normalized_kernel: m must be non-negative");
    if (!(eps > 0.0) || !std::isfinite(eps))
        throw std::domain_error("normalized_kernel: eps must be positive");
    // Direct-arithmetic path, independent of the log-domain overlap code.
    const double em = std::exp(-eps);
    const double ep = std::exp(eps);
    const double sh = std::sinh(eps / 2.0);
    const auto plain_norm = [&](cxd v) {
        return std::exp(em * std::norm(v) - m * eps) *
               specfun::laguerre(m, 0.0, -4.0 * sh * sh * std::norm(v));
    };
    const cxd lag_arg =
        std::norm(z) + std::norm(w) - em * z * std::conj(w) -
        ep * std::conj(z) * w;
    const cxd numerator = std::exp(em * z * std::conj(w) - m * eps) *
                          specfun::laguerre(m, 0.0, lag_arg);
    return numerator / std::sqrt(plain_norm(z) * plain_norm(w));
}

cxd bargmann_classical(const SampledFunction& f, cxd z, int quad_order,
                       double adequacy_tol) {
    const double sqrt2 = std::numbers::sqrt2;
    const double pref = std::pow(kPi, -0.25);
    return checked_integral(
        quad_order, adequacy_tol, f,
        [&](double x) {
            return pref * std::exp(-0.5 * x * x + sqrt2 * x * z -
                                   0.5 * z * z);
        },
        "bargmann_classical");
}

} // namespace epsics::bargmann
