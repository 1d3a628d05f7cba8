#include "epsics/states.hpp"

#include "epsics/polyfock.hpp"
#include "epsics/quadrature.hpp"
#include "epsics/specfun.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <string>

namespace epsics::states {

namespace {

constexpr double kPi = std::numbers::pi;

std::string label_text(const StateLabel& label) {
    std::ostringstream os;
    os << "(z=" << label.z.real() << (label.z.imag() < 0 ? "-" : "+")
       << std::abs(label.z.imag()) << "i, m=" << label.m
       << ", eps=" << label.eps << ")";
    return os.str();
}

} // namespace

StateLabel::StateLabel(cxd z_, int m_, double eps_) : z(z_), m(m_), eps(eps_) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw std::domain_error("StateLabel: center z must be finite");
    if (m < 0)
        throw std::domain_error("StateLabel: m must be non-negative, got " +
                                std::to_string(m));
    if (!(eps > 0.0) || !std::isfinite(eps))
        throw std::domain_error(
            "StateLabel: eps must be positive and finite, got " +
            std::to_string(eps));
}

double log_normalization(const StateLabel& label) {
    const double r2 = std::norm(label.z);
    const double sh = std::sinh(label.eps / 2.0);
    const double lag_arg = -4.0 * sh * sh * r2; // 2(1 - cosh eps)|z|^2, <= 0
    const double lag = specfun::laguerre(label.m, 0.0, lag_arg);
    if (!(lag > 0.0))
        throw std::domain_error(
            "log_normalization: non-positive normalization for state " +
            label_text(label));
    return -std::log(kPi) + std::exp(-label.eps) * r2 - label.m * label.eps +
           std::log(lag);
}

double normalization(const StateLabel& label) {
    return std::exp(log_normalization(label));
}

int default_truncation(const StateLabel& label) {
    const double peak = std::numbers::e * std::norm(label.z) *
                        std::exp(-label.eps);
    return static_cast<int>(std::ceil(peak)) + label.m + 40;
}

CoefficientVector coefficients(const StateLabel& label, int trunc) {
    if (trunc < 1)
        throw std::invalid_argument(
            "coefficients: trunc must be positive, got " +
            std::to_string(trunc));
    const int m = label.m;
    const double log_norm = log_normalization(label);
    CoefficientVector out{label, std::vector<cxd>(trunc), 0.0};

    if (std::norm(label.z) == 0.0) {
        // Only the n == m entry survives at the origin.
        if (m < trunc) {
            const double log_mag =
                specfun::log_factorial(m) -
                0.5 * (polyfock::log_sigma(m, label.eps, m) + log_norm);
            const double sign = (m % 2 == 0) ? 1.0 : -1.0;
            out.entries[m] = cxd{sign * std::exp(log_mag), 0.0};
        }
    } else {
        const double r2 = std::norm(label.z);
        const double log_r = 0.5 * std::log(r2);
        const double theta = std::arg(label.z);
        for (int n = 0; n < trunc; ++n) {
            const int k = std::min(m, n);
            const int a = std::abs(m - n);
            const double lag =
                specfun::laguerre(k, static_cast<double>(a), r2);
            if (lag == 0.0) continue;
            const double log_mag =
                specfun::log_factorial(k) + a * log_r + std::log(std::abs(lag)) -
                0.5 * (polyfock::log_sigma(m, label.eps, n) + log_norm);
            double sign = (k % 2 == 0) ? 1.0 : -1.0;
            if (lag < 0.0) sign = -sign;
            out.entries[n] =
                std::polar(sign * std::exp(log_mag), (m - n) * theta);
        }
    }

    quad::CompensatedSum mass;
    for (const cxd& c : out.entries) mass.add(std::norm(c));
    out.tail_mass = 1.0 - mass.value();
    return out;
}

KernelEval overlap(cxd z, cxd w, int m, double eps) {
    const StateLabel lz(z, m, eps);
    const StateLabel lw(w, m, eps);
    const double ep = std::exp(eps);
    const double em = std::exp(-eps);
    const cxd cross = em * z * std::conj(w);
    const cxd lag_arg =
        std::norm(z) + std::norm(w) - cross - ep * std::conj(z) * w;
    const cxd lag = specfun::laguerre(m, 0.0, lag_arg);
    const double log_mag = cross.real() - m * eps -
                           0.5 * (log_normalization(lz) +
                                  log_normalization(lw)) -
                           std::log(kPi);
    const cxd value =
        std::polar(std::exp(log_mag), cross.imag()) * lag;
    return {value, KernelKind::overlap, m, eps, z, w};
}

std::vector<double> overlap_limit_defect(cxd z, cxd w, int m,
                                         std::span<const double> eps_list) {
    if (m < 0)
        throw std::domain_error(
            "overlap_limit_defect: m must be non-negative");
    const cxd ratio =
        std::exp(z * std::conj(w) - 0.5 * (std::norm(z) + std::norm(w))) *
        specfun::laguerre(m, 0.0, std::norm(z - w));
    std::vector<double> out;
    out.reserve(eps_list.size());
    for (double eps : eps_list)
        out.push_back(std::abs(overlap(z, w, m, eps).value - ratio));
    return out;
}

cxd wavefunction_series(double x, const StateLabel& label, int trunc) {
    const CoefficientVector cv = coefficients(label, trunc);
    std::vector<double> eig(trunc);
    specfun::ho_eigenfunctions(x, eig);
    quad::CompensatedSum re;
    quad::CompensatedSum im;
    for (int n = 0; n < trunc; ++n) {
        re.add(cv.entries[n].real() * eig[n]);
        im.add(cv.entries[n].imag() * eig[n]);
    }
    return {re.value(), im.value()};
}

cxd wavefunction_closed_unnormalized(double x, cxd z, int m, double eps) {
    if (m < 0)
        throw std::domain_error(
            "wavefunction_closed_unnormalized: m must be non-negative");
    if (!(eps >= 0.0) || !std::isfinite(eps))
        throw std::domain_error(
            "wavefunction_closed_unnormalized: eps must be non-negative");
    if (!std::isfinite(x) || !std::isfinite(z.real()) ||
        !std::isfinite(z.imag()))
        throw std::domain_error(
            "wavefunction_closed_unnormalized: arguments must be finite");
    const double sqrt2 = std::numbers::sqrt2;
    const double eh = std::exp(eps / 2.0);
    const double ehm = std::exp(-eps / 2.0);
    const cxd zb = std::conj(z);
    const double sign = (m % 2 == 0) ? 1.0 : -1.0;
    const double log_pref = m * std::log(ehm / sqrt2) -
                            0.5 * specfun::log_factorial(m) -
                            0.75 * std::log(kPi);
    const cxd expo =
        -0.5 * x * x + sqrt2 * x * zb * ehm - 0.5 * ehm * ehm * zb * zb;
    const cxd herm_arg = x - (eh * z + ehm * zb) / sqrt2;
    return sign * std::exp(log_pref) * std::exp(expo) *
           specfun::hermite(m, herm_arg);
}

cxd wavefunction_closed(double x, const StateLabel& label) {
    const double half_log_norm = 0.5 * log_normalization(label);
    return wavefunction_closed_unnormalized(x, label.z, label.m, label.eps) *
           std::exp(-half_log_norm);
}

ThermalShift thermal_shift(const StateLabel& label, double t) {
    if (!(t >= 0.0) || !std::isfinite(t))
        throw std::domain_error(
            "thermal_shift: shift t must be non-negative and finite");
    StateLabel shifted(label.z, label.m, label.eps + t);
    const double scale = std::exp(
        0.5 * (log_normalization(shifted) - log_normalization(label)));
    return {shifted, scale};
}

double mehler_kernel(double tau, double x, double y) {
    if (!(tau > 0.0) || !(tau < 1.0))
        throw std::domain_error("mehler_kernel: tau must lie in (0, 1), got " +
                                std::to_string(tau));
    if (!std::isfinite(x) || !std::isfinite(y))
        throw std::domain_error("mehler_kernel: arguments must be finite");
    const double one_minus = 1.0 - tau;
    const double one_plus = 1.0 + tau;
    const double diff = x - y;
    const double expo = 2.0 * tau * x * y / one_plus -
                        tau * tau * diff * diff / (one_minus * one_plus);
    return std::exp(expo) /
           std::sqrt(kPi * one_minus * one_plus);
}

double heat_kernel(double eps, double x, double y) {
    if (!(eps > 0.0) || !std::isfinite(eps))
        throw std::domain_error("heat_kernel: eps must be positive, got " +
                                std::to_string(eps));
    return std::exp(-0.5 * (x * x + y * y)) *
           mehler_kernel(std::exp(-eps), x, y);
}

namespace {

// One smoothing-operator evaluation pass with a fixed Gauss rule. The
// kernel's Gaussian factor in y is completed to a square and absorbed into
// the rule's weight, so the rule sees only the slowly varying remainder:
//   e^{-y^2/2} K(tau; x, y) = C(x) e^{-kappa (y - mu)^2},
//   kappa = (1 + tau^2) / (2 (1 - tau^2)),  mu = 2 tau x / (1 + tau^2).
std::vector<double> apply_heat_pass(double tau, const SampledFunction& f,
                                    std::span<const double> x_grid,
                                    const quad::QuadratureRule& rule) {
    const double tau2 = tau * tau;
    const double kappa = (1.0 + tau2) / (2.0 * (1.0 - tau2));
    const double inv_sqrt_kappa = 1.0 / std::sqrt(kappa);
    const double front = std::sqrt(2.0 / (kPi * (1.0 + tau2)));
    const double gauss_coeff = (1.0 - tau2) / (2.0 * (1.0 + tau2));
    std::vector<double> out;
    out.reserve(x_grid.size());
    for (double x : x_grid) {
        const double mu = 2.0 * tau * x / (1.0 + tau2);
        quad::CompensatedSum acc;
        for (std::size_t i = 0; i < rule.size(); ++i)
            acc.add(rule.weights[i] *
                    f(mu + rule.nodes[i] * inv_sqrt_kappa));
        out.push_back(front * std::exp(-gauss_coeff * x * x) * acc.value());
    }
    return out;
}

} // namespace

std::vector<double> apply_heat(double eps, const SampledFunction& f,
                               std::span<const double> x_grid,
                               int quad_order, double adequacy_tol) {
    if (!(eps > 0.0) || !std::isfinite(eps))
        throw std::domain_error("apply_heat: eps must be positive, got " +
                                std::to_string(eps));
    if (quad_order < 1 || quad_order > 256)
        throw std::domain_error("apply_heat: quad_order " +
                                std::to_string(quad_order) +
                                " outside [1, 256]");
    const double tau = std::exp(-eps);
    const quad::QuadratureRule base = quad::gauss_hermite(quad_order);
    const quad::QuadratureRule fine = quad::gauss_hermite(2 * quad_order);
    std::vector<double> coarse = apply_heat_pass(tau, f, x_grid, base);
    std::vector<double> refined = apply_heat_pass(tau, f, x_grid, fine);
    double scale = 1.0;
    for (double v : refined) scale = std::max(scale, std::abs(v));
    for (std::size_t i = 0; i < refined.size(); ++i)
        if (std::abs(refined[i] - coarse[i]) > adequacy_tol * scale)
            throw std::domain_error(
                "apply_heat: quadrature self-check failed at x=" +
                std::to_string(x_grid[i]) + " (order " +
                std::to_string(quad_order) + " vs " +
                std::to_string(2 * quad_order) + " differ by " +
                std::to_string(std::abs(refined[i] - coarse[i])) + ")");
    return refined;
}

} // namespace epsics::states
