#include "epsics/verify.hpp"

#include "epsics/bargmann.hpp"
#include "epsics/polyfock.hpp"
#include "epsics/sampled_function.hpp"
#include "epsics/specfun.hpp"
#include "epsics/states.hpp"

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace epsics::verify {

namespace {

constexpr double kPi = std::numbers::pi;

std::string format_double(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

std::vector<double> linspace(double a, double b, int count) {
    std::vector<double> out(count);
    for (int i = 0; i < count; ++i)
        out[i] = a + (b - a) * i / (count - 1);
    return out;
}

double int_pow(double base, int k) {
    double acc = 1.0;
    double b = base;
    for (int e = k; e > 0; e >>= 1) {
        if (e & 1) acc *= b;
        b *= b;
    }
    return acc;
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

// Centers exercised by the wavefunction, thermal and coefficient suites.
std::vector<cxd> center_box() {
    return {cxd{0.0, 0.0}, cxd{1.0, 0.0}, cxd{1.2, 0.3}, cxd{0.0, -0.7}};
}

// 16-point complex grid used by the overlap suites.
std::vector<cxd> overlap_grid() {
    const double vals[4] = {-0.8, -0.8 / 3.0, 0.8 / 3.0, 0.8};
    std::vector<cxd> out;
    out.reserve(16);
    for (double re : vals)
        for (double im : vals) out.emplace_back(re, im);
    return out;
}

// 3x3 complex grid used by the transform suites.
std::vector<cxd> transform_grid_points() {
    const double vals[3] = {-0.8, 0.0, 0.8};
    std::vector<cxd> out;
    out.reserve(9);
    for (double re : vals)
        for (double im : vals) out.emplace_back(re, im);
    return out;
}

// Guarded relative defect: relative for O(1)-or-larger references,
// absolute when both sides are small.
double rel_defect(cxd got, cxd want) {
    return std::abs(got - want) /
           std::max({1.0, std::abs(got), std::abs(want)});
}

double rel_defect(double got, double want) {
    return std::abs(got - want) /
           std::max({1.0, std::abs(got), std::abs(want)});
}

// Truncated expansion of the normalized two-point overlap in the basis,
// used as the independent oracle for the closed form.
cxd overlap_series(cxd z, cxd w, int m, double eps, int terms) {
    const states::StateLabel lz(z, m, eps);
    const states::StateLabel lw(w, m, eps);
    const double log_norm_half = 0.5 * (states::log_normalization(lz) +
                                        states::log_normalization(lw));
    quad::CompensatedSum re;
    quad::CompensatedSum im;
    for (int n = 0; n < terms; ++n) {
        const double log_scale = -n * eps - std::log(kPi) -
                                 specfun::log_factorial(m) -
                                 specfun::log_factorial(n) - log_norm_half;
        const cxd term = polyfock::phi({m, n}, z) *
                         std::conj(polyfock::phi({m, n}, w)) *
                         std::exp(log_scale);
        re.add(term.real());
        im.add(term.imag());
    }
    return {re.value(), im.value()};
}

using SuiteBody = std::function<void(VerificationReport&,
                                     const SuiteOptions&)>;

VerificationReport timed_suite(const std::string& name,
                               const SuiteOptions& options,
                               const SuiteBody& body) {
    VerificationReport report;
    report.suite = name;
    const auto t0 = std::chrono::steady_clock::now();
    body(report, options);
    const auto t1 = std::chrono::steady_clock::now();
    report.runtime_ms =
        std::chrono::duration<double, std::milli>(t1 - t0).count();
    return report;
}

// ---- suite bodies ------------------------------------------------------

// Gram matrix of the first basis members on each sheet against its exact
// diagonal, normalized entrywise by the diagonal scale.
void suite_gram(VerificationReport& r, const SuiteOptions& opt) {
    r.tolerance = 1e-10;
    const quad::QuadratureRule rule =
        quad::polar_rule(opt.quad_radial, opt.quad_angular);
    const int n_max = 8;
    double worst = 0.0;
    for (int m : {0, 1, 2, 4}) {
        for (int n = 0; n <= n_max; ++n) {
            for (int j = 0; j <= n_max; ++j) {
                const cxd got = polyfock::basis_inner_product(m, n, j, rule);
                const double log_scale =
                    std::log(kPi) + specfun::log_factorial(m) +
                    0.5 * (specfun::log_factorial(n) +
                           specfun::log_factorial(j));
                const cxd normalized = got * std::exp(-log_scale);
                const cxd want = (n == j) ? cxd{1.0, 0.0} : cxd{0.0, 0.0};
                worst = std::max(worst, std::abs(normalized - want));
            }
        }
    }
    r.params = {{"m_set", "0,1,2,4"},
                {"n_max", std::to_string(n_max)},
                {"quad_radial", std::to_string(opt.quad_radial)},
                {"quad_angular", std::to_string(opt.quad_angular)}};
    r.defect_abs = worst;
    r.defect_rel = worst;
    r.passed = worst < r.tolerance;
}

// Closed-form wavefunction against its eigenfunction series, sup-norm over
// a position grid, normalized by the sup of the closed form.
void suite_wavefunction(VerificationReport& r, const SuiteOptions&) {
    r.tolerance = 1e-10;
    const std::vector<double> xs = linspace(-4.0, 4.0, 81);
    double worst_rel = 0.0;
    double worst_abs = 0.0;
    for (int m = 0; m <= 6; ++m) {
        for (double eps : {0.1, 0.5, 1.0}) {
            for (const cxd& z : center_box()) {
                const states::StateLabel label(z, m, eps);
                const int trunc = states::default_truncation(label);
                double sup_diff = 0.0;
                double sup_val = 0.0;
                for (double x : xs) {
                    const cxd closed = states::wavefunction_closed(x, label);
                    const cxd series =
                        states::wavefunction_series(x, label, trunc);
                    sup_diff = std::max(sup_diff, std::abs(closed - series));
                    sup_val = std::max(sup_val, std::abs(closed));
                }
                worst_abs = std::max(worst_abs, sup_diff);
                worst_rel = std::max(worst_rel, sup_diff / sup_val);
            }
        }
    }
    r.params = {{"m_max", "6"},
                {"eps_set", "0.1,0.5,1.0"},
                {"centers", "4"},
                {"x_grid", "[-4,4]x81"}};
    r.defect_abs = worst_abs;
    r.defect_rel = worst_rel;
    r.passed = worst_rel < r.tolerance;
}

// Closed-form overlap against its series expansion on a grid of ordered
// center pairs, plus the exact-diagonal property.
void suite_overlap(VerificationReport& r, const SuiteOptions&) {
    r.tolerance = 1e-10;
    const std::vector<cxd> grid = overlap_grid();
    const int terms = 200;
    double worst = 0.0;
    double worst_diag = 0.0;
    for (int m = 0; m <= 5; ++m) {
        for (double eps : {0.3, 1.0}) {
            for (const cxd& z : grid) {
                worst_diag = std::max(
                    worst_diag,
                    std::abs(states::overlap(z, z, m, eps).value - 1.0));
                for (const cxd& w : grid) {
                    const cxd closed = states::overlap(z, w, m, eps).value;
                    const cxd series = overlap_series(z, w, m, eps, terms);
                    worst = std::max(worst, std::abs(closed - series));
                }
            }
        }
    }
    r.params = {{"m_max", "5"},
                {"eps_set", "0.3,1.0"},
                {"grid", "16x16 pairs"},
                {"series_terms", std::to_string(terms)},
                {"diag_defect", format_double(worst_diag)}};
    r.defect_abs = worst;
    r.defect_rel = worst;
    r.passed = worst < r.tolerance && worst_diag < 1e-12;
}

void suite_identity_matrix(VerificationReport& r, const SuiteOptions& opt) {
    r.tolerance = 1e-10;
    const quad::QuadratureRule rule =
        quad::polar_rule(opt.quad_radial, opt.quad_angular);
    double worst = 0.0;
    for (int m = 0; m <= 4; ++m)
        for (double eps : {0.3, 1.0}) {
            const IdentityMatrixResult res = identity_matrix(m, eps, 8, rule);
            worst = std::max(worst, res.report.defect_abs);
        }
    r.params = {{"m_max", "4"},
                {"eps_set", "0.3,1.0"},
                {"n_max", "8"},
                {"quad_radial", std::to_string(opt.quad_radial)},
                {"quad_angular", std::to_string(opt.quad_angular)}};
    r.defect_abs = worst;
    r.defect_rel = worst;
    r.passed = worst < r.tolerance;
}

void suite_identity_sweep(VerificationReport& r, const SuiteOptions& opt) {
    r.tolerance = 0.1; // envelope of 1 - e^{-n_max eps} at the last step
    const quad::QuadratureRule rule =
        quad::polar_rule(opt.quad_radial, opt.quad_angular);
    const std::vector<double> eps_list{0.5, 0.2, 0.1, 0.05, 0.02};
    double final_defect = 0.0;
    bool all_passed = true;
    for (int m : {0, 2}) {
        const VerificationReport sub =
            identity_limit_sweep(m, 5, eps_list, rule, r.tolerance);
        all_passed = all_passed && sub.passed;
        final_defect = std::max(final_defect, sub.defect_abs);
        for (const auto& kv : sub.params)
            if (kv.first.rfind("defect", 0) == 0)
                r.params.emplace_back("m" + std::to_string(m) + "_" + kv.first,
                                      kv.second);
    }
    r.params.emplace_back("m_set", "0,2");
    r.params.emplace_back("n_max", "5");
    r.params.emplace_back("eps_list", "0.5,0.2,0.1,0.05,0.02");
    r.defect_abs = final_defect;
    r.defect_rel = final_defect;
    r.passed = all_passed;
}

// Smoothing-operator sweep: for eigenfunction combinations, the distance
// sup |O_eps[f] - f| must shrink as eps does and end below 0.05. The
// ground state is an exact fixed point, so it is checked for smallness at
// every eps rather than for strict decrease.
void suite_heat_sweep(VerificationReport& r, const SuiteOptions&) {
    r.tolerance = 0.05;
    const std::vector<double> eps_list{0.5, 0.2, 0.1, 0.05, 0.02};
    const std::vector<double> xs = linspace(-4.0, 4.0, 81);

    struct TestVector {
        std::string name;
        SampledFunction f;
        bool monotone;
    };
    auto combo = [](std::vector<std::pair<double, int>> terms) {
        return SampledFunction::from_callback([terms = std::move(terms)](
                                                  double x) {
            double s = 0.0;
            for (const auto& [c, n] : terms)
                s += c * specfun::ho_eigenfunction(n, x);
            return s;
        });
    };
    std::vector<TestVector> vectors;
    vectors.push_back({"e0", SampledFunction::eigenstate(0), false});
    for (int n = 1; n <= 4; ++n)
        vectors.push_back(
            {"e" + std::to_string(n), SampledFunction::eigenstate(n), true});
    const double h = 1.0 / std::numbers::sqrt2;
    vectors.push_back({"e0+e1", combo({{h, 0}, {h, 1}}), true});
    const double g = 1.0 / std::sqrt(3.0);
    vectors.push_back({"e0+e1+e5", combo({{g, 0}, {g, 1}, {g, 5}}), false});

    double final_worst = 0.0;
    bool ok = true;
    for (const TestVector& tv : vectors) {
        std::vector<double> defects;
        for (double eps : eps_list) {
            const std::vector<double> out =
                states::apply_heat(eps, tv.f, xs);
            double d = 0.0;
            for (std::size_t i = 0; i < xs.size(); ++i)
                d = std::max(d, std::abs(out[i] - tv.f(xs[i])));
            defects.push_back(d);
        }
        if (tv.name == "e0") {
            for (double d : defects) ok = ok && d < 1e-9;
        } else {
            if (tv.monotone)
                for (std::size_t i = 1; i < defects.size(); ++i)
                    ok = ok && defects[i] < defects[i - 1];
            ok = ok && defects.back() < r.tolerance;
        }
        final_worst = std::max(final_worst,
                               tv.name == "e0" ? 0.0 : defects.back());
        r.params.emplace_back(tv.name + "_final",
                              format_double(defects.back()));
    }
    r.params.emplace_back("eps_list", "0.5,0.2,0.1,0.05,0.02");
    r.defect_abs = final_worst;
    r.defect_rel = final_worst;
    r.passed = ok && final_worst < r.tolerance;
}

// Entrywise reparameterization identity: contracting the coefficients of
// (z, m, eps) by diag(e^{-n t / 2}) equals scale times the coefficients of
// (z, m, eps + t).
void suite_thermal(VerificationReport& r, const SuiteOptions&) {
    r.tolerance = 1e-12;
    double worst = 0.0;
    for (int m = 0; m <= 6; ++m)
        for (double eps : {0.1, 0.5, 1.0})
            for (const cxd& z : center_box())
                for (double t : {0.1, 0.5}) {
                    const states::StateLabel label(z, m, eps);
                    const auto shift = states::thermal_shift(label, t);
                    const int trunc = states::default_truncation(label);
                    const auto base = states::coefficients(label, trunc);
                    const auto moved =
                        states::coefficients(shift.shifted, trunc);
                    for (int n = 0; n < trunc; ++n) {
                        const cxd lhs =
                            std::exp(-0.5 * n * t) * base.entries[n];
                        const cxd rhs = shift.scale * moved.entries[n];
                        worst = std::max(worst, std::abs(lhs - rhs));
                    }
                }
    r.params = {{"m_max", "6"},
                {"eps_set", "0.1,0.5,1.0"},
                {"t_set", "0.1,0.5"},
                {"centers", "4"}};
    r.defect_abs = worst;
    r.defect_rel = worst;
    r.passed = worst < r.tolerance;
}

// Closed-form generating-function kernel against its truncated series,
// sup-normalized per tau over a symmetric position grid.
void suite_mehler(VerificationReport& r, const SuiteOptions&) {
    r.tolerance = 1e-11;
    const int terms = 300;
    const std::vector<double> xs = linspace(-3.0, 3.0, 13);
    std::vector<std::vector<double>> hp(xs.size(),
                                        std::vector<double>(terms + 1));
    for (std::size_t i = 0; i < xs.size(); ++i)
        specfun::ho_polynomials(xs[i], hp[i]);
    double worst = 0.0;
    for (double tau : {0.2, 0.6, 0.9}) {
        double sup_diff = 0.0;
        double sup_val = 0.0;
        for (std::size_t a = 0; a < xs.size(); ++a)
            for (std::size_t b = 0; b < xs.size(); ++b) {
                const double closed =
                    states::mehler_kernel(tau, xs[a], xs[b]);
                quad::CompensatedSum acc;
                double pw = 1.0;
                for (int n = 0; n <= terms; ++n) {
                    acc.add(pw * hp[a][n] * hp[b][n]);
                    pw *= tau;
                }
                sup_diff = std::max(sup_diff,
                                    std::abs(closed - acc.value()));
                sup_val = std::max(sup_val, std::abs(closed));
            }
        worst = std::max(worst, sup_diff / sup_val);
        r.params.emplace_back("defect_tau_" + format_double(tau),
                              format_double(sup_diff / sup_val));
    }
    r.params.emplace_back("grid", "[-3,3]x13 squared");
    r.params.emplace_back("series_terms", std::to_string(terms + 1));
    r.defect_abs = worst;
    r.defect_rel = worst;
    r.passed = worst < r.tolerance;
}

// Transform images of the eigenfunctions against the coefficient formula.
void suite_coefficient_identity(VerificationReport& r, const SuiteOptions&) {
    r.tolerance = 1e-9;
    double worst = 0.0;
    for (int m = 0; m <= 5; ++m)
        for (double eps : {0.3, 1.0}) {
            const bargmann::TransformSpec spec{m, eps};
            for (const cxd& z : transform_grid_points())
                for (int n = 0; n <= 8; ++n) {
                    const cxd got = bargmann::transform(
                        spec, SampledFunction::eigenstate(n), z);
                    const double log_scale =
                        -0.5 * n * eps -
                        0.5 * (std::log(kPi) + specfun::log_factorial(m) +
                               specfun::log_factorial(n));
                    const cxd want = std::conj(polyfock::phi({m, n}, z)) *
                                     std::exp(log_scale);
                    worst = std::max(worst, std::abs(got - want));
                }
        }
    r.params = {{"m_max", "5"},
                {"n_max", "8"},
                {"eps_set", "0.3,1.0"},
                {"z_grid", "3x3"}};
    r.defect_abs = worst;
    r.defect_rel = worst;
    r.passed = worst < r.tolerance;
}

// Classical limit transform: eigenfunction n maps to z^n / sqrt(n!).
void suite_classical_images(VerificationReport& r, const SuiteOptions&) {
    r.tolerance = 1e-10;
    double worst = 0.0;
    for (const cxd& z : transform_grid_points())
        for (int n = 0; n <= 8; ++n) {
            const cxd got = bargmann::bargmann_classical(
                SampledFunction::eigenstate(n), z);
            const cxd want =
                int_pow(z, n) * std::exp(-0.5 * specfun::log_factorial(n));
            worst = std::max(worst, std::abs(got - want));
        }
    r.params = {{"n_max", "8"}, {"z_grid", "3x3"}};
    r.defect_abs = worst;
    r.defect_rel = worst;
    r.passed = worst < r.tolerance;
}

// The four polynomial identities the closed forms rest on. Each family has
// its own tolerance; the reported relative defect is normalized by it, so
// the suite gate is defect_rel < 1.
void suite_laguerre_identities(VerificationReport& r, const SuiteOptions&) {
    r.tolerance = 1.0;
    double worst_norm = 0.0;
    double worst_abs = 0.0;

    // Negative-superscript reduction against the plain recurrence.
    {
        const double tol = 1e-12;
        double d = 0.0;
        for (int m = 1; m <= 10; ++m)
            for (int k = 1; k <= m; ++k)
                for (double t : {0.1, 1.0, 3.7, 9.0}) {
                    const double via_recurrence =
                        specfun::laguerre(m, static_cast<double>(-k), t);
                    const double via_reduction =
                        specfun::laguerre({m, -k}, t);
                    d = std::max(d, rel_defect(via_reduction,
                                               via_recurrence));
                }
        worst_norm = std::max(worst_norm, d / tol);
        worst_abs = std::max(worst_abs, d);
        r.params.emplace_back("negative_superscript", format_double(d));
    }

    // Shifted-superscript exponential generating identity.
    {
        const double tol = 1e-10;
        const int terms = 200;
        double d = 0.0;
        const std::pair<double, double> sa[] = {
            {0.7, 1.3}, {1.5, 0.4}, {2.0, -0.6}};
        for (int m = 0; m <= 6; ++m)
            for (const auto& [s, alpha] : sa) {
                quad::CompensatedSum acc;
                double pw = 1.0; // (s alpha)^n / n!
                for (int n = 0; n <= terms; ++n) {
                    acc.add(pw * specfun::laguerre({m, n - m}, s));
                    pw *= s * alpha / (n + 1);
                }
                const double want = int_pow(s, m) *
                                    std::exp(-specfun::log_factorial(m)) *
                                    int_pow(alpha - 1.0, m) *
                                    std::exp(s * alpha);
                d = std::max(d, rel_defect(acc.value(), want));
            }
        worst_norm = std::max(worst_norm, d / tol);
        worst_abs = std::max(worst_abs, d);
        r.params.emplace_back("generating_identity", format_double(d));
    }

    // Bilinear generating identity for two shifted-superscript families.
    {
        const double tol = 1e-10;
        const int terms = 200;
        double d = 0.0;
        const std::pair<int, int> lm[] = {{0, 0}, {1, 2}, {2, 2}, {0, 3}};
        const double zxy[][3] = {{0.8, 1.1, 0.6}, {1.5, 0.3, 2.0}};
        for (const auto& [l, m] : lm)
            for (const auto& p : zxy) {
                const double zeta = p[0];
                const double X = p[1];
                const double Y = p[2];
                quad::CompensatedSum acc;
                double pw = 1.0; // zeta^n / n!
                for (int n = 0; n <= terms; ++n) {
                    acc.add(pw * specfun::laguerre({l, n - l}, X) *
                            specfun::laguerre({m, n - m}, Y));
                    pw *= zeta / (n + 1);
                }
                const double want =
                    std::exp(zeta) * int_pow(zeta - Y, m - l) *
                    int_pow(zeta, l) *
                    std::exp(-specfun::log_factorial(m)) *
                    specfun::laguerre({l, m - l},
                                      -(X - zeta) * (Y - zeta) / zeta);
                d = std::max(d, rel_defect(acc.value(), want));
            }
        worst_norm = std::max(worst_norm, d / tol);
        worst_abs = std::max(worst_abs, d);
        r.params.emplace_back("bilinear_identity", format_double(d));
    }

    // Gaussian integral representation of the Hermite polynomials.
    {
        const double tol = 1e-9;
        const quad::QuadratureRule rule = quad::gauss_hermite(64);
        double d = 0.0;
        for (int p = 0; p <= 8; ++p)
            for (double x : {-2.2, -0.5, 0.0, 1.0, 3.0}) {
                const cxd integral = quad::integrate(
                    rule, std::function<cxd(double)>([&](double u) {
                        return int_pow(cxd{0.0, 2.0 * u}, p) *
                               std::exp(cxd{0.0, -2.0 * u * x});
                    }));
                const double got =
                    (std::exp(x * x) / std::sqrt(kPi) * integral).real();
                d = std::max(d, rel_defect(got, specfun::hermite(p, x)));
            }
        worst_norm = std::max(worst_norm, d / tol);
        worst_abs = std::max(worst_abs, d);
        r.params.emplace_back("hermite_integral_rep", format_double(d));
    }

    r.defect_abs = worst_abs;
    r.defect_rel = worst_norm;
    r.passed = worst_norm < 1.0;
}

// Small-eps limit of the overlap against the normalized reproducing
// kernel: the defect must stay below 10 eps at each sweep point.
void suite_overlap_limit(VerificationReport& r, const SuiteOptions&) {
    const std::vector<double> eps_list{0.1, 0.01, 0.001};
    r.tolerance = 10.0 * eps_list.back();
    const std::vector<cxd> grid = overlap_grid();
    bool ok = true;
    std::vector<double> worst_per_eps(eps_list.size(), 0.0);
    for (int m = 0; m <= 5; ++m)
        for (const cxd& z : grid)
            for (const cxd& w : grid) {
                const std::vector<double> defect =
                    states::overlap_limit_defect(z, w, m, eps_list);
                for (std::size_t i = 0; i < eps_list.size(); ++i)
                    worst_per_eps[i] =
                        std::max(worst_per_eps[i], defect[i]);
            }
    for (std::size_t i = 0; i < eps_list.size(); ++i) {
        ok = ok && worst_per_eps[i] < 10.0 * eps_list[i];
        r.params.emplace_back("defect_eps_" + format_double(eps_list[i]),
                              format_double(worst_per_eps[i]));
    }
    r.params.emplace_back("m_max", "5");
    r.params.emplace_back("grid", "16x16 pairs");
    r.defect_abs = worst_per_eps.back();
    r.defect_rel = worst_per_eps.back() / r.tolerance;
    r.passed = ok;
}

// Reproducing kernel against its basis series, sup-normalized.
void suite_kernel_vs_series(VerificationReport& r, const SuiteOptions&) {
    r.tolerance = 1e-9;
    const int terms = 200;
    const double vals[5] = {-1.5, -0.75, 0.0, 0.75, 1.5};
    std::vector<cxd> grid;
    for (double re : vals)
        for (double im : vals) grid.emplace_back(re, im);
    double worst = 0.0;
    for (int m = 0; m <= 4; ++m) {
        double sup_diff = 0.0;
        double sup_val = 0.0;
        for (const cxd& z : grid)
            for (const cxd& w : grid) {
                const cxd closed = polyfock::reproducing_kernel(m, z, w);
                quad::CompensatedSum re_acc;
                quad::CompensatedSum im_acc;
                for (int n = 0; n < terms; ++n) {
                    const double log_scale = -std::log(kPi) -
                                             specfun::log_factorial(m) -
                                             specfun::log_factorial(n);
                    const cxd term = polyfock::phi({m, n}, z) *
                                     std::conj(polyfock::phi({m, n}, w)) *
                                     std::exp(log_scale);
                    re_acc.add(term.real());
                    im_acc.add(term.imag());
                }
                const cxd series{re_acc.value(), im_acc.value()};
                sup_diff = std::max(sup_diff, std::abs(closed - series));
                sup_val = std::max(sup_val, std::abs(closed));
            }
        worst = std::max(worst, sup_diff / sup_val);
    }
    r.params = {{"m_max", "4"},
                {"grid", "5x5 squared"},
                {"series_terms", std::to_string(terms)}};
    r.defect_abs = worst;
    r.defect_rel = worst;
    r.passed = worst < r.tolerance;
}

const std::vector<std::pair<std::string, SuiteBody>>& registry() {
    static const std::vector<std::pair<std::string, SuiteBody>> suites = {
        {"gram", suite_gram},
        {"wavefunction_closed_form", suite_wavefunction},
        {"overlap_closed_form", suite_overlap},
        {"identity_matrix", suite_identity_matrix},
        {"identity_limit_sweep", suite_identity_sweep},
        {"heat_limit_sweep", suite_heat_sweep},
        {"thermal_shift", suite_thermal},
        {"mehler_closed_form", suite_mehler},
        {"coefficient_identity", suite_coefficient_identity},
        {"classical_images", suite_classical_images},
        {"laguerre_identities", suite_laguerre_identities},
        {"overlap_limit", suite_overlap_limit},
        {"kernel_vs_series", suite_kernel_vs_series},
    };
    return suites;
}

} // namespace

std::string VerificationReport::to_json() const {
    nlohmann::ordered_json j;
    j["suite"] = suite;
    nlohmann::ordered_json p = nlohmann::ordered_json::object();
    for (const auto& [k, v] : params) p[k] = v;
    j["params"] = p;
    j["defect_abs"] = defect_abs;
    j["defect_rel"] = defect_rel;
    j["tolerance"] = tolerance;
    j["passed"] = passed;
    j["runtime_ms"] = runtime_ms;
    return j.dump();
}

IdentityMatrixResult identity_matrix(int m, double eps, int n_max,
                                     const quad::QuadratureRule& rule) {
    if (m < 0 || n_max < 0)
        throw std::domain_error(
            "identity_matrix: m and n_max must be non-negative");
    if (!(eps > 0.0) || !std::isfinite(eps))
        throw std::domain_error("identity_matrix: eps must be positive");
    if (rule.kind != quad::RuleKind::complex_polar)
        throw std::domain_error(
            "identity_matrix: requires a complex_polar rule");
    const int needed_radial_degree = 2 * (n_max + m);
    const int have_radial_degree = 2 * rule.radial_order - 1;
    const int needed_angular = 2 * n_max;
    if (have_radial_degree < needed_radial_degree ||
        rule.angular_order <= needed_angular)
        throw std::domain_error(
            "identity_matrix: rule inadequate for (m=" + std::to_string(m) +
            ", n_max=" + std::to_string(n_max) +
            "): needs radial degree >= " +
            std::to_string(needed_radial_degree) + " (rule has " +
            std::to_string(have_radial_degree) + ") and angular order > " +
            std::to_string(needed_angular) + " (rule has " +
            std::to_string(rule.angular_order) + ")");

    const auto t0 = std::chrono::steady_clock::now();
    const int dim = n_max + 1;
    std::vector<quad::CompensatedSum> acc_re(dim * dim);
    std::vector<quad::CompensatedSum> acc_im(dim * dim);
    std::vector<cxd> basis(dim);
    for (std::size_t idx = 0; idx < rule.size(); ++idx) {
        const cxd z = std::polar(rule.nodes[idx], rule.angles[idx]);
        for (int k = 0; k < dim; ++k) basis[k] = polyfock::phi({m, k}, z);
        const double w = rule.weights[idx];
        for (int n = 0; n < dim; ++n) {
            const cxd bn = std::conj(basis[n]);
            for (int j = 0; j < dim; ++j) {
                const cxd v = w * bn * basis[j];
                acc_re[n * dim + j].add(v.real());
                acc_im[n * dim + j].add(v.imag());
            }
        }
    }
    IdentityMatrixResult out;
    out.matrix.assign(dim, std::vector<cxd>(dim));
    double worst = 0.0;
    double worst_diag_rel = 0.0;
    for (int n = 0; n < dim; ++n)
        for (int j = 0; j < dim; ++j) {
            const double log_scale =
                -std::log(kPi) - specfun::log_factorial(m) -
                0.5 * (specfun::log_factorial(n) +
                       specfun::log_factorial(j)) -
                0.5 * (n + j) * eps;
            const cxd value = cxd{acc_re[n * dim + j].value(),
                                  acc_im[n * dim + j].value()} *
                              std::exp(log_scale);
            out.matrix[n][j] = value;
            const double want = (n == j) ? std::exp(-n * eps) : 0.0;
            worst = std::max(worst, std::abs(value - want));
            if (n == j)
                worst_diag_rel = std::max(
                    worst_diag_rel, std::abs(value - want) / want);
        }
    const auto t1 = std::chrono::steady_clock::now();
    out.report.suite = "identity_matrix";
    out.report.params = {
        {"m", std::to_string(m)},
        {"eps", format_double(eps)},
        {"n_max", std::to_string(n_max)},
        {"quad_radial", std::to_string(rule.radial_order)},
        {"quad_angular", std::to_string(rule.angular_order)}};
    out.report.defect_abs = worst;
    out.report.defect_rel = worst_diag_rel;
    out.report.tolerance = 1e-10;
    out.report.passed = worst < out.report.tolerance;
    out.report.runtime_ms =
        std::chrono::duration<double, std::milli>(t1 - t0).count();
    return out;
}

VerificationReport identity_limit_sweep(int m, int n_max,
                                        std::span<const double> eps_list,
                                        const quad::QuadratureRule& rule,
                                        double tolerance) {
    if (eps_list.empty())
        throw std::invalid_argument(
            "identity_limit_sweep: eps_list must be non-empty");
    for (std::size_t i = 1; i < eps_list.size(); ++i)
        if (!(eps_list[i] < eps_list[i - 1]))
            throw std::invalid_argument(
                "identity_limit_sweep: eps_list must be strictly "
                "decreasing");
    const auto t0 = std::chrono::steady_clock::now();
    VerificationReport r;
    r.suite = "identity_limit_sweep";
    r.tolerance = tolerance;
    std::vector<double> defects;
    for (double eps : eps_list) {
        const IdentityMatrixResult res =
            identity_matrix(m, eps, n_max, rule);
        double dev = 0.0;
        for (int n = 0; n <= n_max; ++n)
            for (int j = 0; j <= n_max; ++j) {
                const double want = (n == j) ? 1.0 : 0.0;
                dev = std::max(dev, std::abs(res.matrix[n][j] - want));
            }
        defects.push_back(dev);
        r.params.emplace_back("defect_eps_" + format_double(eps),
                              format_double(dev));
    }
    bool monotone = true;
    for (std::size_t i = 1; i < defects.size(); ++i)
        monotone = monotone && defects[i] < defects[i - 1];
    r.params.emplace_back("m", std::to_string(m));
    r.params.emplace_back("n_max", std::to_string(n_max));
    r.defect_abs = defects.back();
    r.defect_rel = defects.back();
    r.passed = monotone && defects.back() < tolerance;
    const auto t1 = std::chrono::steady_clock::now();
    r.runtime_ms =
        std::chrono::duration<double, std::milli>(t1 - t0).count();
    return r;
}

std::vector<std::string> suite_names() {
    std::vector<std::string> out;
    out.reserve(registry().size());
    for (const auto& [name, body] : registry()) out.push_back(name);
    return out;
}

VerificationReport run_suite(const std::string& name,
                             const SuiteOptions& options) {
    for (const auto& [key, body] : registry())
        if (key == name) return timed_suite(key, options, body);
    std::string known;
    for (const auto& [key, body] : registry()) {
        if (!known.empty()) known += ", ";
        known += key;
    }
    throw std::invalid_argument("run_suite: unknown suite '" + name +
                                "'; known suites: " + known);
}

std::vector<VerificationReport> run_all(const std::vector<std::string>& names,
                                        const SuiteOptions& options) {
    std::vector<VerificationReport> out;
    out.reserve(names.size());
    for (const std::string& name : names)
        out.push_back(run_suite(name, options));
    return out;
}

} // namespace epsics::verify
