#include "epsics/specfun.hpp"

#include <cmath>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

namespace epsics::specfun {

namespace {

constexpr double kInvQuarterRootPi = 0.7511255444649425; // pi^{-1/4}

// Degree recurrence shared by the real and complex evaluations:
// L_0 = 1, L_1 = 1 + alpha - t,
// (j+1) L_{j+1} = (2j + 1 + alpha - t) L_j - (j + alpha) L_{j-1}.
template <class T>
T laguerre_recurrence(int degree, double alpha, T t) {
    if (degree == 0) return T(1);
    T prev = T(1);
    T cur = T(1.0 + alpha) - t;
    for (int j = 1; j < degree; ++j) {
        T next = ((2.0 * j + 1.0 + alpha - t) * cur - (j + alpha) * prev) /
                 (j + 1.0);
        prev = cur;
        cur = next;
    }
    return cur;
}

// H_0 = 1, H_1 = 2x, H_{n+1} = 2x H_n - 2n H_{n-1}.
template <class T>
T hermite_recurrence(int degree, T x) {
    if (degree == 0) return T(1);
    T prev = T(1);
    T cur = 2.0 * x;
    for (int n = 1; n < degree; ++n) {
        T next = 2.0 * x * cur - 2.0 * n * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

template <class T>
T laguerre_signed(int degree, int superscript, T t) {
    if (degree < 0)
        throw std::domain_error("laguerre: degree must be nonnegative, got " +
                                std::to_string(degree));
    if (superscript >= 0)
        return laguerre_recurrence<T>(degree, superscript, t);
    const int k = -superscript;
    if (k > degree)
        throw std::domain_error(
            "laguerre: superscript " + std::to_string(superscript) +
            " out of range for degree " + std::to_string(degree) +
            " (needs 1 <= -superscript <= degree)");
    // L_m^{(-k)}(t) = (-t)^k (m-k)!/m! L_{m-k}^{(k)}(t), 1 <= k <= m.
    T power = T(1);
    for (int i = 0; i < k; ++i) power *= -t;
    const double ratio = std::exp(log_factorial(degree - k) -
                                  log_factorial(degree));
    return power * ratio * laguerre_recurrence<T>(degree - k, k, t);
}

} // namespace

double log_factorial(int n) {
    if (n < 0)
        throw std::domain_error("log_factorial: negative argument " +
                                std::to_string(n));
    static std::vector<double> table;
    static std::once_flag once;
    std::call_once(once, [] {
        table.resize(1024);
        for (int k = 0; k < 1024; ++k) table[k] = std::lgamma(k + 1.0);
    });
    if (n < static_cast<int>(table.size())) return table[n];
    return std::lgamma(n + 1.0);
}

double laguerre(int degree, double alpha, double t) {
    if (degree < 0)
        throw std::domain_error("laguerre: degree must be nonnegative, got " +
                                std::to_string(degree));
    return laguerre_recurrence<double>(degree, alpha, t);
}

cxd laguerre(int degree, double alpha, cxd t) {
    if (degree < 0)
        throw std::domain_error("laguerre: degree must be nonnegative, got " +
                                std::to_string(degree));
    return laguerre_recurrence<cxd>(degree, alpha, t);
}

double laguerre(PolyIndex idx, double t) {
    return laguerre_signed<double>(idx.degree, idx.superscript, t);
}

cxd laguerre(PolyIndex idx, cxd t) {
    return laguerre_signed<cxd>(idx.degree, idx.superscript, t);
}

double hermite(int degree, double x) {
    if (degree < 0)
        throw std::domain_error("hermite: degree must be nonnegative, got " +
                                std::to_string(degree));
    return hermite_recurrence<double>(degree, x);
}

cxd hermite(int degree, cxd x) {
    if (degree < 0)
        throw std::domain_error("hermite: degree must be nonnegative, got " +
                                std::to_string(degree));
    return hermite_recurrence<cxd>(degree, x);
}

double ho_eigenfunction(int n, double x) {
    if (n < 0)
        throw std::domain_error(
            "ho_eigenfunction: index must be nonnegative, got " +
            std::to_string(n));
    double prev = 0.0;
    double cur = kInvQuarterRootPi * std::exp(-0.5 * x * x);
    for (int k = 0; k < n; ++k) {
        double next = x * std::sqrt(2.0 / (k + 1)) * cur -
                      std::sqrt(k / (k + 1.0)) * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

void ho_eigenfunctions(double x, std::span<double> out) {
    if (out.empty()) return;
    out[0] = kInvQuarterRootPi * std::exp(-0.5 * x * x);
    if (out.size() == 1) return;
    out[1] = x * std::sqrt(2.0) * out[0];
    for (std::size_t k = 1; k + 1 < out.size(); ++k)
        out[k + 1] = x * std::sqrt(2.0 / (k + 1)) * out[k] -
                     std::sqrt(k / (k + 1.0)) * out[k - 1];
}

void ho_polynomials(double x, std::span<double> out) {
    if (out.empty()) return;
    out[0] = kInvQuarterRootPi;
    if (out.size() == 1) return;
    out[1] = x * std::sqrt(2.0) * out[0];
    for (std::size_t k = 1; k + 1 < out.size(); ++k)
        out[k + 1] = x * std::sqrt(2.0 / (k + 1)) * out[k] -
                     std::sqrt(k / (k + 1.0)) * out[k - 1];
}

} // namespace epsics::specfun
