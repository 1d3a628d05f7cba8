#pragma once

// Independent reference implementations used as ground truth by the test
// binaries. Everything here is computed from explicit finite sums and
// products — no recurrences and no calls into the library under test — so
// agreement between a library routine and its oracle is meaningful.

#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace oracle {

using cxd = std::complex<double>;

// Exact factorial for n <= 20 (fits in 64-bit exactly; the double returned
// is exact for n <= 20 since 20! < 2^62 and every intermediate is exact).
inline double factorial(int n) {
    if (n < 0 || n > 20) throw std::invalid_argument("oracle factorial range");
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
    return static_cast<double>(f);
}

// Generalized Laguerre polynomial by its explicit sum,
//   L_n^{(a)}(t) = sum_{j=0}^{n} (-t)^j / j! * C(n + a, n - j),
// with the binomial evaluated as the finite product
//   C(n + a, n - j) = prod_{i=j+1}^{n} (a + i) / (n - j)!.
// The product form is valid for every real a, including the negative
// integers (where leading terms vanish identically).
template <typename T>
T laguerre_sum(int n, double a, T t) {
    if (n < 0) throw std::invalid_argument("oracle laguerre degree");
    T total{};
    for (int j = 0; j <= n; ++j) {
        double binom = 1.0;
        for (int i = j + 1; i <= n; ++i) binom *= (a + i) / (i - j);
        T term = binom;
        for (int p = 0; p < j; ++p) term *= -t / static_cast<double>(p + 1);
        total += term;
    }
    return total;
}

inline double laguerre_sum(int n, double a, double t) {
    return laguerre_sum<double>(n, a, t);
}

// Physicists' Hermite polynomial by its explicit sum,
//   H_n(x) = n! sum_{k=0}^{floor(n/2)} (-1)^k / (k! (n-2k)!) (2x)^{n-2k}.
template <typename T>
T hermite_sum(int n, T x) {
    if (n < 0) throw std::invalid_argument("oracle hermite degree");
    T total{};
    for (int k = 0; 2 * k <= n; ++k) {
        const int p = n - 2 * k;
        // n! / (k! p!) with p + 2k = n, accumulated as a product of small
        // ratios to keep intermediates modest.
        double coeff = 1.0;
        for (int i = 1; i <= k; ++i)
            coeff *= static_cast<double>(p + 2 * i - 1) *
                     static_cast<double>(p + 2 * i) / static_cast<double>(i);
        T term = (k % 2 == 0) ? T{1} : T{-1};
        term *= coeff;
        for (int q = 0; q < p; ++q) term *= 2.0 * x;
        total += term;
    }
    return total;
}

inline double hermite_sum(int n, double x) { return hermite_sum<double>(n, x); }

// Harmonic-oscillator eigenfunction phi_n for n <= 20, from the explicit
// Hermite sum and exact factorial.
inline double ho_eigenfunction(int n, double x) {
    const double norm =
        std::pow(std::acos(-1.0), -0.25) /
        std::sqrt(std::ldexp(1.0, n) * factorial(n));
    return norm * hermite_sum(n, x) * std::exp(-0.5 * x * x);
}

// Polyanalytic basis member by its explicit monomial form, with the
// Laguerre factor from the explicit sum above.
inline cxd phi(int m, int n, cxd z) {
    if (m < 0 || n < 0) throw std::invalid_argument("oracle phi index");
    const double t = std::norm(z);
    if (z == cxd{0.0, 0.0}) {
        if (m != n) return {};
        return cxd{(m % 2 == 0 ? 1.0 : -1.0) * factorial(m), 0.0};
    }
    if (n >= m) {
        cxd power{1.0, 0.0};
        for (int i = 0; i < n - m; ++i) power *= z;
        return (m % 2 == 0 ? 1.0 : -1.0) * factorial(m) * power *
               laguerre_sum(m, static_cast<double>(n - m), t);
    }
    cxd power{1.0, 0.0};
    for (int i = 0; i < m - n; ++i) power *= std::conj(z);
    return (n % 2 == 0 ? 1.0 : -1.0) * factorial(n) * power *
           laguerre_sum(n, static_cast<double>(m - n), t);
}

// Odd double factorial (2j-1)!! as a double, exact for j <= 16.
inline double odd_double_factorial(int j) {
    double f = 1.0;
    for (int i = 1; i <= j; ++i) f *= 2.0 * i - 1.0;
    return f;
}

} // namespace oracle
