// Special-function layer: Laguerre / Hermite evaluation, the negative-
// superscript reduction, log-factorials, and the oscillator eigenfunction
// family — checked against explicit-sum oracles and pinned values.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "epsics/specfun.hpp"
#include "oracles.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

using namespace epsics::specfun;
using oracle::cxd;

namespace {
double rel_err(double got, double want) {
    return std::abs(got - want) / std::max(1.0, std::abs(want));
}
} // namespace

TEST_CASE("laguerre pinned values") {
    CHECK(laguerre(0, 2.5, 3.7) == 1.0);
    CHECK(laguerre(1, 0.0, 2.0) == doctest::Approx(-1.0).epsilon(1e-15));
    CHECK(laguerre(1, 0.0, 0.0) == doctest::Approx(1.0).epsilon(1e-15));
    // Degree 2, superscript -1, via the reduction path: equals
    // (-t) * (1/2) * L_1^{(1)}(t), so at t = 1 the value is -1/2.
    CHECK(laguerre(PolyIndex{2, -1}, 1.0) ==
          doctest::Approx(-0.5).epsilon(1e-15));
    // Plain recurrence at a negative non-integer superscript.
    CHECK(laguerre(2, -0.5, 1.0) ==
          doctest::Approx(oracle::laguerre_sum(2, -0.5, 1.0)).epsilon(1e-14));
}

TEST_CASE("laguerre recurrence matches explicit sum") {
    for (double alpha : {0.0, 1.0, 2.5, -0.5}) {
        for (int n = 0; n <= 12; ++n) {
            for (double t = -5.0; t <= 5.0; t += 0.5) {
                const double got = laguerre(n, alpha, t);
                const double want = oracle::laguerre_sum(n, alpha, t);
                CAPTURE(alpha);
                CAPTURE(n);
                CAPTURE(t);
                // Tolerance is set by the oracle: the alternating explicit
                // sum loses ~1e-11 to cancellation at the largest (n, t).
                CHECK(rel_err(got, want) < 1e-10);
            }
        }
    }
}

TEST_CASE("laguerre complex argument matches explicit sum") {
    const std::vector<cxd> pts{{0.3, 0.4}, {-1.2, 2.0}, {2.5, -0.7}, {0, 3}};
    for (double alpha : {0.0, 2.0}) {
        for (int n = 0; n <= 10; ++n) {
            for (const cxd& t : pts) {
                const cxd got = laguerre(n, alpha, t);
                const cxd want = oracle::laguerre_sum<cxd>(n, alpha, t);
                CHECK(std::abs(got - want) <
                      1e-11 * std::max(1.0, std::abs(want)));
            }
        }
    }
    // A complex argument on the real axis agrees with the real path exactly.
    const cxd on_axis = laguerre(5, 1.0, cxd{2.25, 0.0});
    CHECK(on_axis.real() == laguerre(5, 1.0, 2.25));
    CHECK(on_axis.imag() == 0.0);
}

TEST_CASE("negative-superscript reduction agrees with the explicit sum") {
    // The explicit sum remains valid at negative integer superscripts
    // (terms below the leading power vanish identically), so it checks the
    // dedicated reduction path end to end.
    for (int m = 1; m <= 10; ++m) {
        for (int k = 1; k <= m; ++k) {
            for (double t : {0.1, 1.0, 3.7, 9.0}) {
                const double got = laguerre(PolyIndex{m, -k}, t);
                const double want =
                    oracle::laguerre_sum(m, static_cast<double>(-k), t);
                CAPTURE(m);
                CAPTURE(k);
                CAPTURE(t);
                CHECK(rel_err(got, want) < 5e-12);
            }
        }
    }
    // Complex-argument variant of the same reduction.
    const cxd t{1.3, -0.6};
    const cxd got = laguerre(PolyIndex{4, -2}, t);
    const cxd want = oracle::laguerre_sum<cxd>(4, -2.0, t);
    CHECK(std::abs(got - want) < 1e-12 * std::abs(want));
}

TEST_CASE("negative superscript below -degree is rejected") {
    CHECK_THROWS_AS((void)laguerre(PolyIndex{3, -4}, 1.0), std::domain_error);
    CHECK_THROWS_AS((void)laguerre(PolyIndex{0, -1}, 0.5), std::domain_error);
    CHECK_THROWS_AS((void)laguerre(PolyIndex{2, -5}, cxd{1.0, 1.0}),
                    std::domain_error);
    CHECK_THROWS_AS((void)laguerre(-1, 0.0, 1.0), std::domain_error);
}

TEST_CASE("hermite pinned values and explicit sum") {
    CHECK(hermite(0, 5.0) == 1.0);
    CHECK(hermite(1, 1.5) == doctest::Approx(3.0).epsilon(1e-15));
    CHECK(hermite(3, 1.0) == doctest::Approx(-4.0).epsilon(1e-15));
    for (int n = 0; n <= 12; ++n) {
        for (double x = -3.0; x <= 3.0; x += 0.25) {
            const double got = hermite(n, x);
            const double want = oracle::hermite_sum(n, x);
            CAPTURE(n);
            CAPTURE(x);
            CHECK(std::abs(got - want) < 1e-11 * std::max(1.0, std::abs(want)));
        }
    }
    const cxd zarg{0.7, -1.1};
    for (int n = 0; n <= 8; ++n) {
        const cxd got = hermite(n, zarg);
        const cxd want = oracle::hermite_sum<cxd>(n, zarg);
        CHECK(std::abs(got - want) < 1e-11 * std::max(1.0, std::abs(want)));
    }
    CHECK_THROWS_AS((void)hermite(-2, 0.0), std::domain_error);
}

TEST_CASE("log_factorial pinned values and ratios") {
    CHECK(log_factorial(0) == 0.0);
    CHECK(log_factorial(1) == 0.0);
    CHECK(log_factorial(20) ==
          doctest::Approx(std::log(2432902008176640000.0)).epsilon(1e-15));
    for (int n = 1; n <= 60; ++n) {
        // Functional equation log n! - log (n-1)! = log n.
        CHECK(log_factorial(n) - log_factorial(n - 1) ==
              doctest::Approx(std::log(static_cast<double>(n)))
                  .epsilon(1e-13));
    }
    CHECK_THROWS_AS((void)log_factorial(-1), std::domain_error);
}

TEST_CASE("oscillator eigenfunctions match the explicit construction") {
    CHECK(ho_eigenfunction(0, 0.0) ==
          doctest::Approx(std::pow(std::numbers::pi, -0.25)).epsilon(1e-15));
    CHECK(ho_eigenfunction(1, 0.0) == 0.0);
    for (int n = 0; n <= 20; ++n) {
        for (double x : {-2.7, -1.0, -0.3, 0.0, 0.4, 1.9, 3.5}) {
            const double got = ho_eigenfunction(n, x);
            const double want = oracle::ho_eigenfunction(n, x);
            CAPTURE(n);
            CAPTURE(x);
            // The oracle's Hermite sum cancels heavily at n = 20, x = 3.5.
            CHECK(std::abs(got - want) < 1e-11 * std::max(1.0, std::abs(want)));
        }
    }
    CHECK_THROWS_AS((void)ho_eigenfunction(-1, 0.0), std::domain_error);
}

TEST_CASE("batch eigenfunction evaluation is consistent with single calls") {
    std::vector<double> batch(40);
    for (double x : {-3.1, 0.0, 0.6, 2.2}) {
        ho_eigenfunctions(x, batch);
        for (int n = 0; n < 40; ++n) {
            CHECK(batch[n] == ho_eigenfunction(n, x));
        }
    }
}

TEST_CASE("weightless polynomials carry the eigenfunction normalization") {
    // ho_polynomials omits the Gaussian factor: multiplying it back in
    // must reproduce the eigenfunctions.
    std::vector<double> polys(25);
    std::vector<double> eig(25);
    for (double x : {-2.0, -0.5, 0.0, 1.3, 2.8}) {
        ho_polynomials(x, polys);
        ho_eigenfunctions(x, eig);
        const double g = std::exp(-0.5 * x * x);
        for (int n = 0; n < 25; ++n) {
            CHECK(std::abs(polys[n] * g - eig[n]) <
                  1e-12 * std::max(1.0, std::abs(eig[n])));
        }
    }
}

TEST_CASE("eigenfunction normalization survives to large index") {
    // Values remain finite and of plausible magnitude far beyond the range
    // where naive Hermite evaluation would overflow.
    std::vector<double> batch(501);
    ho_eigenfunctions(1.0, batch);
    for (double v : batch) CHECK(std::isfinite(v));
    CHECK(std::abs(batch[500]) < 1.0);
}
