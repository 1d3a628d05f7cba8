#pragma once

// Self-contained verification harness: named suites that recompute the
// library's closed forms against independent series or quadrature
// evaluations and report the measured defects against pinned tolerances.

#include "epsics/quadrature.hpp"

#include <complex>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace epsics::verify {

using cxd = std::complex<double>;
using Matrix = std::vector<std::vector<cxd>>;

// Outcome of one verification suite. `params` records the parameter box the
// suite ran over; defects are the measured maxima; `passed` is the single
// gate bit (defect within tolerance plus any suite-specific structural
// assertions). Fields other than runtime_ms are deterministic for a given
// build and platform.
struct VerificationReport {
    std::string suite;
    std::vector<std::pair<std::string, std::string>> params;
    double defect_abs = 0.0;
    double defect_rel = 0.0;
    double tolerance = 0.0;
    bool passed = false;
    double runtime_ms = 0.0;

    std::string to_json() const;
};

// Gram-type matrix whose exact value is diag(e^{-n eps}): entry (n, j) is
// the basis inner product of sheet-m members n and j under the damped
// weight, rescaled analytically so the exact off-diagonal entries vanish.
// Requires a complex_polar rule exact for the integrand family: radial
// degree >= 2 (n_max + m) and angular order > 2 n_max, else throws
// std::domain_error naming the requirement.
struct IdentityMatrixResult {
    Matrix matrix;
    VerificationReport report;
};

IdentityMatrixResult identity_matrix(int m, double eps, int n_max,
                                     const quad::QuadratureRule& rule);

// Runs identity_matrix over eps_list (which must be strictly decreasing)
// and asserts that the deviation from the identity, max entrywise |M - I|,
// decreases monotonically along the sweep and ends below tolerance.
VerificationReport identity_limit_sweep(int m, int n_max,
                                        std::span<const double> eps_list,
                                        const quad::QuadratureRule& rule,
                                        double tolerance);

// Quadrature orders used by suites that integrate over the complex plane.
struct SuiteOptions {
    int quad_radial = 64;
    int quad_angular = 64;
};

// Names of all registered suites, in execution order.
std::vector<std::string> suite_names();

// Runs one named suite (std::invalid_argument on an unknown name), or a
// list of suites (empty list -> empty result, no work done).
VerificationReport run_suite(const std::string& name,
                             const SuiteOptions& options = {});
std::vector<VerificationReport> run_all(
    const std::vector<std::string>& names, const SuiteOptions& options = {});

} // namespace epsics::verify
