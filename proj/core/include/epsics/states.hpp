#pragma once

// Deformed coherent-state family built over the polyanalytic oscillator
// basis: normalization, expansion coefficients, two-point overlap kernel,
// position-space wavefunctions (series and closed form), the thermal
// reparameterization that absorbs a damping shift, and the associated
// real-line kernels (generating-function kernel and its damped variant)
// together with the smoothing operator they induce.

#include "epsics/sampled_function.hpp"

#include <complex>
#include <span>
#include <vector>

namespace epsics::states {

using cxd = std::complex<double>;

// Label (z, m, eps) of one state: complex center z, basis sheet m >= 0,
// damping parameter eps > 0. The constructor validates the ranges.
struct StateLabel {
    cxd z;
    int m;
    double eps;
    StateLabel(cxd z_, int m_, double eps_);
};

// Squared-norm prefactor of the unnormalized state. Strictly positive for
// every valid label; the log form is the stable primary representation.
double log_normalization(const StateLabel& label);
double normalization(const StateLabel& label);

// Truncation index that bounds the coefficient tail below double epsilon
// for the given label.
int default_truncation(const StateLabel& label);

// Expansion coefficients of the normalized state over the first `trunc`
// oscillator eigenstates, plus the mass 1 - sum |c_n|^2 left in the tail.
struct CoefficientVector {
    StateLabel label;
    std::vector<cxd> entries;
    double tail_mass;
};

CoefficientVector coefficients(const StateLabel& label, int trunc);

// Two-point kernel value packaged with the convention metadata under which
// it was computed.
enum class KernelKind { overlap, reproducing, mehler, heat };

struct KernelEval {
    cxd value;
    KernelKind kind;
    int m;
    double eps; // eps for overlap/heat; tau for mehler
    cxd z;      // first argument (or x on the real line)
    cxd w;      // second argument (or y on the real line)
};

// Normalized overlap of the states labeled (z, m, eps) and (w, m, eps).
// Equals 1 exactly on the diagonal z == w; Hermitian under argument swap.
KernelEval overlap(cxd z, cxd w, int m, double eps);

// Largest deviation |overlap(z, w; m, eps) - K_ratio(z, w; m)| over the
// supplied eps values, where K_ratio is the normalized reproducing kernel
// the overlap approaches as eps -> 0. Returns one defect per eps.
std::vector<double> overlap_limit_defect(cxd z, cxd w, int m,
                                         std::span<const double> eps_list);

// Position-space wavefunction of the normalized state: eigenfunction series
// with `trunc` terms, and the closed form. The unnormalized closed form
// (valid for eps >= 0) omits the 1/sqrt(normalization) factor.
cxd wavefunction_series(double x, const StateLabel& label, int trunc);
cxd wavefunction_closed(double x, const StateLabel& label);
cxd wavefunction_closed_unnormalized(double x, cxd z, int m, double eps);

// Damping shift eps -> eps + t absorbed into a rescaling: contracting the
// coefficient vector of `label` by diag(e^{-n t / 2}) yields `scale` times
// the coefficient vector of `shifted`.
struct ThermalShift {
    StateLabel shifted;
    double scale;
};

ThermalShift thermal_shift(const StateLabel& label, double t);

// Generating-function kernel of the oscillator eigenfunctions without the
// Gaussian envelopes: sum_n (tau/2)^n H_n(x) H_n(y) / (n! sqrt(pi)) in
// closed form, for 0 < tau < 1.
double mehler_kernel(double tau, double x, double y);

// Damped eigenfunction kernel sum_n e^{-n eps} phi_n(x) phi_n(y); equals
// e^{-(x^2+y^2)/2} * mehler_kernel(e^{-eps}, x, y). Requires eps > 0.
double heat_kernel(double eps, double x, double y);

// Applies the smoothing operator induced by heat_kernel(eps, ., .) to f,
// evaluated on x_grid. Integration uses a Gauss rule adapted to the
// kernel's Gaussian factor; the result is cross-checked against a
// doubled-order rule and a std::domain_error is thrown if the two disagree
// beyond adequacy_tol.
std::vector<double> apply_heat(double eps, const SampledFunction& f,
                               std::span<const double> x_grid,
                               int quad_order = 200,
                               double adequacy_tol = 1e-10);

} // namespace epsics::states
