#pragma once

#include <complex>
#include <span>

namespace epsics::specfun {

using cxd = std::complex<double>;

// Index pair for generalized Laguerre evaluation. The superscript may be a
// negative integer k with 1 <= -k <= degree, in which case the value is the
// analytic continuation in the superscript.
struct PolyIndex {
    int degree = 0;
    int superscript = 0;
};

// ln(n!), accurate to ~1e-15 relative. Throws std::domain_error for n < 0.
double log_factorial(int n);

// Generalized Laguerre polynomial L_degree^(alpha)(t) by the three-term
// recurrence in the degree. Valid for any real alpha; callers that need the
// classical orthogonal family should keep alpha > -1.
double laguerre(int degree, double alpha, double t);
cxd laguerre(int degree, double alpha, cxd t);

// L_degree^(superscript)(t) for integer superscripts. Negative superscripts
// -k reduce to (-t)^k (m-k)!/m! L_{m-k}^(k)(t), defined for 1 <= k <= degree.
// Throws std::domain_error when the negative superscript is out of range.
double laguerre(PolyIndex idx, double t);
cxd laguerre(PolyIndex idx, cxd t);

// Physicists' Hermite polynomial H_degree(x) by recurrence.
double hermite(int degree, double x);
cxd hermite(int degree, cxd x);

// Harmonic-oscillator eigenfunction
//   phi_n(x) = (sqrt(pi) 2^n n!)^{-1/2} e^{-x^2/2} H_n(x),
// evaluated by the normalized recurrence
//   phi_{n+1} = x sqrt(2/(n+1)) phi_n - sqrt(n/(n+1)) phi_{n-1},
// which stays in range for n up to at least 500 and |x| <= 30.
double ho_eigenfunction(int n, double x);

// Fills out[k] = phi_k(x) for k = 0..out.size()-1 in one recurrence pass.
void ho_eigenfunctions(double x, std::span<double> out);

// Hermite polynomial scaled by the L^2 normalization but without the
// Gaussian envelope: h_n(x) = H_n(x) / sqrt(sqrt(pi) 2^n n!). Useful when
// the e^{-x^2} factor is carried by a quadrature weight instead.
void ho_polynomials(double x, std::span<double> out);

} // namespace epsics::specfun
