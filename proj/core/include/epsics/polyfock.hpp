#pragma once

#include <complex>

#include "epsics/quadrature.hpp"

namespace epsics::polyfock {

using cxd = std::complex<double>;

// Landau level m and radial index n of a basis function Phi_n^m.
struct LevelIndex {
    int m = 0;
    int n = 0;
};

// Polyanalytic Fock basis function
//   Phi_n^m(z) = (-1)^{m ^ n} (m ^ n)! |z|^{|m-n|} e^{-i(m-n) arg z}
//                L_{m ^ n}^{(|m-n|)}(|z|^2),        m ^ n = min(m, n),
// evaluated in the single-valued monomial form
//   n >= m:  (-1)^m m! z^{n-m}       L_m^{(n-m)}(|z|^2)
//   n <  m:  (-1)^n n! conj(z)^{m-n} L_n^{(m-n)}(|z|^2)
// so z = 0 needs no arg(0).
cxd phi(LevelIndex idx, cxd z);

// Squared norm weight sigma_{m,eps}(n) = pi m! n! e^{n eps} and its log.
double sigma(int m, double eps, int n);
double log_sigma(int m, double eps, int n);

// Reproducing kernel of the level-m space,
//   K_m(z, w) = pi^{-1} e^{z conj(w)} L_m^{(0)}(|z - w|^2).
cxd reproducing_kernel(int m, cxd z, cxd w);

// Numerical int_C Phi_j^m(z) conj(Phi_n^m(z)) e^{-|z|^2} dA(z) under the
// given polar rule; equals pi m! n! delta_{nj} when the rule is adequate.
// Throws std::domain_error naming the required radial degree and angular
// order if the rule cannot integrate the family exactly.
cxd basis_inner_product(int m, int n, int j, const quad::QuadratureRule& rule);

} // namespace epsics::polyfock
