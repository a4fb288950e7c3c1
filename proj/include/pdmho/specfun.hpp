#pragma once

#include <vector>

// Self-contained special functions: log-gamma, Jacobi polynomials with real
// parameters by three-term recurrence, Gauss-Jacobi quadrature.

namespace pdmho::specfun {

// Natural log of Gamma(x) for x > 0. Stirling series with upward shift;
// relative accuracy better than 1e-13 over the working range.
double ln_gamma(double x);

struct JacobiParams {
    double beta;    // first exponent (weight (1-t)^beta), > -1
    double gamma_;  // second exponent (weight (1+t)^gamma_), > -1
};

// P_n^{(beta,gamma)}(t) via the standard three-term recurrence.
double jacobi_p(int n, const JacobiParams& jp, double t);

// Full sequence P_0..P_n.
std::vector<double> jacobi_seq(int n, const JacobiParams& jp, double t);

// d/dt P_n^{(beta,gamma)}(t), via the shifted-parameter identity.
double jacobi_p_derivative(int n, const JacobiParams& jp, double t);

// Value of {(2n+b+g+2)(1-t^2) d/dt - (n+b+g+1)[b-g+(2n+b+g+2)t]} P_n(t).
// Equals -2(n+1)(n+b+g+1) P_{n+1}(t).
double jacobi_raise_rhs(int n, const JacobiParams& jp, double t);

// Squared L2 norm of P_n under the weight (1-t)^beta (1+t)^gamma on [-1,1].
double jacobi_norm_sq(int n, const JacobiParams& jp);

struct QuadRule {
    std::vector<double> nodes;    // ascending in (-1,1)
    std::vector<double> weights;  // all positive
};

// n-point Gauss-Jacobi rule for the weight (1-t)^beta (1+t)^gamma. Nodes are
// the roots of P_n, bracketed by sign scan and polished by Newton iteration
// (tolerance 1e-14, at most 100 iterations per root).
QuadRule gauss_jacobi(int n, const JacobiParams& jp);

}  // namespace pdmho::specfun
