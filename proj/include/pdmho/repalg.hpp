#pragma once

#include <vector>

#include "pdmho/model.hpp"
#include "pdmho/report.hpp"

// Purely algebraic layer: the quadratic algebra's defining parameters, the
// positive-discrete-series irrep data, and closed-form matrix elements for
// the tilde and deformed bases.

namespace pdmho {

struct QJ3Params {
    double A2, C2, D, G1, G2;  // R = A1 = C1 = 0 implicitly
    double nondegeneracy() const { return D * D - 4.0 * A2 * G1; }
};

QJ3Params qj3_params(const DerivedParams& dp);

struct RepCoefficients {
    double p0 = 0;
    bool line = false;
    Parity parity = Parity::even;  // meaningful for line irreps
    // sequences at p = p0 + n, n = 0..n_max
    std::vector<double> lambda_p;  // eigenvalues of the diagonal generator
    std::vector<double> a_sq;      // a_p^2, cancellation-safe factored form
    std::vector<double> b_p;
    std::vector<double> g_p;
    // level-shifted coefficient tables, a_n[0] = 0, tau_n = +1
    std::vector<double> a_n, b_n, g_n;
    // some factor of a_p^2 within 1e-8 of zero away from p0 (parameter
    // coincidence the classification does not cover)
    bool near_degenerate = false;
};

RepCoefficients rep_coefficients(const DerivedParams& dp, int n_max);

// The two line-sector irreps (even, odd), in that order.
std::vector<RepCoefficients> line_irreps(const DerivedParams& dp, int n_max);

// a_p^2 as a function of p: factored product of the four linear factors over
// the prefactor 16 p^2 (2p-1)(2p+1).
double a_p_squared(const DerivedParams& dp, double p);

// Admissible lowest weights: roots of a_p^2 with a_{p0+n}^2 > 0 for n >= 1
// that are realized by the sector (one for radial, two for the full line).
std::vector<double> admissible_p0(const DerivedParams& dp);

struct TildeElements {
    std::vector<double> a, b, g;  // index n
};
TildeElements tilde_elements(const DerivedParams& dp, int n_max);

struct DeformedElements {
    std::vector<double> k_plus;   // <n+1|K+|n>, index n
    std::vector<double> k_minus;  // <n-1|K-|n>, index n (k_minus[0] = 0)
    std::vector<double> k0;       // <n|K0|n>
};
DeformedElements deformed_elements(const DerivedParams& dp, int n_max);

// Full-line-index matrix elements of the deformed generators for line
// sectors (step two in the full-line quantum number).
struct LineDeformedElements {
    std::vector<double> k_plus;  // <n+2|K+|n>
    std::vector<double> k_minus, k0;
};
LineDeformedElements line_deformed_elements(const DerivedParams& dp, int n_full_max);

// Constant-mass limits of the deformed elements.
double su11_k_plus(const DerivedParams& dp, int n);
double su11_k_minus(const DerivedParams& dp, int n);

// Deformed-algebra commutators and Casimir realized as dense matrices from
// the closed-form elements; residuals on the truncation-safe sub-block.
std::vector<ResidualReport> deformed_commutator_matrices(const DerivedParams& dp, int n_max);

// Eigenvalue of the deformed Casimir.
double deformed_casimir_scalar(const DerivedParams& dp);

}  // namespace pdmho
