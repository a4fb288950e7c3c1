#pragma once

#include <vector>

#include "pdmho/grid.hpp"
#include "pdmho/model.hpp"
#include "pdmho/specfun.hpp"

// Closed-form bound-state energies, quantum-number inversion, normalized
// wavefunctions, and exact Gauss-Jacobi inner products in the t variable.
//
// For line sectors every index n below counts within the parity tower
// (full-line quantum number 2n, or 2n+1 for the odd sector).

namespace pdmho {

double energy(const DerivedParams& dp, int n);

// Scalar delta_n = lambda/alpha + L + 1 + 2n (the deformed index variable).
double delta_n(const DerivedParams& dp, int n);

struct DeltaResult {
    double delta;
    int n;
    bool exact;  // false when E is not an eigenvalue of the sector
};

// delta from an energy value plus the rounded quantum number; exact inverse
// on eigenvalues. Throws on a negative radicand.
DeltaResult delta_and_n(const DerivedParams& dp, double E);

struct NormalizationTable {
    double N0 = 0;     // ground normalization (sector convention)
    double ln_N0 = 0;  // radial-form log used by the evaluators
    std::vector<double> ratio;     // N_n / N_0, ratio[0] = 1
    std::vector<double> ln_ratio;  // log of the above
    static constexpr double tau(int) { return 1.0; }  // fixed phase convention
};

NormalizationTable normalization_table(const DerivedParams& dp, int n_max);

// Jacobi exponents of the sector: beta = lambda/alpha - 1/2, gamma = L + 1/2.
specfun::JacobiParams jacobi_params(const DerivedParams& dp);

// Normalized wavefunction value at r (radial, r >= 0) or x (line, any real).
double psi(const DerivedParams& dp, int n, double r);

GridFunction psi_on_grid(const DerivedParams& dp, int n, const GridPtr& g);
// psi_0..psi_{n_max} sharing the recurrence work.
std::vector<GridFunction> psi_tower_on_grid(const DerivedParams& dp, int n_max, const GridPtr& g);

// Exact inner products: the Gauss-Jacobi rule in t integrates every
// psi_m psi_n (times polynomials in t) exactly over the full domain.
class BasisQuadrature {
  public:
    BasisQuadrature(const DerivedParams& dp, int n_max);

    // <psi_m, psi_n>; equals delta_mn in exact arithmetic.
    double overlap(int m, int n) const;
    // <psi_m, t psi_n>
    double t_element(int m, int n) const;
    // <psi_m, W(t) psi_n> for an arbitrary multiplication operator in t.
    template <class F>
    double weighted_element(int m, int n, F&& w_of_t) const {
        double s = 0.0;
        for (std::size_t i = 0; i < rule_.nodes.size(); ++i)
            s += rule_.weights[i] * w_of_t(rule_.nodes[i]) * p_[i][m] * p_[i][n];
        return s * prefactor(m, n);
    }

    const specfun::QuadRule& rule() const { return rule_; }

  private:
    double prefactor(int m, int n) const;

    specfun::QuadRule rule_;
    std::vector<std::vector<double>> p_;  // p_[node][degree]
    NormalizationTable table_;
    double ln_c0_;  // log of the weight-map constant absorbing N0^2
};

}  // namespace pdmho
