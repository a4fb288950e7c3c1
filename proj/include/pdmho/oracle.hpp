#pragma once

#include <vector>

#include "pdmho/kernels.hpp"
#include "pdmho/model.hpp"

// Independent ground truth: conservative finite-difference discretization of
// the Sturm-Liouville form -d/dr (1/M) d/dr + V_tilde_eff with a
// self-contained tridiagonal eigensolver (Sturm bisection with relative
// termination plus inverse iteration). No closed-form wavefunction or energy
// enters the computation; closed forms appear only in the comparison layer.

namespace pdmho {

struct SLDiscretization {
    std::vector<double> r;     // interior nodes
    std::vector<double> diag;  // symmetric tridiagonal
    std::vector<double> off;   // negative off-diagonals, size n-1
    double h = 0;
    bool line = false;
    Parity parity = Parity::even;
};

// Radial: r_i = (i+1)h with Dirichlet ghosts at 0 and (n+1)h. Line sectors
// reduce to the staggered half grid x_i = (i+1/2)h with the parity condition
// at x = 0 (Neumann for even, Dirichlet for odd) and Dirichlet at the far end.
SLDiscretization assemble(const DerivedParams& dp, double h, std::size_t n);

struct SpectralResult {
    std::vector<double> eigenvalues;            // ascending
    std::vector<std::vector<double>> vectors;   // unit discrete norm, sign: max |entry| > 0
};

SpectralResult eigensolve(const SLDiscretization& disc, int k, bool with_vectors = true,
                          kernels::Exec exec = kernels::default_exec());
// Raw-entry variant for tests and reuse.
SpectralResult eigensolve_tridiag(const std::vector<double>& diag, const std::vector<double>& off,
                                  int k, bool with_vectors = true,
                                  kernels::Exec exec = kernels::default_exec());

// y = T x for the assembled matrix.
void apply_discretization(const SLDiscretization& disc, const std::vector<double>& x,
                          std::vector<double>& y);

struct OracleConfig {
    double h = 0;        // 0: choose from the spectral scale
    double r_max = 0;    // 0: choose from the tail-decay law
    double rel_tol = 1e-6;
    bool with_vectors = true;
    kernels::Exec exec = kernels::default_exec();
};

struct SpectrumCheck {
    int n;
    double E_closed, E_h, E_h2, E_extrap, rel_err, overlap;
};

// Solves at h and h/2, Richardson-extrapolates the order-2 error, and
// compares against the closed-form spectrum; also reports eigenvector
// overlaps with the closed-form wavefunctions on the fine grid.
std::vector<SpectrumCheck> verify_spectrum(const DerivedParams& dp, const std::vector<int>& ns,
                                           const OracleConfig& cfg = {});

// Default truncation radius from the power-law tail of the states
// (psi ~ r^{-(nu+1)}, eigenvalue shift ~ r_max^{1-2 nu}).
double default_domain(const DerivedParams& dp, int n_max, double rel_tol);
// Default spacing from the largest requested eigenvalue scale.
double default_spacing(const DerivedParams& dp, int n_max);

}  // namespace pdmho
