#pragma once

#include <string>
#include <vector>

#include "pdmho/kernels.hpp"
#include "pdmho/model.hpp"
#include "pdmho/report.hpp"

// Verification suites aggregating every operator-identity residual producer,
// with their documented tolerances. Used by the verify CLI command and the
// acceptance tests.

namespace pdmho {

namespace tol {
inline constexpr double commutator_rel = 1e-5;
inline constexpr double casimir_eigen_rel = 1e-6;
inline constexpr double casimir_bracket_rel = 1e-5;
inline constexpr double casimir_cbar_rel = 1e-5;
inline constexpr double eigen_residual_rel = 1e-6;
inline constexpr double k3_forms_rel = 1e-12;
inline constexpr double elements_rel = 1e-8;
inline constexpr double kminus_zero_rel = 1e-8;
inline constexpr double orderings_rel = 1e-12;
inline constexpr double lambda_p_rel = 1e-13;
inline constexpr double tower_l2 = 1e-5;
inline constexpr double tower_rayleigh_rel = 1e-6;
inline constexpr double norm_recursion_rel = 1e-12;
inline constexpr double jacobi_raise_rel = 1e-10;
inline constexpr double orthonormality_abs = 1e-9;
inline constexpr double hermiticity_abs = 1e-8;
inline constexpr double deformed_matrix_rel = 1e-12;
inline constexpr double deformed_casimir_grid_abs = 1e-8;
inline constexpr double ground_ode_l2 = 1e-8;
inline constexpr double oracle_rel = 1e-6;
inline constexpr double overlap_deficit = 1e-6;
inline constexpr double limit_slope_window = 0.05;
}  // namespace tol

struct VerifyOptions {
    std::size_t grid_n = 4001;  // identity-residual grid
    double r_max = 0;           // 0: 8/sqrt(alpha)
    int n_states = 5;           // eigenstates entering the residual checks
    int n_elements = 6;         // matrix-element comparisons up to this n
    int n_tower = 8;
    kernels::Exec exec = kernels::default_exec();
};

struct VerifyEntry {
    ResidualReport report;
    double tolerance = 0;
    bool pass = false;
};

std::vector<VerifyEntry> suite_commutators(const DerivedParams& dp, const VerifyOptions& o);
std::vector<VerifyEntry> suite_casimir(const DerivedParams& dp, const VerifyOptions& o);
std::vector<VerifyEntry> suite_eigen(const DerivedParams& dp, const VerifyOptions& o);
// Raising identity, normalization recursion vs closed form, orthonormality.
std::vector<VerifyEntry> suite_jacobi(const DerivedParams& dp);
// Closed-form matrix elements vs quadrature on a fine grid, annihilation,
// ordering equivalence, Hermiticity, Casimir expectations.
std::vector<VerifyEntry> suite_ladder_elements(const DerivedParams& dp, const VerifyOptions& o);
std::vector<VerifyEntry> suite_tower(const DerivedParams& dp, const VerifyOptions& o);
// lambda_{p0+n} = E_n, admissible lowest weights, truncated-matrix identities.
std::vector<VerifyEntry> suite_repalg(const DerivedParams& dp);

struct VerifyResult {
    std::vector<VerifyEntry> entries;
    bool pass = true;
};

VerifyResult run_verification(const DerivedParams& dp, const VerifyOptions& o);

// Versioned machine-readable report.
std::string verify_to_json(const VerifyResult& vr, const DerivedParams& dp,
                           const VerifyOptions& o);

// Grid-selection helpers shared with the CLI.
double identity_grid_rmax(const DerivedParams& dp);
// Domain capturing all but `mass_tol` of the n-th state's squared norm.
double domain_for_mass(const DerivedParams& dp, int n, double mass_tol);

}  // namespace pdmho
