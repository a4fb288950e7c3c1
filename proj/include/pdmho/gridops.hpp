#pragma once

#include <vector>

#include "pdmho/grid.hpp"
#include "pdmho/model.hpp"
#include "pdmho/report.hpp"

// Grid realizations of the operator algebra: the tilde basis (Hamiltonian, t,
// their commutator), the bar basis, the ladder operators, and the residual
// checks for every operator identity. All generators are implemented in
// manifestly real expanded form; see docs/operator_forms.md for derivations.

namespace pdmho {

enum class Gen { K1_tilde, K2_tilde, K3_tilde, K1_bar, K2_bar, K3_bar };

// unsimplified = true evaluates K3_tilde in its raw expanded form
// -8a(r psi' + (a r^2/f) psi) + 4a t psi instead of -8a r psi' - 4a psi.
GridFunction apply_generator(Gen which, const DerivedParams& dp, const GridFunction& gf,
                             bool unsimplified = false);

// All six commutation relations (three tilde-basis, three bar-basis),
// one report per relation per test function.
std::vector<ResidualReport> commutator_residuals(const DerivedParams& dp,
                                                 const std::vector<GridFunction>& tests);

// (a) Casimir eigenvalue on each supplied eigenstate, (b) the transformed
// bracket operator annihilating test functions, (c) the bar-basis combination
// acting as multiplication by (1/16)[(2L+3)(2L-1) - 10 a r^2 - 7 a^2 r^4].
std::vector<ResidualReport> casimir_residuals(const DerivedParams& dp,
                                              const std::vector<GridFunction>& tests,
                                              const std::vector<GridFunction>& eigenstates);

// Scalar of the Casimir in the tilde basis: 16 a^2 [nu(nu-1) + L(L+1) - 2].
double casimir_scalar(const DerivedParams& dp);

enum class LadderOp { a_plus, a_minus, k_plus, k_minus, k0 };

// The two equivalent factor orderings of the deformed ladder definition:
// scalar_first evaluates the delta-dependent factor at delta_n before the
// n-shifting core acts; operator_first evaluates it at delta_{n+-1} after.
enum class DeltaOrdering { scalar_first, operator_first };

// Applies a ladder operator to the n-th eigenstate. The delta operator is
// replaced by its scalar value on the eigenstate. For k_minus at n = 0 the
// scalar factor is clamped at its branch point (nu + L - 1 <= 0 can only
// happen there); the annihilation content lives in a_minus.
GridFunction apply_ladder(const DerivedParams& dp, int n, LadderOp op, const GridFunction& psi_n,
                          DeltaOrdering ordering = DeltaOrdering::scalar_first);

// Ladder action on an arbitrary grid function by projection onto the
// eigenbasis psi_0..psi_{n_max} spanned by `basis`.
GridFunction apply_ladder_projected(const DerivedParams& dp, LadderOp op, const GridFunction& gf,
                                    const std::vector<GridFunction>& basis);

// <psi_m, Op psi_n> by grid quadrature (Simpson).
double ladder_element_grid(const DerivedParams& dp, int m, int n, LadderOp op,
                           const std::vector<GridFunction>& tower);

// ||K1 psi_n - E_n psi_n|| / ||E_n psi_n|| on the trimmed interior.
std::vector<ResidualReport> eigen_residuals(const DerivedParams& dp,
                                            const std::vector<GridFunction>& tower);

// Default trim for interior residual norms (edge band where one-sided
// stencils degrade plus nesting headroom).
inline constexpr std::size_t kEdgeTrim = 8;

}  // namespace pdmho
