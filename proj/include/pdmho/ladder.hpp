#pragma once

#include <vector>

#include "pdmho/grid.hpp"
#include "pdmho/gridops.hpp"
#include "pdmho/model.hpp"

// Algebraic construction of the whole bound-state tower: the ground state
// from its first-order ODE, then repeated application of the raising
// operator with the closed-form step normalization.

namespace pdmho {

// Integrates r d(ln psi)/dr = (L+1)(1-t)/2 - (nu+1)(1+t)/2 from the grid
// midpoint outward in both directions (RK4 in log space, substepped near the
// origin) and normalizes. The grid must exclude r = 0.
GridFunction ground_state_ode(const DerivedParams& dp, const GridPtr& g);

// One raising step: applies A+ with the scalar delta_n and the closed-form
// normalization factor, mapping a unit-normalized psi_n to psi_{n+1}.
// No renormalization is applied; the returned norm drifts only by grid error.
GridFunction raise_state(const DerivedParams& dp, int n, const GridFunction& psi_n);

// N_{n+1}/N_n recursion ratio.
double norm_recursion_ratio(const DerivedParams& dp, int n);

struct TowerResult {
    std::vector<GridFunction> states;   // unit grid norm
    std::vector<double> l2_deviation;   // distance to the closed-form state
    std::vector<double> rayleigh;       // <psi, K1 psi> per state
    std::vector<double> norm_error;     // |norm before renormalization - 1|
};

TowerResult build_tower(const DerivedParams& dp, const GridPtr& g, int n_max);

}  // namespace pdmho
