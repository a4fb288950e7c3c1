#include "pdmho/verify.hpp"

#include <algorithm>
#include <cmath>

#include <json.hpp>

#include "pdmho/gridops.hpp"
#include "pdmho/ladder.hpp"
#include "pdmho/repalg.hpp"
#include "pdmho/spectrum.hpp"

namespace pdmho {

namespace {

VerifyEntry entry(ResidualReport r, double tolerance) {
    VerifyEntry e;
    e.pass = r.relative <= tolerance && std::isfinite(r.relative);
    e.tolerance = tolerance;
    e.report = std::move(r);
    return e;
}

VerifyEntry scalar_entry(std::string name, double residual, double scale, double tolerance) {
    return entry(make_report(std::move(name), residual, scale, GridMeta{}), tolerance);
}

double rel_l2_diff(const GridFunction& a, const GridFunction& b, std::size_t trim) {
    GridFunction d(a.grid);
    for (std::size_t i = 0; i < d.size(); ++i) d.v[i] = a.v[i] - b.v[i];
    const double scale = std::max(interior_l2(a, trim), interior_l2(b, trim));
    return scale > 0.0 ? interior_l2(d, trim) / scale : 0.0;
}

GridPtr identity_grid(const DerivedParams& dp, const VerifyOptions& o) {
    const double rm = o.r_max > 0.0 ? o.r_max : identity_grid_rmax(dp);
    if (dp.line) return make_line_grid(rm, std::max<std::size_t>(o.grid_n / 2, 7));
    return make_radial_grid(rm, std::max<std::size_t>(o.grid_n, 7));
}

std::vector<GridFunction> test_bumps(const DerivedParams& dp, const GridPtr& g) {
    const double rm = g->r_max();
    std::vector<GridFunction> out;
    if (dp.line) {
        out.push_back(bump(g, -0.45 * rm, 0.18 * rm));
        out.push_back(bump(g, 0.08 * rm, 0.20 * rm));
        out.push_back(bump(g, 0.50 * rm, 0.16 * rm));
    } else {
        out.push_back(bump(g, 0.22 * rm, 0.16 * rm));
        out.push_back(bump(g, 0.42 * rm, 0.14 * rm));
        out.push_back(bump(g, 0.62 * rm, 0.18 * rm));
    }
    return out;
}

}  // namespace

double identity_grid_rmax(const DerivedParams& dp) { return 8.0 / std::sqrt(dp.alpha); }

double domain_for_mass(const DerivedParams& dp, int n, double mass_tol) {
    const NormalizationTable tab = normalization_table(dp, n);
    const double nu = dp.nu, L = dp.L;
    const double beta = nu - 0.5;
    const double ln_pn1 = specfun::ln_gamma(n + beta + 1.0) - specfun::ln_gamma(n + 1.0)
                        - specfun::ln_gamma(beta + 1.0);
    const double ln_c = tab.ln_N0 + tab.ln_ratio[n] + ln_pn1 - 0.5 * (nu + L + 2.0) * std::log(dp.alpha);
    // tail mass: c^2 b^{-(2nu+1)} / (2nu+1)
    const double ln_b = (2.0 * ln_c - std::log(2.0 * nu + 1.0) - std::log(mass_tol))
                      / (2.0 * nu + 1.0);
    return std::max(20.0 / std::sqrt(dp.alpha), std::exp(ln_b));
}

std::vector<VerifyEntry> suite_commutators(const DerivedParams& dp, const VerifyOptions& o) {
    const GridPtr g = identity_grid(dp, o);
    const auto bumps = test_bumps(dp, g);
    std::vector<VerifyEntry> out;
    for (auto& rep : commutator_residuals(dp, bumps)) out.push_back(entry(rep, tol::commutator_rel));
    // algebraic equivalence of the two K3 forms
    double worst = 0.0;
    for (const auto& u : bumps) {
        const GridFunction s = apply_generator(Gen::K3_tilde, dp, u, false);
        const GridFunction r = apply_generator(Gen::K3_tilde, dp, u, true);
        worst = std::max(worst, rel_l2_diff(s, r, kEdgeTrim));
    }
    out.push_back(scalar_entry("tilde:K3 simplified vs raw form", worst, 1.0, tol::k3_forms_rel));
    return out;
}

std::vector<VerifyEntry> suite_casimir(const DerivedParams& dp, const VerifyOptions& o) {
    const GridPtr g = identity_grid(dp, o);
    const auto bumps = test_bumps(dp, g);
    auto states = psi_tower_on_grid(dp, o.n_states, g);
    std::vector<VerifyEntry> out;
    for (auto& rep : casimir_residuals(dp, bumps, states)) {
        double t = tol::casimir_cbar_rel;
        if (rep.identity.find("Q psi") != std::string::npos) t = tol::casimir_eigen_rel;
        else if (rep.identity.find("bracket") != std::string::npos) t = tol::casimir_bracket_rel;
        out.push_back(entry(rep, t));
    }
    return out;
}

std::vector<VerifyEntry> suite_eigen(const DerivedParams& dp, const VerifyOptions& o) {
    const GridPtr g = identity_grid(dp, o);
    auto states = psi_tower_on_grid(dp, o.n_states, g);
    std::vector<VerifyEntry> out;
    for (auto& rep : eigen_residuals(dp, states)) out.push_back(entry(rep, tol::eigen_residual_rel));
    return out;
}

std::vector<VerifyEntry> suite_jacobi(const DerivedParams& dp) {
    std::vector<VerifyEntry> out;
    const auto jp = jacobi_params(dp);

    // raising identity against the explicit right-hand side
    double worst = 0.0;
    for (int n = 0; n <= 12; ++n) {
        for (int i = 0; i < 50; ++i) {
            const double t = -1.0 + (i + 0.5) * (2.0 / 50.0);
            const double lhs = specfun::jacobi_raise_rhs(n, jp, t);
            const double rhs = -2.0 * (n + 1.0) * (n + jp.beta + jp.gamma_ + 1.0)
                             * specfun::jacobi_p(n + 1, jp, t);
            const double scale = std::max({std::abs(lhs), std::abs(rhs), 1e-3});
            worst = std::max(worst, std::abs(lhs - rhs) / scale);
        }
    }
    out.push_back(scalar_entry("jacobi:raising identity n<=12", worst, 1.0, tol::jacobi_raise_rel));

    // normalization recursion products against the closed-form ratios
    const NormalizationTable tab = normalization_table(dp, 11);
    double prod = 1.0, worst_rec = 0.0;
    for (int n = 0; n <= 10; ++n) {
        worst_rec = std::max(worst_rec, std::abs(prod - tab.ratio[n]) / tab.ratio[n]);
        prod *= norm_recursion_ratio(dp, n);
    }
    out.push_back(
        scalar_entry("norm:recursion product vs closed form", worst_rec, 1.0, tol::norm_recursion_rel));

    // orthonormality under the exact quadrature
    const BasisQuadrature bq(dp, 8);
    double worst_on = 0.0;
    for (int m = 0; m <= 8; ++m)
        for (int n = m; n <= 8; ++n) {
            const double expect = (m == n) ? 1.0 : 0.0;
            worst_on = std::max(worst_on, std::abs(bq.overlap(m, n) - expect));
        }
    out.push_back(scalar_entry("norm:orthonormality m,n<=8", worst_on, 1.0, tol::orthonormality_abs));
    return out;
}

namespace {

struct ElementGrid {
    GridPtr g;
    std::vector<GridFunction> tower;  // closed-form states 0..n_top
};

ElementGrid element_grid(const DerivedParams& dp, const VerifyOptions& o) {
    const int n_top = o.n_elements + 1;
    const double depth = std::abs(0.25 * (dp.omega * dp.omega - 8.0 * dp.alpha * dp.alpha))
                       + dp.alpha + 1.0;
    const double kappa = std::sqrt(energy(dp, n_top) + depth);
    const double h = 0.025 / kappa;
    // truncation of the element integrands ~ 8 a (nu+1) c^2 b^{-(2nu+1)}
    double rm = domain_for_mass(dp, n_top, tol::elements_rel * 0.02
                                               / (8.0 * dp.alpha * (dp.nu + 1.0)));
    std::size_t n = static_cast<std::size_t>(rm / h);
    if (n > 2'000'000) n = 2'000'000;
    ElementGrid eg;
    eg.g = dp.line ? make_line_grid(rm, n / 2) : make_radial_grid(rm, n);
    eg.tower = psi_tower_on_grid(dp, n_top, eg.g);
    return eg;
}

}  // namespace

std::vector<VerifyEntry> suite_ladder_elements(const DerivedParams& dp, const VerifyOptions& o) {
    std::vector<VerifyEntry> out;
    const ElementGrid eg = element_grid(dp, o);
    const int ne = o.n_elements;
    const DeformedElements de = deformed_elements(dp, ne + 1);
    const TildeElements te = tilde_elements(dp, ne + 1);

    // exact-quadrature route for the multiplication operator t
    const BasisQuadrature bq(dp, ne + 1);
    double worst_a = 0.0, worst_b = 0.0;
    for (int n = 0; n <= ne; ++n) {
        if (n >= 1)
            worst_a = std::max(worst_a,
                               std::abs(bq.t_element(n - 1, n) - te.a[n])
                                   / std::max(1e-30, std::abs(te.a[n])));
        worst_b = std::max(worst_b, std::abs(bq.t_element(n, n) - te.b[n])
                                        / std::max(1e-30, std::abs(te.b[n])));
    }
    out.push_back(scalar_entry("elements:a_n vs <n-1|t|n>", worst_a, 1.0, tol::elements_rel));
    out.push_back(scalar_entry("elements:b_n vs <n|t|n>", worst_b, 1.0, tol::elements_rel));

    // grid-quadrature route for the ladder generators
    double worst_kp = 0.0, worst_km = 0.0, worst_k0 = 0.0, worst_k3 = 0.0;
    for (int n = 0; n <= ne; ++n) {
        if (n + 1 <= ne + 1) {
            const double q = ladder_element_grid(dp, n + 1, n, LadderOp::k_plus, eg.tower);
            worst_kp = std::max(worst_kp, std::abs(q - de.k_plus[n]) / de.k_plus[n]);
            const double q3 = ladder_element_grid(dp, n + 1, n, LadderOp::a_plus, eg.tower);
            const double closed3 = 8.0 * dp.alpha * delta_n(dp, n) * te.a[n + 1];
            worst_k3 = std::max(worst_k3, std::abs(q3 - closed3) / std::abs(closed3));
        }
        if (n >= 1) {
            const double q = ladder_element_grid(dp, n - 1, n, LadderOp::k_minus, eg.tower);
            worst_km = std::max(worst_km, std::abs(q - de.k_minus[n]) / de.k_minus[n]);
        }
        const double q0 = ladder_element_grid(dp, n, n, LadderOp::k0, eg.tower);
        worst_k0 = std::max(worst_k0, std::abs(q0 - de.k0[n]) / de.k0[n]);
    }
    out.push_back(scalar_entry("elements:K+ closed vs quadrature", worst_kp, 1.0, tol::elements_rel));
    out.push_back(scalar_entry("elements:K- closed vs quadrature", worst_km, 1.0, tol::elements_rel));
    out.push_back(scalar_entry("elements:K0 closed vs quadrature", worst_k0, 1.0, tol::elements_rel));
    out.push_back(scalar_entry("elements:A+ action vs a,g coefficients", worst_k3, 1.0,
                               tol::elements_rel));

    // annihilation of the lowest state
    {
        const GridFunction km0 = apply_ladder(dp, 0, LadderOp::k_minus, eg.tower[0]);
        const GridFunction am0 = apply_ladder(dp, 0, LadderOp::a_minus, eg.tower[0]);
        const double d0 = delta_n(dp, 0);
        out.push_back(scalar_entry("ladder:K- psi_0 = 0", l2_norm(km0), 1.0, tol::kminus_zero_rel));
        out.push_back(scalar_entry("ladder:A- psi_0 = 0", l2_norm(am0) / (8.0 * dp.alpha * d0), 1.0,
                                   tol::kminus_zero_rel));
    }

    // the two delta-orderings agree
    {
        double worst = 0.0;
        for (int n = 0; n <= ne; ++n) {
            const GridFunction a = apply_ladder(dp, n, LadderOp::k_plus, eg.tower[n],
                                                DeltaOrdering::scalar_first);
            const GridFunction b = apply_ladder(dp, n, LadderOp::k_plus, eg.tower[n],
                                                DeltaOrdering::operator_first);
            worst = std::max(worst, rel_l2_diff(a, b, 0));
            if (n >= 1) {
                const GridFunction c = apply_ladder(dp, n, LadderOp::k_minus, eg.tower[n],
                                                    DeltaOrdering::scalar_first);
                const GridFunction d = apply_ladder(dp, n, LadderOp::k_minus, eg.tower[n],
                                                    DeltaOrdering::operator_first);
                worst = std::max(worst, rel_l2_diff(c, d, 0));
            }
        }
        out.push_back(scalar_entry("ladder:delta orderings agree", worst, 1.0, tol::orderings_rel));
    }

    // Hermiticity <m|K+|n> = <K- m|n>
    {
        double worst = 0.0;
        for (int m = 0; m <= ne; ++m) {
            const GridFunction km = apply_ladder(dp, m, LadderOp::k_minus, eg.tower[m]);
            for (int n = 0; n <= ne; ++n) {
                const GridFunction kp = apply_ladder(dp, n, LadderOp::k_plus, eg.tower[n]);
                const double lhs = inner_product(eg.tower[m], kp);
                const double rhs = inner_product(km, eg.tower[n]);
                worst = std::max(worst, std::abs(lhs - rhs));
            }
        }
        out.push_back(scalar_entry("ladder:Hermiticity <m|K+|n>=<K-m|n>", worst, 1.0,
                                   tol::hermiticity_abs));
    }

    // deformed commutators on the eigenbasis by quadrature
    {
        const double al = dp.alpha / dp.lambda;
        double worst = 0.0;
        for (int n = 0; n + 1 <= ne; ++n) {
            const GridFunction kp = apply_ladder(dp, n, LadderOp::k_plus, eg.tower[n]);
            const GridFunction k0kp = apply_ladder(dp, n + 1, LadderOp::k0, kp);
            const GridFunction k0n = apply_ladder(dp, n, LadderOp::k0, eg.tower[n]);
            const GridFunction kpk0 = apply_ladder(dp, n, LadderOp::k_plus, k0n);
            const double lhs = inner_product(eg.tower[n + 1], k0kp)
                             - inner_product(eg.tower[n + 1], kpk0);
            const double rhs = al * de.k_plus[n] * (delta_n(dp, n) + 1.0);
            worst = std::max(worst, std::abs(lhs - rhs));
        }
        out.push_back(scalar_entry("deformed:[K0,K+] on eigenbasis", worst, 1.0,
                                   tol::hermiticity_abs));

        worst = 0.0;
        for (int n = 0; n <= std::min(ne, o.n_states); ++n) {
            const GridFunction km = apply_ladder(dp, n, LadderOp::k_minus, eg.tower[n]);
            const GridFunction kp = apply_ladder(dp, n, LadderOp::k_plus, eg.tower[n]);
            const double lhs = inner_product(km, km) - inner_product(kp, kp);
            const double rhs = -al * delta_n(dp, n)
                             * (2.0 * de.k0[n] + dp.alpha / (4.0 * dp.lambda));
            worst = std::max(worst, std::abs(lhs - rhs));
        }
        out.push_back(scalar_entry("deformed:[K+,K-] on eigenbasis", worst, 1.0,
                                   tol::hermiticity_abs));

        // Casimir expectation, n-independent
        worst = 0.0;
        const double cs = deformed_casimir_scalar(dp);
        for (int n = 0; n <= std::min(ne, o.n_states); ++n) {
            const GridFunction km = apply_ladder(dp, n, LadderOp::k_minus, eg.tower[n]);
            const GridFunction k0n = apply_ladder(dp, n, LadderOp::k0, eg.tower[n]);
            const double expect = -inner_product(km, km) + inner_product(k0n, k0n)
                                - al * (delta_n(dp, n) - 1.25)
                                      * inner_product(eg.tower[n], k0n)
                                - dp.alpha * dp.alpha / (8.0 * dp.lambda * dp.lambda)
                                      * delta_n(dp, n);
            worst = std::max(worst, std::abs(expect - cs));
        }
        out.push_back(scalar_entry("deformed:Casimir expectation", worst, 1.0,
                                   tol::deformed_casimir_grid_abs));
    }
    return out;
}

std::vector<VerifyEntry> suite_tower(const DerivedParams& dp, const VerifyOptions& o) {
    std::vector<VerifyEntry> out;
    const int nt = o.n_tower;
    const double depth = std::abs(0.25 * (dp.omega * dp.omega - 8.0 * dp.alpha * dp.alpha))
                       + dp.alpha + 1.0;
    const double kappa = std::sqrt(energy(dp, nt) + depth);
    const double h = 0.04 / kappa;
    const double rm = domain_for_mass(dp, nt, 1e-8);
    std::size_t n = static_cast<std::size_t>(rm / h);
    if (n > 500'000) n = 500'000;
    const GridPtr g = dp.line ? make_line_grid(rm, n / 2) : make_radial_grid(rm, n);

    {
        GridFunction ode = ground_state_ode(dp, g);
        GridFunction ref = psi_on_grid(dp, 0, g);
        normalize(ref);
        if (inner_product(ode, ref) < 0.0)
            for (double& x : ode.v) x = -x;
        GridFunction diff(g);
        for (std::size_t i = 0; i < diff.size(); ++i) diff.v[i] = ode.v[i] - ref.v[i];
        out.push_back(
            scalar_entry("tower:ground state ODE vs closed form", l2_norm(diff), 1.0,
                         tol::ground_ode_l2));
    }

    const TowerResult tr = build_tower(dp, g, nt);
    double worst_dev = 0.0, worst_ray = 0.0, worst_norm = 0.0;
    for (int k = 0; k <= nt; ++k) {
        worst_dev = std::max(worst_dev, tr.l2_deviation[k]);
        worst_ray = std::max(worst_ray,
                             std::abs(tr.rayleigh[k] - energy(dp, k)) / energy(dp, k));
        worst_norm = std::max(worst_norm, tr.norm_error[k]);
    }
    out.push_back(scalar_entry("tower:L2 deviation vs closed forms", worst_dev, 1.0, tol::tower_l2));
    out.push_back(
        scalar_entry("tower:Rayleigh quotients vs spectrum", worst_ray, 1.0, tol::tower_rayleigh_rel));
    out.push_back(scalar_entry("tower:norm drift per raise", worst_norm, 1.0, 1e-6));

    // A+ action against the a,g coefficients on closed-form states
    const auto tower = psi_tower_on_grid(dp, nt, g);
    const TildeElements te = tilde_elements(dp, nt);
    double worst_ap = 0.0;
    for (int k = 0; k + 1 <= nt; ++k) {
        const GridFunction ap = apply_ladder(dp, k, LadderOp::a_plus, tower[k]);
        const double coef = 8.0 * dp.alpha * delta_n(dp, k) * te.a[k + 1];
        GridFunction rhs(g);
        for (std::size_t i = 0; i < rhs.size(); ++i) rhs.v[i] = coef * tower[k + 1].v[i];
        worst_ap = std::max(worst_ap, rel_l2_diff(ap, rhs, kEdgeTrim));
    }
    out.push_back(scalar_entry("tower:A+ maps psi_n to psi_{n+1}", worst_ap, 1.0, 1e-8));
    return out;
}

std::vector<VerifyEntry> suite_repalg(const DerivedParams& dp) {
    std::vector<VerifyEntry> out;
    const RepCoefficients rc = rep_coefficients(dp, 20);
    double worst = 0.0;
    for (int n = 0; n <= 20; ++n) {
        const double e = energy(dp, n);
        worst = std::max(worst, std::abs(rc.lambda_p[n] - e) / e);
    }
    out.push_back(scalar_entry("repalg:lambda_{p0+n} = E_n", worst, 1.0, tol::lambda_p_rel));

    double a0 = std::abs(rc.a_sq[0]);
    bool positive = true;
    for (std::size_t n = 1; n < rc.a_sq.size(); ++n) positive = positive && rc.a_sq[n] > 0.0;
    out.push_back(scalar_entry("repalg:a_{p0}^2 = 0 and a^2 > 0 above", a0 + (positive ? 0.0 : 1.0),
                               1.0, 1e-14));

    const auto p0s = admissible_p0(dp);
    const int expected = dp.line ? 2 : 1;
    out.push_back(scalar_entry("repalg:admissible p0 count",
                               std::abs(static_cast<double>(p0s.size()) - expected), 1.0, 0.5));

    for (auto& rep : deformed_commutator_matrices(dp, 12))
        out.push_back(entry(rep, tol::deformed_matrix_rel));
    return out;
}

VerifyResult run_verification(const DerivedParams& dp, const VerifyOptions& o) {
    VerifyResult vr;
    const auto add = [&](std::vector<VerifyEntry> es) {
        for (auto& e : es) {
            vr.pass = vr.pass && e.pass;
            vr.entries.push_back(std::move(e));
        }
    };
    add(suite_commutators(dp, o));
    add(suite_casimir(dp, o));
    add(suite_eigen(dp, o));
    add(suite_jacobi(dp));
    add(suite_ladder_elements(dp, o));
    add(suite_tower(dp, o));
    add(suite_repalg(dp));
    return vr;
}

std::string verify_to_json(const VerifyResult& vr, const DerivedParams& dp,
                           const VerifyOptions& o) {
    nlohmann::json j;
    j["schema_version"] = 1;
    j["alpha"] = dp.alpha;
    j["omega"] = dp.omega;
    j["sector"] = sector_name(dp);
    j["grid_n"] = o.grid_n;
    j["pass"] = vr.pass;
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& e : vr.entries) {
        entries.push_back({{"identity", e.report.identity},
                           {"residual", e.report.residual},
                           {"scale", e.report.scale},
                           {"relative", e.report.relative},
                           {"tolerance", e.tolerance},
                           {"pass", e.pass},
                           {"grid",
                            {{"h", e.report.grid.h},
                             {"n", e.report.grid.n},
                             {"r_max", e.report.grid.r_max}}}});
    }
    j["entries"] = entries;
    return j.dump(2);
}

}  // namespace pdmho
