#include "pdmho/gridops.hpp"

#include <cmath>
#include <stdexcept>

#include "pdmho/spectrum.hpp"

namespace pdmho {

namespace {

GridMeta meta_of(const GridPtr& g) { return {g->h, g->size(), g->r_max()}; }

GridFunction diff_residual(const GridFunction& a, const GridFunction& b) {
    GridFunction out(a.grid);
    for (std::size_t i = 0; i < a.size(); ++i) out.v[i] = a.v[i] - b.v[i];
    return out;
}

ResidualReport window_report(std::string name, const GridFunction& lhs, const GridFunction& rhs,
                             double fallback_scale = 0.0) {
    const GridFunction res = diff_residual(lhs, rhs);
    const double r = interior_l2(res, kEdgeTrim);
    double scale = std::max(interior_l2(lhs, kEdgeTrim), interior_l2(rhs, kEdgeTrim));
    if (scale <= 0.0) scale = fallback_scale;
    return make_report(std::move(name), r, scale, meta_of(lhs.grid));
}

}  // namespace

GridFunction apply_generator(Gen which, const DerivedParams& dp, const GridFunction& gf,
                             bool unsimplified) {
    const auto& g = *gf.grid;
    const double a = dp.alpha, w2 = dp.omega * dp.omega;
    const double ll1 = dp.L * (dp.L + 1.0);
    GridFunction out(gf.grid);

    switch (which) {
        case Gen::K1_tilde:
        case Gen::K1_bar: {
            const GridFunction d1 = differentiate(gf, 1);
            const GridFunction d2 = differentiate(gf, 2);
            for (std::size_t i = 0; i < g.size(); ++i) {
                const double r = g.pts[i], r2 = r * r;
                const double f = 1.0 + a * r2;
                double v = -(f * f * d2.v[i] + 4.0 * a * r * f * d1.v[i]
                             + (a * f + a * a * r2) * gf.v[i]);
                if (ll1 != 0.0) v += ll1 / r2 * gf.v[i];
                v += 0.25 * w2 * r2 * gf.v[i];
                out.v[i] = v;
            }
            return out;
        }
        case Gen::K2_tilde:
            for (std::size_t i = 0; i < g.size(); ++i)
                out.v[i] = t_of_r(dp, g.pts[i]) * gf.v[i];
            return out;
        case Gen::K3_tilde: {
            const GridFunction d1 = differentiate(gf, 1);
            if (!unsimplified) {
                for (std::size_t i = 0; i < g.size(); ++i)
                    out.v[i] = -8.0 * a * g.pts[i] * d1.v[i] - 4.0 * a * gf.v[i];
            } else {
                for (std::size_t i = 0; i < g.size(); ++i) {
                    const double r = g.pts[i], f = 1.0 + a * r * r;
                    out.v[i] = -8.0 * a * (r * d1.v[i] + (a * r * r / f) * gf.v[i])
                             + 4.0 * a * t_of_r(dp, r) * gf.v[i];
                }
            }
            return out;
        }
        case Gen::K2_bar:
            for (std::size_t i = 0; i < g.size(); ++i)
                out.v[i] = g.pts[i] * g.pts[i] * gf.v[i];
            return out;
        case Gen::K3_bar: {
            const GridFunction d1 = differentiate(gf, 1);
            for (std::size_t i = 0; i < g.size(); ++i) {
                const double r = g.pts[i], f = 1.0 + a * r * r;
                out.v[i] = -4.0 * r * f * d1.v[i] - (4.0 * a * r * r + 2.0 * f) * gf.v[i];
            }
            return out;
        }
    }
    throw std::logic_error("apply_generator: unreachable");
}

namespace {

GridFunction multiply(const DerivedParams& dp, const GridFunction& gf,
                      double (*w)(const DerivedParams&, double)) {
    GridFunction out(gf.grid);
    for (std::size_t i = 0; i < gf.size(); ++i) out.v[i] = w(dp, gf.grid->pts[i]) * gf.v[i];
    return out;
}

GridFunction lincomb(double ca, const GridFunction& a, double cb, const GridFunction& b) {
    GridFunction out(a.grid);
    for (std::size_t i = 0; i < a.size(); ++i) out.v[i] = ca * a.v[i] + cb * b.v[i];
    return out;
}

}  // namespace

std::vector<ResidualReport> commutator_residuals(const DerivedParams& dp,
                                                 const std::vector<GridFunction>& tests) {
    std::vector<ResidualReport> reports;
    const double a = dp.alpha, w2 = dp.omega * dp.omega;
    const double ll1 = dp.L * (dp.L + 1.0);
    const double c_nu = dp.nu * (dp.nu - 1.0);

    for (const auto& u : tests) {
        const auto K1 = [&](const GridFunction& x) { return apply_generator(Gen::K1_tilde, dp, x); };
        const auto K2 = [&](const GridFunction& x) { return apply_generator(Gen::K2_tilde, dp, x); };
        const auto K3 = [&](const GridFunction& x) { return apply_generator(Gen::K3_tilde, dp, x); };
        const auto K3b = [&](const GridFunction& x) { return apply_generator(Gen::K3_bar, dp, x); };
        const auto R2 = [&](const GridFunction& x) { return apply_generator(Gen::K2_bar, dp, x); };
        const auto F = [&](const GridFunction& x) {
            return multiply(dp, x, [](const DerivedParams& d, double r) {
                return 1.0 + d.alpha * r * r;
            });
        };

        // [K1,K2] = K3
        {
            const GridFunction lhs = diff_residual(K1(K2(u)), K2(K1(u)));
            reports.push_back(window_report("tilde:[K1,K2]=K3", lhs, K3(u)));
        }
        // [K2,K3] = 8a(1 - t^2)
        {
            const GridFunction lhs = diff_residual(K2(K3(u)), K3(K2(u)));
            GridFunction rhs(u.grid);
            for (std::size_t i = 0; i < u.size(); ++i) {
                const double t = t_of_r(dp, u.grid->pts[i]);
                rhs.v[i] = 8.0 * a * (1.0 - t * t) * u.v[i];
            }
            reports.push_back(window_report("tilde:[K2,K3]=8a(1-K2^2)", lhs, rhs));
        }
        // [K3,K1] = -8a{K1,K2} - 16a^2[nu(nu-1)+L(L+1)-1]K2 - 16a^2[nu(nu-1)-L(L+1)]
        {
            const GridFunction lhs = diff_residual(K3(K1(u)), K1(K3(u)));
            const GridFunction anti = lincomb(1.0, K1(K2(u)), 1.0, K2(K1(u)));
            GridFunction rhs(u.grid);
            const double c2 = 16.0 * a * a * (c_nu + ll1 - 1.0);
            const double c3 = 16.0 * a * a * (c_nu - ll1);
            for (std::size_t i = 0; i < u.size(); ++i) {
                const double t = t_of_r(dp, u.grid->pts[i]);
                rhs.v[i] = -8.0 * a * anti.v[i] - c2 * t * u.v[i] - c3 * u.v[i];
            }
            reports.push_back(window_report("tilde:[K3,K1]=-8a{K1,K2}-...", lhs, rhs));
        }
        // [K1b,K2b] = {1 + a K2b, K3b}/2
        {
            const GridFunction lhs = diff_residual(K1(R2(u)), R2(K1(u)));
            const GridFunction rhs = lincomb(0.5, F(K3b(u)), 0.5, K3b(F(u)));
            reports.push_back(window_report("bar:[K1,K2]={1+aK2,K3}/2", lhs, rhs));
        }
        // [K2b,K3b] = 8 K2b (1 + a K2b)
        {
            const GridFunction lhs = diff_residual(R2(K3b(u)), K3b(R2(u)));
            GridFunction rhs(u.grid);
            for (std::size_t i = 0; i < u.size(); ++i) {
                const double r2 = u.grid->pts[i] * u.grid->pts[i];
                rhs.v[i] = 8.0 * r2 * (1.0 + a * r2) * u.v[i];
            }
            reports.push_back(window_report("bar:[K2,K3]=8K2(1+aK2)", lhs, rhs));
        }
        // [K3b,K1b] = 4{1+aK2b,K1b} - 16a^2 nu(nu-1) K2b(1+aK2b) + 4a(1+aK2b)(1+3aK2b)
        {
            const GridFunction lhs = diff_residual(K3b(K1(u)), K1(K3b(u)));
            const GridFunction anti = lincomb(1.0, F(K1(u)), 1.0, K1(F(u)));
            GridFunction rhs(u.grid);
            const double c2 = 16.0 * a * a * c_nu;  // equals 4 omega^2
            for (std::size_t i = 0; i < u.size(); ++i) {
                const double r2 = u.grid->pts[i] * u.grid->pts[i];
                const double f = 1.0 + a * r2;
                rhs.v[i] = 4.0 * anti.v[i] - c2 * r2 * f * u.v[i]
                         + 4.0 * a * f * (1.0 + 3.0 * a * r2) * u.v[i];
            }
            reports.push_back(window_report("bar:[K3,K1]=4{1+aK2,K1}-...", lhs, rhs));
        }
        (void)w2;
    }
    return reports;
}

double casimir_scalar(const DerivedParams& dp) {
    return 16.0 * dp.alpha * dp.alpha
         * (dp.nu * (dp.nu - 1.0) + dp.L * (dp.L + 1.0) - 2.0);
}

std::vector<ResidualReport> casimir_residuals(const DerivedParams& dp,
                                              const std::vector<GridFunction>& tests,
                                              const std::vector<GridFunction>& eigenstates) {
    std::vector<ResidualReport> reports;
    const double a = dp.alpha, w2 = dp.omega * dp.omega;
    const double ll1 = dp.L * (dp.L + 1.0);
    const double c_nu = dp.nu * (dp.nu - 1.0);

    const auto K1 = [&](const GridFunction& x) { return apply_generator(Gen::K1_tilde, dp, x); };
    const auto K2 = [&](const GridFunction& x) { return apply_generator(Gen::K2_tilde, dp, x); };
    const auto K3 = [&](const GridFunction& x) { return apply_generator(Gen::K3_tilde, dp, x); };
    const auto K3b = [&](const GridFunction& x) { return apply_generator(Gen::K3_bar, dp, x); };
    const auto R2 = [&](const GridFunction& x) { return apply_generator(Gen::K2_bar, dp, x); };

    // Q = -16a K2 K1 K2 + K3^2 - 16a^2[nu(nu-1)+L(L+1)-1] K2^2 + 16a K1
    //     - 32a^2[nu(nu-1)-L(L+1)] K2
    const auto apply_Q = [&](const GridFunction& u) {
        const GridFunction term1 = K2(K1(K2(u)));
        const GridFunction term2 = K3(K3(u));
        const GridFunction term4 = K1(u);
        GridFunction out(u.grid);
        const double c2 = 16.0 * a * a * (c_nu + ll1 - 1.0);
        const double c5 = 32.0 * a * a * (c_nu - ll1);
        for (std::size_t i = 0; i < u.size(); ++i) {
            const double t = t_of_r(dp, u.grid->pts[i]);
            out.v[i] = -16.0 * a * term1.v[i] + term2.v[i] - c2 * t * t * u.v[i]
                     + 16.0 * a * term4.v[i] - c5 * t * u.v[i];
        }
        return out;
    };

    const double q = casimir_scalar(dp);
    for (std::size_t n = 0; n < eigenstates.size(); ++n) {
        const auto& psi = eigenstates[n];
        GridFunction rhs(psi.grid);
        for (std::size_t i = 0; i < psi.size(); ++i) rhs.v[i] = q * psi.v[i];
        reports.push_back(window_report("casimir:Q psi_" + std::to_string(n) + " = q psi", apply_Q(psi), rhs));
    }

    // Transformed-basis bracket operator; vanishes identically.
    for (std::size_t k = 0; k < tests.size(); ++k) {
        const auto& u = tests[k];
        const GridFunction k3b2 = K3b(K3b(u));
        const GridFunction anti = lincomb(1.0, K1(R2(u)), 1.0, R2(K1(u)));
        GridFunction bu(u.grid);
        double scale_sq = 0.0;
        const double c2 = 16.0 * a * a * c_nu;  // 4 omega^2
        for (std::size_t i = 0; i < u.size(); ++i) {
            const double r2 = u.grid->pts[i] * u.grid->pts[i];
            const double t1 = 4.0 * a * a * k3b2.v[i];
            const double t2 = -4.0 * a * a * c2 * r2 * r2 * u.v[i];
            const double t3 = 4.0 * a * a * 8.0 * anti.v[i];
            const double t4 = 4.0 * a * a * (12.0 - 16.0 * ll1) * u.v[i];
            const double t5 = 160.0 * a * a * a * r2 * u.v[i];
            const double t6 = 112.0 * a * a * a * a * r2 * r2 * u.v[i];
            bu.v[i] = t1 + t2 + t3 + t4 + t5 + t6;
        }
        GridFunction zero(u.grid);
        const double s1 = interior_l2(k3b2, kEdgeTrim) * 4.0 * a * a;
        const double s3 = interior_l2(anti, kEdgeTrim) * 32.0 * a * a;
        scale_sq = std::max(s1, s3);
        auto rep = window_report("casimir:bracket-op annihilates (test " + std::to_string(k) + ")",
                                 bu, zero, std::max(scale_sq, 1e-300));
        reports.push_back(rep);
    }

    // (1/64)[K3b^2 - 4 w^2 K2b^2 + 8{K1,K2b}] acts as multiplication by Cbar(r)
    for (std::size_t k = 0; k < tests.size(); ++k) {
        const auto& u = tests[k];
        const GridFunction k3b2 = K3b(K3b(u));
        const GridFunction anti = lincomb(1.0, K1(R2(u)), 1.0, R2(K1(u)));
        GridFunction lhs(u.grid), rhs(u.grid);
        const double c2 = 16.0 * a * a * c_nu;
        for (std::size_t i = 0; i < u.size(); ++i) {
            const double r2 = u.grid->pts[i] * u.grid->pts[i];
            lhs.v[i] = (k3b2.v[i] - c2 * r2 * r2 * u.v[i] + 8.0 * anti.v[i]) / 64.0;
            rhs.v[i] = ((2.0 * dp.L + 3.0) * (2.0 * dp.L - 1.0) - 10.0 * a * r2
                        - 7.0 * a * a * r2 * r2) / 16.0 * u.v[i];
        }
        reports.push_back(window_report("casimir:Cbar(r) multiplication (test " + std::to_string(k) + ")",
                                        lhs, rhs));
    }
    (void)w2;
    return reports;
}

namespace {

struct LadderScalars {
    double delta;   // delta_n
    double g_n;     // 4a(nu + 2n + L)
    double g_np1;   // 4a(nu + 2n + 2 + L)
    double b_n;
};

LadderScalars ladder_scalars(const DerivedParams& dp, int n) {
    LadderScalars s;
    s.delta = delta_n(dp, n);
    s.g_n = 4.0 * dp.alpha * (s.delta - 1.0);
    s.g_np1 = 4.0 * dp.alpha * (s.delta + 1.0);
    s.b_n = -(dp.nu - dp.L - 1.0) * (dp.nu + dp.L) / ((s.delta - 1.0) * (s.delta + 1.0));
    return s;
}

}  // namespace

GridFunction apply_ladder(const DerivedParams& dp, int n, LadderOp op, const GridFunction& psi_n,
                          DeltaOrdering ordering) {
    if (n < 0) throw std::domain_error("apply_ladder: n must be >= 0");
    const LadderScalars s = ladder_scalars(dp, n);
    const GridFunction k3 = (op == LadderOp::k0) ? GridFunction(psi_n.grid)
                                                 : apply_generator(Gen::K3_tilde, dp, psi_n);

    const auto combine = [&](double ct, double c1) {
        GridFunction out(psi_n.grid);
        for (std::size_t i = 0; i < psi_n.size(); ++i) {
            const double t = t_of_r(dp, psi_n.grid->pts[i]);
            out.v[i] = k3.v[i] + (ct * t + c1) * psi_n.v[i];
        }
        return out;
    };

    switch (op) {
        case LadderOp::a_plus:
            return combine(s.g_n, -s.g_n * s.b_n);
        case LadderOp::a_minus:
            return combine(-s.g_np1, s.g_np1 * s.b_n);
        case LadderOp::k0: {
            GridFunction out = apply_generator(Gen::K1_tilde, dp, psi_n);
            for (double& x : out.v) x /= 4.0 * dp.lambda;
            return out;
        }
        case LadderOp::k_plus: {
            GridFunction au = combine(s.g_n, -s.g_n * s.b_n);
            double factor;
            if (ordering == DeltaOrdering::scalar_first) {
                factor = (s.delta + 1.0) * std::sqrt((s.delta + 2.0) / s.delta);
            } else {
                const double dnext = delta_n(dp, n + 1);
                factor = (dnext - 1.0) * std::sqrt(dnext / (dnext - 2.0));
            }
            for (double& x : au.v) x *= factor / (16.0 * dp.lambda);
            return au;
        }
        case LadderOp::k_minus: {
            GridFunction au = combine(-s.g_np1, s.g_np1 * s.b_n);
            double factor;
            if (ordering == DeltaOrdering::scalar_first) {
                const double rad = std::max(s.delta - 2.0, 0.0) / s.delta;
                factor = (s.delta - 1.0) * std::sqrt(rad);
            } else {
                const double dprev = s.delta - 2.0;
                const double rad = std::max(dprev, 0.0) / (dprev + 2.0);
                factor = (dprev + 1.0) * std::sqrt(rad);
            }
            for (double& x : au.v) x *= -factor / (16.0 * dp.lambda);
            return au;
        }
    }
    throw std::logic_error("apply_ladder: unreachable");
}

GridFunction apply_ladder_projected(const DerivedParams& dp, LadderOp op, const GridFunction& gf,
                                    const std::vector<GridFunction>& basis) {
    GridFunction out(gf.grid);
    for (std::size_t n = 0; n < basis.size(); ++n) {
        const double c = inner_product(basis[n], gf);
        const GridFunction mapped = apply_ladder(dp, static_cast<int>(n), op, basis[n]);
        for (std::size_t i = 0; i < out.size(); ++i) out.v[i] += c * mapped.v[i];
    }
    return out;
}

double ladder_element_grid(const DerivedParams& dp, int m, int n, LadderOp op,
                           const std::vector<GridFunction>& tower) {
    const GridFunction mapped = apply_ladder(dp, n, op, tower[n]);
    return inner_product(tower[m], mapped);
}

std::vector<ResidualReport> eigen_residuals(const DerivedParams& dp,
                                            const std::vector<GridFunction>& tower) {
    std::vector<ResidualReport> reports;
    for (std::size_t n = 0; n < tower.size(); ++n) {
        const GridFunction hpsi = apply_generator(Gen::K1_tilde, dp, tower[n]);
        const double e = energy(dp, static_cast<int>(n));
        GridFunction rhs(tower[n].grid);
        for (std::size_t i = 0; i < rhs.size(); ++i) rhs.v[i] = e * tower[n].v[i];
        reports.push_back(window_report("eigen:K1 psi_" + std::to_string(n) + " = E psi", hpsi, rhs));
    }
    return reports;
}

}  // namespace pdmho
