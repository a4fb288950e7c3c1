#include "pdmho/ladder.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "pdmho/spectrum.hpp"

namespace pdmho {

namespace {

// d(ln psi)/dr = (L+1)/r - (nu+L+2) a r / f
double log_slope(const DerivedParams& dp, double r) {
    const double f = 1.0 + dp.alpha * r * r;
    const double sing = (dp.L + 1.0 == 0.0) ? 0.0 : (dp.L + 1.0) / r;
    return sing - (dp.nu + dp.L + 2.0) * dp.alpha * r / f;
}

// RK4 from r0 to r1, substepped against the 1/r^5 curvature of ln psi.
double rk4_segment(const DerivedParams& dp, double y, double r0, double r1, double h_ref) {
    const double r_near = std::min(std::abs(r0), std::abs(r1));
    int m = 1;
    if (dp.L + 1.0 != 0.0 && r_near < 32.0 * h_ref)
        m = std::min(64, std::max(1, static_cast<int>(std::ceil(32.0 * h_ref / r_near))));
    const double h = (r1 - r0) / m;
    double r = r0;
    for (int i = 0; i < m; ++i) {
        const double k1 = log_slope(dp, r);
        const double k2 = log_slope(dp, r + 0.5 * h);
        const double k3 = log_slope(dp, r + 0.5 * h);
        const double k4 = log_slope(dp, r + h);
        y += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        r += h;
    }
    return y;
}

}  // namespace

GridFunction ground_state_ode(const DerivedParams& dp, const GridPtr& g) {
    const auto& pts = g->pts;
    if (!pts.empty() && pts.front() <= 0.0 && !g->line)
        throw std::invalid_argument("ground_state_ode: grid must exclude r = 0");
    const std::size_t n = pts.size();
    std::vector<double> ln_psi(n, 0.0);
    const std::size_t mid = n / 2;

    for (std::size_t i = mid; i + 1 < n; ++i)
        ln_psi[i + 1] = rk4_segment(dp, ln_psi[i], pts[i], pts[i + 1], g->h);
    for (std::size_t i = mid; i > 0; --i)
        ln_psi[i - 1] = rk4_segment(dp, ln_psi[i], pts[i], pts[i - 1], g->h);

    const double peak = *std::max_element(ln_psi.begin(), ln_psi.end());
    GridFunction out(g);
    for (std::size_t i = 0; i < n; ++i) {
        const double ln = ln_psi[i] - peak;
        out.v[i] = (ln < -745.0) ? 0.0 : std::exp(ln);
        if (!std::isfinite(out.v[i]))
            throw std::runtime_error("ground_state_ode: integration blew up");
    }
    normalize(out);
    return out;
}

GridFunction raise_state(const DerivedParams& dp, int n, const GridFunction& psi_n) {
    const double nu = dp.nu, L = dp.L;
    const double scale = (2.0 * n + nu + L + 2.0) * std::sqrt(2.0 * n + nu + L + 3.0)
                       / (16.0 * dp.alpha
                          * std::sqrt((n + 1.0) * (n + L + 1.5) * (n + nu + L + 1.0)
                                      * (n + nu + 0.5) * (2.0 * n + nu + L + 1.0)));
    GridFunction out = apply_ladder(dp, n, LadderOp::a_plus, psi_n);
    for (double& x : out.v) x *= scale;
    return out;
}

double norm_recursion_ratio(const DerivedParams& dp, int n) {
    if (n < 0) throw std::domain_error("norm_recursion_ratio: n must be >= 0");
    const double nu = dp.nu, L = dp.L;
    return std::sqrt((n + 1.0) * (n + nu + L + 1.0) * (2.0 * n + nu + L + 3.0)
                     / ((n + L + 1.5) * (n + nu + 0.5) * (2.0 * n + nu + L + 1.0)));
}

TowerResult build_tower(const DerivedParams& dp, const GridPtr& g, int n_max) {
    TowerResult tr;
    tr.states.reserve(static_cast<std::size_t>(n_max) + 1);
    const std::vector<GridFunction> closed = psi_tower_on_grid(dp, n_max, g);

    GridFunction state = ground_state_ode(dp, g);
    for (int n = 0; n <= n_max; ++n) {
        double norm_err = 0.0;
        if (n > 0) {
            state = raise_state(dp, n - 1, state);
            norm_err = std::abs(l2_norm(state) - 1.0);
            normalize(state);
        }
        // sign-align to the closed-form convention before measuring distance
        GridFunction ref = closed[n];
        const double ref_norm = normalize(ref);
        (void)ref_norm;
        if (inner_product(state, ref) < 0.0)
            for (double& x : state.v) x = -x;
        GridFunction diff(g);
        for (std::size_t i = 0; i < diff.size(); ++i) diff.v[i] = state.v[i] - ref.v[i];
        tr.l2_deviation.push_back(l2_norm(diff));
        const GridFunction hpsi = apply_generator(Gen::K1_tilde, dp, state);
        tr.rayleigh.push_back(inner_product(state, hpsi));
        tr.norm_error.push_back(norm_err);
        tr.states.push_back(state);
    }
    return tr;
}

}  // namespace pdmho
