#include "pdmho/spectrum.hpp"

#include <cmath>
#include <stdexcept>

namespace pdmho {

using specfun::ln_gamma;

double energy(const DerivedParams& dp, int n) {
    if (n < 0) throw std::domain_error("energy: n must be >= 0");
    if (dp.line) {
        const double m = 2.0 * n + (dp.parity == Parity::odd ? 1.0 : 0.0);
        return dp.alpha * (m * m + (2.0 * m + 1.0) * dp.nu);
    }
    const double L = dp.L;
    return dp.alpha
         * (4.0 * n * n + 4.0 * n * (L + 1.0) + L + 1.0 + (4.0 * n + 2.0 * L + 3.0) * dp.nu);
}

double delta_n(const DerivedParams& dp, int n) { return dp.nu + dp.L + 1.0 + 2.0 * n; }

DeltaResult delta_and_n(const DerivedParams& dp, double E) {
    const double rad = E / dp.alpha + dp.nu * (dp.nu - 1.0) + dp.L * (dp.L + 1.0);
    if (rad < 0.0) throw std::domain_error("delta_and_n: negative radicand");
    const double delta = std::sqrt(rad);
    const double n_real = 0.5 * (delta - (dp.nu + dp.L + 1.0));
    const int n = static_cast<int>(std::lround(std::max(0.0, n_real)));
    const bool exact = std::abs(energy(dp, n) - E) <= 1e-9 * std::max(1.0, std::abs(E));
    return {delta, n, exact};
}

specfun::JacobiParams jacobi_params(const DerivedParams& dp) {
    return {dp.nu - 0.5, dp.L + 0.5};
}

NormalizationTable normalization_table(const DerivedParams& dp, int n_max) {
    if (n_max < 0) throw std::domain_error("normalization_table: n_max must be >= 0");
    const double nu = dp.nu, L = dp.L;
    NormalizationTable t;
    t.ln_N0 = 0.5 * (std::log(2.0) + (L + 1.5) * std::log(dp.alpha) + ln_gamma(nu + L + 2.0)
                     - ln_gamma(L + 1.5) - ln_gamma(nu + 0.5));
    // full-line states carry an extra 1/sqrt(2) relative to the half-line form
    t.N0 = std::exp(t.ln_N0 - (dp.line ? 0.5 * std::log(2.0) : 0.0));
    t.ratio.resize(static_cast<std::size_t>(n_max) + 1);
    t.ln_ratio.resize(t.ratio.size());
    for (int n = 0; n <= n_max; ++n) {
        const double ln = 0.5 * (ln_gamma(L + 1.5) + ln_gamma(nu + 0.5) + ln_gamma(n + 1.0)
                                 + std::log(nu + 2.0 * n + L + 1.0) + ln_gamma(nu + n + L + 1.0)
                                 - ln_gamma(nu + L + 2.0) - ln_gamma(nu + n + 0.5)
                                 - ln_gamma(n + L + 1.5));
        t.ln_ratio[n] = ln;
        t.ratio[n] = std::exp(ln);
    }
    return t;
}

namespace {

// log of r^{L+1} f^{-(nu+L+2)/2}, safe at r = 0 when L + 1 = 0
double ln_prefactor(const DerivedParams& dp, double r, double f) {
    const double e = dp.L + 1.0;
    const double s = 0.5 * (dp.nu + dp.L + 2.0);
    return (e == 0.0 ? 0.0 : e * std::log(r)) - s * std::log(f);
}

}  // namespace

double psi(const DerivedParams& dp, int n, double x) {
    if (n < 0) throw std::domain_error("psi: n must be >= 0");
    const NormalizationTable tab = normalization_table(dp, n);
    const double r = dp.line ? std::abs(x) : x;
    if (!dp.line && r < 0.0) throw std::domain_error("psi: radial coordinate must be >= 0");
    if (r == 0.0 && dp.L + 1.0 > 0.0) return 0.0;
    const double f = 1.0 + dp.alpha * r * r;
    const double t = t_of_r(dp, r);
    double val = std::exp(tab.ln_N0 + tab.ln_ratio[n] + ln_prefactor(dp, r, f)
                          - (dp.line ? 0.5 * std::log(2.0) : 0.0))
               * specfun::jacobi_p(n, jacobi_params(dp), t);
    if (dp.line && dp.parity == Parity::odd && x < 0.0) val = -val;
    return val;
}

std::vector<GridFunction> psi_tower_on_grid(const DerivedParams& dp, int n_max, const GridPtr& g) {
    const NormalizationTable tab = normalization_table(dp, n_max);
    const auto jp = jacobi_params(dp);
    std::vector<GridFunction> out(static_cast<std::size_t>(n_max) + 1, GridFunction(g));
    const double line_shift = dp.line ? 0.5 * std::log(2.0) : 0.0;
    for (std::size_t i = 0; i < g->size(); ++i) {
        const double x = g->pts[i];
        const double r = dp.line ? std::abs(x) : x;
        const double f = 1.0 + dp.alpha * r * r;
        const double t = t_of_r(dp, r);
        double base = 0.0;
        if (!(r == 0.0 && dp.L + 1.0 > 0.0))
            base = std::exp(tab.ln_N0 + ln_prefactor(dp, r, f) - line_shift);
        const double sign = (dp.line && dp.parity == Parity::odd && x < 0.0) ? -1.0 : 1.0;
        const auto seq = specfun::jacobi_seq(n_max, jp, t);
        for (int n = 0; n <= n_max; ++n)
            out[n].v[i] = sign * base * std::exp(tab.ln_ratio[n]) * seq[n];
    }
    return out;
}

GridFunction psi_on_grid(const DerivedParams& dp, int n, const GridPtr& g) {
    return std::move(psi_tower_on_grid(dp, n, g).back());
}

BasisQuadrature::BasisQuadrature(const DerivedParams& dp, int n_max)
    : table_(normalization_table(dp, n_max)) {
    const auto jp = jacobi_params(dp);
    rule_ = specfun::gauss_jacobi(n_max + 4, jp);
    p_.resize(rule_.nodes.size());
    for (std::size_t i = 0; i < rule_.nodes.size(); ++i)
        p_[i] = specfun::jacobi_seq(n_max, jp, rule_.nodes[i]);
    // dr = weight(t) dt maps <psi_m, psi_n> onto the Jacobi weight exactly:
    // C = N0^2 2^{-(nu+L+2)} alpha^{-(L+3/2)}
    ln_c0_ = 2.0 * table_.ln_N0 - (dp.nu + dp.L + 2.0) * std::log(2.0)
           - (dp.L + 1.5) * std::log(dp.alpha);
}

double BasisQuadrature::prefactor(int m, int n) const {
    return std::exp(ln_c0_ + table_.ln_ratio[m] + table_.ln_ratio[n]);
}

double BasisQuadrature::overlap(int m, int n) const {
    return weighted_element(m, n, [](double) { return 1.0; });
}

double BasisQuadrature::t_element(int m, int n) const {
    return weighted_element(m, n, [](double t) { return t; });
}

}  // namespace pdmho
