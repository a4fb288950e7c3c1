#include "pdmho/repalg.hpp"

#include <cmath>
#include <stdexcept>

#include "pdmho/spectrum.hpp"

namespace pdmho {

QJ3Params qj3_params(const DerivedParams& dp) {
    const double a = dp.alpha;
    const double c_nu = dp.nu * (dp.nu - 1.0);
    const double ll1 = dp.L * (dp.L + 1.0);
    QJ3Params q;
    q.A2 = -8.0 * a;
    q.G1 = 8.0 * a;
    q.D = 0.0;
    q.C2 = -16.0 * a * a * (c_nu + ll1 - 1.0);
    q.G2 = -16.0 * a * a * (c_nu - ll1);
    return q;
}

double a_p_squared(const DerivedParams& dp, double p) {
    const double nu = dp.nu, L = dp.L;
    const double pre = 16.0 * p * p * (2.0 * p - 1.0) * (2.0 * p + 1.0);
    const double f1 = 2.0 * p - nu + L + 1.0;
    const double f2 = 2.0 * p - nu - L;
    const double f3 = 2.0 * p + nu - L - 1.0;
    const double f4 = 2.0 * p + nu + L;
    return f1 * f2 * f3 * f4 / pre;
}

namespace {

double lambda_p_value(const DerivedParams& dp, double p) {
    return dp.alpha
         * (4.0 * p * (p + 1.0) - dp.nu * (dp.nu - 1.0) - dp.L * (dp.L + 1.0) + 1.0);
}

}  // namespace

RepCoefficients rep_coefficients(const DerivedParams& dp, int n_max) {
    if (n_max < 0) throw std::domain_error("rep_coefficients: n_max must be >= 0");
    const double nu = dp.nu, L = dp.L;
    RepCoefficients rc;
    rc.line = dp.line;
    rc.parity = dp.parity;
    rc.p0 = 0.5 * (nu + L);  // line sectors: (nu-1)/2 for even, nu/2 for odd

    const std::size_t count = static_cast<std::size_t>(n_max) + 1;
    rc.lambda_p.resize(count);
    rc.a_sq.resize(count);
    rc.b_p.resize(count);
    rc.g_p.resize(count);
    rc.a_n.resize(count);
    rc.b_n.resize(count);
    rc.g_n.resize(count);

    for (int n = 0; n <= n_max; ++n) {
        const double p = rc.p0 + n;
        rc.lambda_p[n] = lambda_p_value(dp, p);
        // factors of a_p^2 written in the level variable: exact zero at n = 0
        const double f1 = 2.0 * n + 2.0 * L + 1.0;
        const double f2 = 2.0 * n;
        const double f3 = 2.0 * nu + 2.0 * n - 1.0;
        const double f4 = 2.0 * (nu + L + n);
        const double pre = 16.0 * p * p * (2.0 * p - 1.0) * (2.0 * p + 1.0);
        rc.a_sq[n] = f1 * f2 * f3 * f4 / pre;
        if (n >= 1 && (std::abs(f1) < 1e-8 || std::abs(f3) < 1e-8 || std::abs(f4) < 1e-8))
            rc.near_degenerate = true;
        rc.b_p[n] = -(nu - L - 1.0) * (nu + L) / (4.0 * p * (p + 1.0));
        rc.g_p[n] = 8.0 * dp.alpha * p;

        const double d = nu + 2.0 * n + L;
        rc.a_n[n] = (n == 0) ? 0.0
                             : std::sqrt(n * (2.0 * n + 2.0 * L + 1.0) * (nu + n + L)
                                         * (2.0 * nu + 2.0 * n - 1.0)
                                         / ((d - 1.0) * (d + 1.0)))
                                   / d;
        rc.b_n[n] = -(nu - L - 1.0) * (nu + L) / (d * (d + 2.0));
        rc.g_n[n] = 4.0 * dp.alpha * d;
    }
    return rc;
}

std::vector<RepCoefficients> line_irreps(const DerivedParams& dp, int n_max) {
    if (!dp.line) throw std::domain_error("line_irreps: sector is not a line sector");
    std::vector<RepCoefficients> out;
    for (Parity par : {Parity::even, Parity::odd}) {
        DerivedParams d = dp;
        d.parity = par;
        d.L = (par == Parity::even) ? -1.0 : 0.0;
        out.push_back(rep_coefficients(d, n_max));
    }
    return out;
}

std::vector<double> admissible_p0(const DerivedParams& dp) {
    const double nu = dp.nu, L = dp.L;
    // Roots of the four linear factors of a_p^2. a_p^2 depends on L only
    // through L(L+1), so the root list is invariant under L -> -L-1; the
    // first two entries are the (L, -L-1) pair of lowest weights.
    const double candidates[4] = {0.5 * (nu + L), 0.5 * (nu - L - 1.0), -0.5 * (nu + L),
                                  -0.5 * (nu - L - 1.0)};
    std::vector<double> out;
    for (double p0 : candidates) {
        bool ok = std::isfinite(p0);
        for (int n = 1; ok && n <= 50; ++n) {
            const double asq = a_p_squared(dp, p0 + n);
            if (!(asq > 0.0) || !std::isfinite(asq)) ok = false;
        }
        if (!ok) continue;
        if (!dp.line) {
            // Radial realization: the wavefunctions behave like r^{L+1} at the
            // origin, which selects p0 = (nu+L)/2 with the sector's own L. The
            // mirror root (nu-L-1)/2 belongs to the L -> -L-1 solution that is
            // not in the radial Hilbert space.
            if (std::abs(p0 - 0.5 * (nu + L)) > 1e-12 * (1.0 + std::abs(p0))) continue;
        } else {
            // Full line: both parity towers are realized.
            if (!(p0 > 0.0)) continue;
        }
        bool dup = false;
        for (double q : out)
            if (std::abs(q - p0) < 1e-12) dup = true;
        if (!dup) out.push_back(p0);
    }
    return out;
}

TildeElements tilde_elements(const DerivedParams& dp, int n_max) {
    const RepCoefficients rc = rep_coefficients(dp, n_max);
    return {rc.a_n, rc.b_n, rc.g_n};
}

DeformedElements deformed_elements(const DerivedParams& dp, int n_max) {
    DeformedElements de;
    const double nu = dp.nu, L = dp.L;
    const double al = dp.alpha / dp.lambda;
    de.k_plus.resize(static_cast<std::size_t>(n_max) + 1);
    de.k_minus.resize(de.k_plus.size());
    de.k0.resize(de.k_plus.size());
    for (int n = 0; n <= n_max; ++n) {
        de.k_plus[n] = al
                     * std::sqrt((n + 1.0) * (n + L + 1.5) * (n + nu + L + 1.0) * (n + nu + 0.5));
        de.k_minus[n] =
            (n == 0) ? 0.0
                     : al * std::sqrt(n * (n + L + 0.5) * (n + nu + L) * (n + nu - 0.5));
        de.k0[n] = energy(dp, n) / (4.0 * dp.lambda);
    }
    return de;
}

LineDeformedElements line_deformed_elements(const DerivedParams& dp, int n_full_max) {
    if (!dp.line) throw std::domain_error("line_deformed_elements: not a line sector");
    LineDeformedElements e;
    const double nu = dp.nu;
    const double c = dp.alpha / (4.0 * dp.lambda);
    e.k_plus.resize(static_cast<std::size_t>(n_full_max) + 1);
    e.k_minus.resize(e.k_plus.size());
    e.k0.resize(e.k_plus.size());
    for (int n = 0; n <= n_full_max; ++n) {
        e.k_plus[n] = c * std::sqrt((n + 1.0) * (n + 2.0) * (n + 2.0 * nu) * (n + 2.0 * nu + 1.0));
        e.k_minus[n] = (n < 2) ? 0.0
                               : c * std::sqrt(n * (n - 1.0) * (n + 2.0 * nu - 2.0)
                                               * (n + 2.0 * nu - 1.0));
        e.k0[n] = dp.alpha * (n * n + (2.0 * n + 1.0) * nu) / (4.0 * dp.lambda);
    }
    return e;
}

double su11_k_plus(const DerivedParams& dp, int n) {
    return std::sqrt((n + 1.0) * (n + dp.L + 1.5));
}

double su11_k_minus(const DerivedParams& dp, int n) {
    return (n == 0) ? 0.0 : std::sqrt(n * (n + dp.L + 0.5));
}

double deformed_casimir_scalar(const DerivedParams& dp) {
    const double r = dp.alpha / dp.lambda;
    return 0.25 * (1.0 - r) * (dp.L + 1.5) * (dp.L - 0.5)
         - 3.0 * r * r / 16.0 * dp.L * (dp.L + 1.0);
}

namespace {

// minimal dense matrix helper for the truncated-algebra checks
struct Mat {
    int n;
    std::vector<double> a;
    explicit Mat(int n_) : n(n_), a(static_cast<std::size_t>(n_) * n_, 0.0) {}
    double& at(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
    double at(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }
};

Mat mul(const Mat& x, const Mat& y) {
    Mat z(x.n);
    for (int i = 0; i < x.n; ++i)
        for (int k = 0; k < x.n; ++k) {
            const double v = x.at(i, k);
            if (v == 0.0) continue;
            for (int j = 0; j < x.n; ++j) z.at(i, j) += v * y.at(k, j);
        }
    return z;
}

}  // namespace

std::vector<ResidualReport> deformed_commutator_matrices(const DerivedParams& dp, int n_max) {
    if (n_max < 2) throw std::domain_error("deformed_commutator_matrices: n_max must be >= 2");
    const int dim = n_max + 1;
    const int safe = n_max - 2;  // raising cannot leave the block inside rows/cols <= safe
    const DeformedElements de = deformed_elements(dp, n_max);

    Mat kp(dim), km(dim), k0(dim), dl(dim);
    for (int m = 0; m + 1 < dim; ++m) kp.at(m + 1, m) = de.k_plus[m];
    for (int m = 1; m < dim; ++m) km.at(m - 1, m) = de.k_minus[m];
    for (int m = 0; m < dim; ++m) {
        k0.at(m, m) = de.k0[m];
        dl.at(m, m) = delta_n(dp, m);
    }
    const double al = dp.alpha / dp.lambda;

    std::vector<ResidualReport> reports;
    const GridMeta meta{0.0, static_cast<std::size_t>(dim), 0.0};

    const auto block_residual = [&](const char* name, const Mat& lhs, const Mat& rhs) {
        double worst = 0.0, scale = 0.0;
        for (int i = 0; i <= safe; ++i)
            for (int j = 0; j <= safe; ++j) {
                worst = std::max(worst, std::abs(lhs.at(i, j) - rhs.at(i, j)));
                scale = std::max({scale, std::abs(lhs.at(i, j)), std::abs(rhs.at(i, j))});
            }
        reports.push_back(make_report(name, worst, scale > 0.0 ? scale : 1.0, meta));
    };

    // [K0, K+] = (alpha/lambda) K+ (delta + 1)
    {
        Mat lhs = mul(k0, kp), tmp = mul(kp, k0);
        for (std::size_t i = 0; i < lhs.a.size(); ++i) lhs.a[i] -= tmp.a[i];
        Mat dshift(dim);
        for (int m = 0; m < dim; ++m) dshift.at(m, m) = dl.at(m, m) + 1.0;
        Mat rhs = mul(kp, dshift);
        for (double& x : rhs.a) x *= al;
        block_residual("deformed:[K0,K+]=(a/l)K+(d+1)", lhs, rhs);
    }
    // [K+, K-] = -(alpha delta/lambda)(2 K0 + alpha/(4 lambda))
    {
        Mat lhs = mul(kp, km), tmp = mul(km, kp);
        for (std::size_t i = 0; i < lhs.a.size(); ++i) lhs.a[i] -= tmp.a[i];
        Mat rhs(dim);
        for (int m = 0; m < dim; ++m)
            rhs.at(m, m) = -al * dl.at(m, m) * (2.0 * k0.at(m, m) + dp.alpha / (4.0 * dp.lambda));
        block_residual("deformed:[K+,K-]=-(ad/l)(2K0+a/4l)", lhs, rhs);
    }
    // C = -K+K- + K0^2 - (a/l)(delta - 5/4)K0 - (a^2/8l^2) delta  == scalar
    {
        Mat c = mul(kp, km);
        for (double& x : c.a) x = -x;
        const Mat k0sq = mul(k0, k0);
        for (std::size_t i = 0; i < c.a.size(); ++i) c.a[i] += k0sq.a[i];
        const double a2 = dp.alpha * dp.alpha / (8.0 * dp.lambda * dp.lambda);
        for (int m = 0; m < dim; ++m)
            c.at(m, m) += -al * (dl.at(m, m) - 1.25) * k0.at(m, m) - a2 * dl.at(m, m);
        Mat rhs(dim);
        const double cs = deformed_casimir_scalar(dp);
        for (int m = 0; m < dim; ++m) rhs.at(m, m) = cs;
        block_residual("deformed:Casimir diagonal", c, rhs);
    }
    return reports;
}

}  // namespace pdmho
