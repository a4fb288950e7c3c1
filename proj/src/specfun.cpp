#include "pdmho/specfun.hpp"

#include <cmath>
#include <stdexcept>

namespace pdmho::specfun {

namespace {

void check_params(const JacobiParams& jp) {
    if (!(jp.beta > -1.0) || !(jp.gamma_ > -1.0))
        throw std::domain_error("jacobi: parameters must be > -1");
}

// Stirling asymptotic series, valid for x >= 8.
double ln_gamma_stirling(double x) {
    // B_{2k}/(2k(2k-1)) for k = 1..7
    static const double c[7] = {
        1.0 / 12.0,      -1.0 / 360.0,      1.0 / 1260.0,      -1.0 / 1680.0,
        1.0 / 1188.0,    -691.0 / 360360.0, 1.0 / 156.0,
    };
    const double inv = 1.0 / x, inv2 = inv * inv;
    double series = 0.0, p = inv;
    for (double ck : c) {
        series += ck * p;
        p *= inv2;
    }
    constexpr double half_ln_2pi = 0.91893853320467274178;
    return (x - 0.5) * std::log(x) - x + half_ln_2pi + series;
}

}  // namespace

double ln_gamma(double x) {
    if (!(x > 0.0)) throw std::domain_error("ln_gamma: x must be > 0");
    double shift = 0.0;
    while (x < 8.0) {
        shift += std::log(x);
        x += 1.0;
    }
    return ln_gamma_stirling(x) - shift;
}

std::vector<double> jacobi_seq(int n, const JacobiParams& jp, double t) {
    check_params(jp);
    if (n < 0) throw std::domain_error("jacobi_seq: n must be >= 0");
    const double b = jp.beta, g = jp.gamma_;
    std::vector<double> p(static_cast<std::size_t>(n) + 1);
    p[0] = 1.0;
    if (n == 0) return p;
    p[1] = 0.5 * ((b + g + 2.0) * t + (b - g));
    for (int k = 1; k < n; ++k) {
        const double s = 2.0 * k + b + g;
        const double a1 = 2.0 * (k + 1.0) * (k + b + g + 1.0) * s;
        const double a2 = (s + 1.0) * (s * (s + 2.0) * t + b * b - g * g);
        const double a3 = 2.0 * (k + b) * (k + g) * (s + 2.0);
        p[k + 1] = (a2 * p[k] - a3 * p[k - 1]) / a1;
    }
    return p;
}

double jacobi_p(int n, const JacobiParams& jp, double t) {
    return jacobi_seq(n, jp, t).back();
}

double jacobi_p_derivative(int n, const JacobiParams& jp, double t) {
    if (n == 0) return 0.0;
    return 0.5 * (n + jp.beta + jp.gamma_ + 1.0)
         * jacobi_p(n - 1, {jp.beta + 1.0, jp.gamma_ + 1.0}, t);
}

double jacobi_raise_rhs(int n, const JacobiParams& jp, double t) {
    const double b = jp.beta, g = jp.gamma_;
    const double s = 2.0 * n + b + g + 2.0;
    const double d = jacobi_p_derivative(n, jp, t);
    const double p = jacobi_p(n, jp, t);
    return s * (1.0 - t * t) * d - (n + b + g + 1.0) * (b - g + s * t) * p;
}

double jacobi_norm_sq(int n, const JacobiParams& jp) {
    check_params(jp);
    const double b = jp.beta, g = jp.gamma_;
    const double ln = (b + g + 1.0) * std::log(2.0) - std::log(2.0 * n + b + g + 1.0)
                    + ln_gamma(n + b + 1.0) + ln_gamma(n + g + 1.0)
                    - ln_gamma(n + b + g + 1.0) - ln_gamma(n + 1.0);
    return std::exp(ln);
}

QuadRule gauss_jacobi(int n, const JacobiParams& jp) {
    check_params(jp);
    if (n < 1) throw std::domain_error("gauss_jacobi: n must be >= 1");
    const double b = jp.beta, g = jp.gamma_;

    const auto pn = [&](double t) { return jacobi_p(n, jp, t); };
    const auto dpn = [&](double t) { return jacobi_p_derivative(n, jp, t); };

    // Bracket the n simple roots on a dense Chebyshev-distributed scan.
    const int m = 16 * n + 32;
    std::vector<double> xs(m + 1), vals(m + 1);
    constexpr double pi = 3.14159265358979323846;
    for (int j = 0; j <= m; ++j) {
        xs[j] = -std::cos(pi * j / m);
        vals[j] = pn(xs[j]);
    }
    QuadRule rule;
    rule.nodes.reserve(n);
    for (int j = 0; j < m && static_cast<int>(rule.nodes.size()) < n; ++j) {
        if (vals[j] == 0.0) {
            rule.nodes.push_back(xs[j]);
            continue;
        }
        if (vals[j] * vals[j + 1] >= 0.0) continue;
        double lo = xs[j], hi = xs[j + 1];
        double flo = vals[j];
        for (int it = 0; it < 40 && hi - lo > 1e-3; ++it) {
            const double mid = 0.5 * (lo + hi), fm = pn(mid);
            if (flo * fm <= 0.0) hi = mid;
            else { lo = mid; flo = fm; }
        }
        double x = 0.5 * (lo + hi);
        for (int it = 0; it < 100; ++it) {
            const double f = pn(x), df = dpn(x);
            const double step = f / df;
            x -= step;
            if (x < lo || x > hi) { x = 0.5 * (lo + hi); break; }
            if (std::abs(step) < 1e-14 * (1.0 + std::abs(x))) break;
        }
        rule.nodes.push_back(x);
    }
    if (static_cast<int>(rule.nodes.size()) != n)
        throw std::runtime_error("gauss_jacobi: root bracketing failed");

    // w_i = W 2^{b+g} / (P'_n(x_i) P_{n+1}(x_i))
    const double ln_w = std::log(2.0 * n + b + g + 2.0) - std::log(n + b + g + 1.0)
                      + ln_gamma(n + b + 1.0) + ln_gamma(n + g + 1.0)
                      - ln_gamma(n + b + g + 1.0) - ln_gamma(n + 2.0)
                      + (b + g) * std::log(2.0);
    const double wfac = -std::exp(ln_w);
    rule.weights.resize(n);
    for (int i = 0; i < n; ++i) {
        const double x = rule.nodes[i];
        rule.weights[i] = wfac / (dpn(x) * jacobi_p(n + 1, jp, x));
        if (!(rule.weights[i] > 0.0))
            throw std::runtime_error("gauss_jacobi: nonpositive weight");
    }
    return rule;
}

}  // namespace pdmho::specfun
