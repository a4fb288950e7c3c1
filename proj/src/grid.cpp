#include "pdmho/grid.hpp"

#include <cmath>
#include <stdexcept>

namespace pdmho {

GridPtr make_radial_grid(double r_max, std::size_t n) {
    if (n < 7) throw std::invalid_argument("make_radial_grid: need at least 7 points");
    auto g = std::make_shared<Grid>();
    g->h = r_max / static_cast<double>(n);
    g->line = false;
    g->pts.resize(n);
    for (std::size_t i = 0; i < n; ++i) g->pts[i] = (i + 1.0) * g->h;
    return g;
}

GridPtr make_line_grid(double x_max, std::size_t n_half) {
    if (n_half < 7) throw std::invalid_argument("make_line_grid: need at least 7 points");
    auto g = std::make_shared<Grid>();
    g->h = x_max / static_cast<double>(n_half);
    g->line = true;
    g->pts.resize(2 * n_half + 1);
    for (std::size_t i = 0; i < g->pts.size(); ++i)
        g->pts[i] = (static_cast<double>(i) - static_cast<double>(n_half)) * g->h;
    return g;
}

std::vector<double> fd_weights(double x0, const std::vector<double>& xs, int m) {
    // Fornberg 1988 recursion; exact for polynomials up to degree xs.size()-1.
    const int n = static_cast<int>(xs.size()) - 1;
    std::vector<std::vector<std::vector<double>>> d(
        static_cast<std::size_t>(m) + 1,
        std::vector<std::vector<double>>(xs.size(), std::vector<double>(xs.size(), 0.0)));
    d[0][0][0] = 1.0;
    double c1 = 1.0;
    for (int k = 1; k <= n; ++k) {
        double c2 = 1.0;
        for (int j = 0; j < k; ++j) {
            const double c3 = xs[k] - xs[j];
            c2 *= c3;
            for (int order = 0; order <= std::min(k, m); ++order) {
                const double prev = (order > 0) ? d[order - 1][k - 1][j] : 0.0;
                d[order][k][j] = ((xs[k] - x0) * d[order][k - 1][j] - order * prev) / c3;
            }
        }
        for (int order = 0; order <= std::min(k, m); ++order) {
            const double prev = (order > 0) ? d[order - 1][k - 1][k - 1] : 0.0;
            d[order][k][k] = c1 / c2 * (order * prev - (xs[k - 1] - x0) * d[order][k - 1][k - 1]);
        }
        c1 = c2;
    }
    std::vector<double> w(xs.size());
    for (std::size_t j = 0; j < xs.size(); ++j) w[j] = d[m][n][j];
    return w;
}

GridFunction differentiate(const GridFunction& gf, int order) {
    if (order != 1 && order != 2) throw std::invalid_argument("differentiate: order must be 1 or 2");
    const std::size_t n = gf.size();
    if (n < 7) throw std::invalid_argument("differentiate: grid too short");
    const double h = gf.grid->h;

    // 7-point stencil weights on unit spacing for each left offset 0..6
    static thread_local std::vector<std::vector<double>> cache[3];
    auto& stencils = cache[order];
    if (stencils.empty()) {
        std::vector<double> xs(7);
        for (int j = 0; j < 7; ++j) xs[j] = j;
        stencils.resize(7);
        for (int at = 0; at < 7; ++at) stencils[at] = fd_weights(at, xs, order);
    }

    GridFunction out(gf.grid);
    const double scale = (order == 1) ? 1.0 / h : 1.0 / (h * h);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t start;
        int at;
        if (i < 3) {
            start = 0;
            at = static_cast<int>(i);
        } else if (i >= n - 3) {
            start = n - 7;
            at = static_cast<int>(i - (n - 7));
        } else {
            start = i - 3;
            at = 3;
        }
        const auto& w = stencils[at];
        double acc = 0.0;
        for (int j = 0; j < 7; ++j) acc += w[j] * gf.v[start + j];
        out.v[i] = acc * scale;
    }
    return out;
}

namespace {

double simpson(const std::vector<double>& f, double h) {
    const std::size_t n = f.size();
    if (n < 2) return 0.0;
    if (n == 2) return 0.5 * h * (f[0] + f[1]);
    std::size_t start = 0;
    double total = 0.0;
    if ((n - 1) % 2 != 0) {
        // 3/8 rule on the first three intervals
        if (n < 4) return 0.5 * h * (f[0] + f[1]) + 0.5 * h * (f[1] + f[2]);
        total += 3.0 * h / 8.0 * (f[0] + 3.0 * f[1] + 3.0 * f[2] + f[3]);
        start = 3;
    }
    double s = f[start] + f[n - 1];
    for (std::size_t i = start + 1; i < n - 1; i += 2) s += 4.0 * f[i];
    for (std::size_t i = start + 2; i < n - 1; i += 2) s += 2.0 * f[i];
    total += h / 3.0 * s;
    return total;
}

}  // namespace

double integrate(const GridFunction& gf) { return simpson(gf.v, gf.grid->h); }

double inner_product(const GridFunction& a, const GridFunction& b) {
    if (a.grid != b.grid && a.size() != b.size())
        throw std::invalid_argument("inner_product: mismatched grids");
    std::vector<double> prod(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) prod[i] = a.v[i] * b.v[i];
    return simpson(prod, a.grid->h);
}

double l2_norm(const GridFunction& gf) { return std::sqrt(inner_product(gf, gf)); }

double interior_l2(const GridFunction& gf, std::size_t trim) {
    if (gf.size() <= 2 * trim) return 0.0;
    double s = 0.0;
    for (std::size_t i = trim; i < gf.size() - trim; ++i) s += gf.v[i] * gf.v[i];
    return std::sqrt(s * gf.grid->h);
}

double normalize(GridFunction& gf) {
    const double norm = l2_norm(gf);
    if (norm <= 0.0) throw std::runtime_error("normalize: zero function");
    for (double& x : gf.v) x /= norm;
    return norm;
}

GridFunction bump(const GridPtr& g, double center, double width) {
    return sample(g, [&](double r) {
        const double u = (r - center) / width;
        if (std::abs(u) >= 1.0) return 0.0;
        return std::exp(-1.0 / (1.0 - u * u));
    });
}

}  // namespace pdmho
