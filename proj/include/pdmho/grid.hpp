#pragma once

#include <cstddef>
#include <memory>
#include <vector>

// Uniform grids, grid functions, 6th-order finite differences, Simpson
// quadrature. Radial grids exclude the origin; line grids are symmetric.

namespace pdmho {

struct Grid {
    std::vector<double> pts;  // strictly increasing, uniform spacing
    double h = 0;
    bool line = false;  // full-line symmetric grid

    std::size_t size() const { return pts.size(); }
    double r_max() const { return pts.back(); }
};

using GridPtr = std::shared_ptr<const Grid>;

// r_i = (i+1) h, i = 0..n-1 (origin excluded).
GridPtr make_radial_grid(double r_max, std::size_t n);
// Symmetric grid with n points per half line plus x = 0 (2n+1 points).
GridPtr make_line_grid(double x_max, std::size_t n_half);

struct GridFunction {
    GridPtr grid;
    std::vector<double> v;

    GridFunction() = default;
    explicit GridFunction(GridPtr g) : grid(std::move(g)), v(grid->size(), 0.0) {}
    std::size_t size() const { return v.size(); }
};

template <class F>
GridFunction sample(const GridPtr& g, F&& f) {
    GridFunction out(g);
    for (std::size_t i = 0; i < g->size(); ++i) out.v[i] = f(g->pts[i]);
    return out;
}

// 6th-order central differences in the interior, shifted 7-point stencils at
// the edges. order is 1 or 2; needs at least 7 points.
GridFunction differentiate(const GridFunction& gf, int order);

// Composite Simpson on the uniform grid (3/8 rule absorbs an odd interval count).
double integrate(const GridFunction& gf);
double inner_product(const GridFunction& a, const GridFunction& b);
double l2_norm(const GridFunction& gf);
// L2 norm over the interior window, excluding `trim` points at each edge.
double interior_l2(const GridFunction& gf, std::size_t trim);
// Scales to unit Simpson L2 norm; returns the original norm.
double normalize(GridFunction& gf);

// Smooth compactly supported test function: exp(-1/(1-u^2)) on |u|<1,
// u = (r-center)/width, zero outside.
GridFunction bump(const GridPtr& g, double center, double width);

// Finite-difference weights for the m-th derivative at x0 from nodes xs
// (Fornberg's recursion).
std::vector<double> fd_weights(double x0, const std::vector<double>& xs, int m);

}  // namespace pdmho
