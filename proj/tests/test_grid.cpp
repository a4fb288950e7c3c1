#include <doctest.h>

#include <cmath>

#include "pdmho/grid.hpp"

using namespace pdmho;

TEST_CASE("grid construction") {
    const GridPtr r = make_radial_grid(4.0, 400);
    CHECK(r->pts.front() == doctest::Approx(0.01));
    CHECK(r->pts.back() == doctest::Approx(4.0));
    CHECK(!r->line);
    const GridPtr l = make_line_grid(3.0, 300);
    CHECK(l->pts.front() == doctest::Approx(-3.0));
    CHECK(l->pts[300] == doctest::Approx(0.0));
    CHECK(l->pts.back() == doctest::Approx(3.0));
    CHECK(l->line);
    CHECK_THROWS(make_radial_grid(1.0, 3));
}

TEST_CASE("fornberg weights reproduce the classic central stencils") {
    std::vector<double> xs{0, 1, 2, 3, 4, 5, 6};
    const auto w1 = fd_weights(3.0, xs, 1);
    const double expect1[7] = {-1.0 / 60, 3.0 / 20, -3.0 / 4, 0.0, 3.0 / 4, -3.0 / 20, 1.0 / 60};
    for (int i = 0; i < 7; ++i) CHECK(w1[i] == doctest::Approx(expect1[i]).epsilon(1e-13));
    const auto w2 = fd_weights(3.0, xs, 2);
    const double expect2[7] = {1.0 / 90, -3.0 / 20, 3.0 / 2, -49.0 / 18, 3.0 / 2, -3.0 / 20,
                               1.0 / 90};
    for (int i = 0; i < 7; ++i) CHECK(w2[i] == doctest::Approx(expect2[i]).epsilon(1e-13));
}

TEST_CASE("differentiate: polynomial exactness and analytic oracle") {
    const GridPtr g = make_radial_grid(2.0, 801);
    const GridFunction r2 = sample(g, [](double r) { return r * r; });
    const GridFunction d1 = differentiate(r2, 1);
    for (std::size_t i = 0; i < g->size(); ++i)
        CHECK(std::abs(d1.v[i] - 2.0 * g->pts[i]) < 1e-10);

    const GridPtr gc = make_radial_grid(2.0, 201);
    const GridFunction sn = sample(gc, [](double r) { return std::sin(r); });
    const GridFunction d2 = differentiate(sn, 2);
    const double h = gc->h;
    for (std::size_t i = 8; i + 8 < gc->size(); ++i)
        CHECK(std::abs(d2.v[i] + std::sin(gc->pts[i])) < 50.0 * std::pow(h, 6));

    const GridFunction c = sample(g, [](double) { return 3.7; });
    const GridFunction dc = differentiate(c, 1);
    for (double v : dc.v) CHECK(std::abs(v) < 1e-11);
    CHECK_THROWS(differentiate(r2, 3));
}

TEST_CASE("simpson integration") {
    const GridPtr g = make_radial_grid(1.0, 1001);  // even interval count on [h, 1]
    const GridFunction x3 = sample(g, [](double r) { return r * r * r; });
    // integral over [h, 1] of r^3
    const double h = g->h;
    const double expect = 0.25 * (1.0 - std::pow(h, 4));
    CHECK(integrate(x3) == doctest::Approx(expect).epsilon(1e-12));

    const GridPtr g2 = make_radial_grid(1.0, 1000);  // odd interval count path
    const GridFunction x3b = sample(g2, [](double r) { return r * r * r; });
    CHECK(integrate(x3b) == doctest::Approx(0.25 * (1.0 - std::pow(g2->h, 4))).epsilon(1e-10));

    const GridPtr gl = make_line_grid(3.14159265358979323846 / 2.0, 500);
    const GridFunction cs = sample(gl, [](double x) { return std::cos(x); });
    CHECK(integrate(cs) == doctest::Approx(2.0).epsilon(1e-10));
}

TEST_CASE("norms and normalization") {
    const GridPtr g = make_radial_grid(6.0, 2000);
    GridFunction f = sample(g, [](double r) { return r * std::exp(-r); });
    const double n0 = l2_norm(f);
    CHECK(n0 > 0.0);
    const double returned = normalize(f);
    CHECK(returned == doctest::Approx(n0));
    CHECK(l2_norm(f) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(interior_l2(f, 5) <= 1.0 + 1e-12);
}

TEST_CASE("bump functions are compactly supported and smooth") {
    const GridPtr g = make_radial_grid(4.0, 2001);
    const GridFunction b = bump(g, 2.0, 0.7);
    for (std::size_t i = 0; i < g->size(); ++i) {
        const double r = g->pts[i];
        if (std::abs(r - 2.0) >= 0.7) CHECK(b.v[i] == 0.0);
        else CHECK(b.v[i] > 0.0);
    }
    // derivatives stay bounded through the support edge
    const GridFunction d2 = differentiate(differentiate(b, 1), 1);
    for (double v : d2.v) CHECK(std::isfinite(v));
}
