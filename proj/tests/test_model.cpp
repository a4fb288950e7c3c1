#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "pdmho/model.hpp"

using namespace pdmho;

namespace {
DerivedParams ref() { return derive_params({3.0, 4.0, RadialSector{3, 0}}); }
DerivedParams line_even() { return derive_params({1.0, std::sqrt(8.0), LineSector{Parity::even}}); }
}  // namespace

TEST_CASE("derived parameters: pythagorean reference") {
    const DerivedParams dp = ref();
    CHECK(dp.Delta == doctest::Approx(5.0).epsilon(1e-15));
    CHECK(dp.lambda == doctest::Approx(4.0).epsilon(1e-15));
    CHECK(dp.nu == doctest::Approx(4.0 / 3.0).epsilon(1e-15));
    CHECK(dp.L == 0.0);
    CHECK(!dp.line);
    CHECK(!dp.delicate);
}

TEST_CASE("derived parameters: line sector") {
    const DerivedParams dp = line_even();
    CHECK(dp.Delta == doctest::Approx(3.0).epsilon(1e-14));
    CHECK(dp.lambda == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(dp.nu == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(dp.L == -1.0);
    CHECK(dp.line);
    const DerivedParams odd = derive_params({1.0, std::sqrt(8.0), LineSector{Parity::odd}});
    CHECK(odd.L == 0.0);
}

TEST_CASE("derived parameters: constant-mass limit of lambda") {
    const DerivedParams dp = derive_params({1e-6, 1.0, RadialSector{3, 0}});
    CHECK(std::abs(dp.lambda - 0.5 - 5e-7) < 1e-9);
    for (double a : {1e-3, 1e-2, 0.1, 1.0}) {
        const DerivedParams d = derive_params({a, 1.0, RadialSector{3, 0}});
        CHECK(std::abs(d.lambda - 0.5) <= a);
    }
}

TEST_CASE("derived parameters: validation") {
    CHECK_THROWS_AS(derive_params({0.0, 1.0, RadialSector{3, 0}}), std::domain_error);
    CHECK_THROWS_AS(derive_params({-1.0, 1.0, RadialSector{3, 0}}), std::domain_error);
    CHECK_THROWS_AS(derive_params({1.0, 0.0, RadialSector{3, 0}}), std::domain_error);
    CHECK_THROWS_AS(derive_params({1.0, 1.0, RadialSector{1, 0}}), std::domain_error);
    CHECK_THROWS_AS(derive_params({1.0, 1.0, RadialSector{3, -1}}), std::domain_error);
}

TEST_CASE("half-integer L and the flagged d=2 sector") {
    const DerivedParams d4 = derive_params({1.0, 1.0, RadialSector{4, 1}});
    CHECK(d4.L == doctest::Approx(1.5));
    const DerivedParams d2 = derive_params({1.0, 1.0, RadialSector{2, 0}});
    CHECK(d2.L == doctest::Approx(-0.5));
    CHECK(d2.delicate);
}

TEST_CASE("mass profile") {
    CHECK(mass_and_profiles(derive_params({1.0, 1.0, RadialSector{3, 0}}), 0.0).f == 1.0);
    CHECK(mass_and_profiles(derive_params({1.0, 1.0, RadialSector{3, 0}}), 0.0).M == 1.0);
    const auto mp = mass_and_profiles(ref(), 1.0);
    CHECK(mp.f == doctest::Approx(4.0));
    CHECK(mp.M == doctest::Approx(1.0 / 16.0));
    CHECK(mp.fprime == doctest::Approx(6.0));
    const auto far = mass_and_profiles(ref(), 10.0);
    CHECK(far.M == doctest::Approx(1.0 / (301.0 * 301.0)).epsilon(1e-14));
    for (double r = 0.0; r < 30.0; r += 0.37) {
        const auto m = mass_and_profiles(ref(), r);
        CHECK(std::abs(m.M * m.f * m.f - 1.0) < 1e-14);
    }
}

TEST_CASE("effective potentials") {
    const auto v = effective_potentials(ref(), 1.0);
    CHECK(v.V_tilde_eff == doctest::Approx(-17.0).epsilon(1e-14));
    const auto vl = effective_potentials(line_even(), 0.0);
    CHECK(vl.V_eff == doctest::Approx(-1.0));
    const DerivedParams small = derive_params({1e-9, 4.0, RadialSector{3, 1}});
    const auto vs = effective_potentials(small, 2.0);
    CHECK(vs.V_tilde_eff == doctest::Approx(2.0 / 4.0 + 4.0 * 4.0).epsilon(1e-6));
    const DerivedParams d3l1 = derive_params({1.0, 1.0, RadialSector{3, 1}});
    CHECK_THROWS_AS(effective_potentials(d3l1, 0.0), std::domain_error);
    const auto vx = effective_potentials(line_even(), 1.7);
    CHECK(vx.V_eff == doctest::Approx(0.25 * (8.0 - 8.0) * 1.7 * 1.7 - 1.0).epsilon(1e-14));
}

TEST_CASE("t <-> r change of variable") {
    const DerivedParams dp = ref();
    CHECK(t_of_r(dp, 1.0 / std::sqrt(3.0)) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(t_of_r(dp, 1.0) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(r_of_t(dp, 0.5) == doctest::Approx(1.0).epsilon(1e-14));
    for (double t = -1.0; t <= 1.0 - 1e-6; t += 0.0421) {
        CHECK(t_of_r(dp, r_of_t(dp, t)) == doctest::Approx(t).epsilon(1e-12));
    }
    double prev = -2.0;
    for (double r = 0.0; r < 5.0; r += 0.1) {
        CHECK(t_of_r(dp, r) > prev);
        prev = t_of_r(dp, r);
    }
    CHECK_THROWS_AS(r_of_t(dp, 1.0), std::domain_error);
}

TEST_CASE("Delta identity across a parameter sweep") {
    for (double a : {0.1, 1.0, 3.0})
        for (double w : {1.0, 4.0}) {
            const DerivedParams dp = derive_params({a, w, RadialSector{3, 0}});
            CHECK(std::abs(dp.Delta * dp.Delta - (w * w + a * a)) <= 1e-15 * dp.Delta * dp.Delta);
            CHECK(dp.nu > 1.0);
        }
}

TEST_CASE("JSON parameter schema") {
    const ModelParams p = params_from_json(
        R"({"alpha": 3, "omega": 4, "sector": {"type": "radial", "d": 3, "l": 0}})");
    CHECK(p.alpha == 3.0);
    CHECK(std::get<RadialSector>(p.sector).d == 3);
    const ModelParams q = params_from_json(
        R"({"alpha": 1, "omega": 2, "sector": {"type": "line", "parity": "odd"}})");
    CHECK(std::get<LineSector>(q.sector).parity == Parity::odd);
    CHECK_THROWS(params_from_json(
        R"({"alpha": 1, "omega": 2, "bogus": 1, "sector": {"type": "line", "parity": "odd"}})"));
    CHECK_THROWS(params_from_json(
        R"({"alpha": 1, "omega": 2, "sector": {"type": "line", "parity": "sideways"}})"));
    CHECK_THROWS(params_from_json(
        R"({"alpha": 1, "omega": 2, "sector": {"type": "line", "parity": "odd", "d": 3}})"));
    const ModelParams rt = params_from_json(params_to_json(q));
    CHECK(rt.alpha == q.alpha);
    CHECK(std::get<LineSector>(rt.sector).parity == Parity::odd);
}
