#include <doctest.h>

#include <cmath>

#include "pdmho/repalg.hpp"
#include "pdmho/spectrum.hpp"
#include "pdmho/verify.hpp"

using namespace pdmho;

namespace {
DerivedParams ref() { return derive_params({3.0, 4.0, RadialSector{3, 0}}); }
DerivedParams line(Parity p) { return derive_params({1.0, std::sqrt(8.0), LineSector{p}}); }
}  // namespace

TEST_CASE("defining parameters of the quadratic algebra") {
    const QJ3Params q = qj3_params(ref());
    CHECK(q.A2 == doctest::Approx(-24.0).epsilon(1e-14));
    CHECK(q.G1 == doctest::Approx(24.0).epsilon(1e-14));
    CHECK(q.D == 0.0);
    CHECK(q.C2 == doctest::Approx(80.0).epsilon(1e-12));
    CHECK(q.G2 == doctest::Approx(-64.0).epsilon(1e-12));
    CHECK(q.nondegeneracy() == doctest::Approx(2304.0).epsilon(1e-12));
}

TEST_CASE("defining parameters: alpha -> 0 scaling") {
    const double w = 1.0;
    const QJ3Params q = qj3_params(derive_params({1e-6, w, RadialSector{3, 0}}));
    CHECK(std::abs(q.A2) <= 8.1e-6);
    CHECK(std::abs(q.G1) <= 8.1e-6);
    // 16 a^2 nu(nu-1) -> 4 w^2
    CHECK(q.C2 == doctest::Approx(-4.0 * w * w).epsilon(1e-5));
    CHECK(q.G2 == doctest::Approx(-4.0 * w * w).epsilon(1e-5));
}

TEST_CASE("irrep data at the reference configuration") {
    const DerivedParams dp = ref();
    const RepCoefficients rc = rep_coefficients(dp, 20);
    CHECK(rc.p0 == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
    CHECK(rc.lambda_p[0] == doctest::Approx(15.0).epsilon(1e-13));
    CHECK(rc.a_sq[0] == 0.0);
    CHECK(rc.a_sq[1] > 0.0);
    for (int n = 0; n <= 20; ++n) {
        CHECK(std::abs(rc.lambda_p[n] - energy(dp, n)) <= 1e-13 * energy(dp, n));
        if (n >= 1) CHECK(rc.a_sq[n] > 0.0);
    }
    // shifted tables
    CHECK(rc.b_n[0] == doctest::Approx(-0.1).epsilon(1e-14));
    CHECK(rc.g_n[0] == doctest::Approx(16.0).epsilon(1e-14));
    // a_1 = (3/10) sqrt(33/13)
    CHECK(rc.a_n[1] == doctest::Approx(0.47797650408941490).epsilon(1e-13));
    CHECK(rc.a_n[0] == 0.0);
    CHECK(!rc.near_degenerate);
}

TEST_CASE("shifted tables agree with the p-form sequences") {
    const DerivedParams dp = ref();
    const RepCoefficients rc = rep_coefficients(dp, 12);
    for (int n = 0; n <= 12; ++n) {
        CHECK(rc.b_n[n] == doctest::Approx(rc.b_p[n]).epsilon(1e-12));
        CHECK(rc.g_n[n] == doctest::Approx(rc.g_p[n]).epsilon(1e-12));
        CHECK(rc.a_n[n] * rc.a_n[n] == doctest::Approx(rc.a_sq[n]).epsilon(1e-11));
    }
}

TEST_CASE("verbatim a_p^2 formula matches the factored tables") {
    const DerivedParams dp = ref();
    const RepCoefficients rc = rep_coefficients(dp, 10);
    for (int n = 0; n <= 10; ++n) {
        const double direct = a_p_squared(dp, rc.p0 + n);
        if (n == 0) {
            CHECK(std::abs(direct) <= 1e-14);
        } else {
            CHECK(direct == doctest::Approx(rc.a_sq[n]).epsilon(1e-12));
        }
    }
}

TEST_CASE("line sector carries exactly two lowest weights") {
    const DerivedParams dp = line(Parity::even);
    const auto irreps = line_irreps(dp, 8);
    REQUIRE(irreps.size() == 2);
    CHECK(irreps[0].p0 == doctest::Approx(0.5).epsilon(1e-14));  // even: (nu-1)/2
    CHECK(irreps[1].p0 == doctest::Approx(1.0).epsilon(1e-14));  // odd: nu/2
    // towers reproduce both parity spectra: E_{2v} = 4v^2+8v+2, E_{2v+1} = 4v^2+12v+7
    for (int v = 0; v <= 8; ++v) {
        CHECK(irreps[0].lambda_p[v] == doctest::Approx(4.0 * v * v + 8.0 * v + 2.0).epsilon(1e-12));
        CHECK(irreps[1].lambda_p[v] == doctest::Approx(4.0 * v * v + 12.0 * v + 7.0).epsilon(1e-12));
    }
    const auto p0s = admissible_p0(dp);
    REQUIRE(p0s.size() == 2);
    CHECK(p0s[0] == doctest::Approx(1.0));   // sector L = -1... order: (nu+L)/2 first
    CHECK(p0s[1] == doctest::Approx(0.5));
}

TEST_CASE("radial sector has a single admissible lowest weight") {
    const DerivedParams dp = ref();
    const auto p0s = admissible_p0(dp);
    REQUIRE(p0s.size() == 1);
    CHECK(p0s[0] == doctest::Approx(2.0 / 3.0).epsilon(1e-14));
    // also for a generic higher-L sector
    const DerivedParams d5 = derive_params({0.7, 2.3, RadialSector{5, 2}});
    CHECK(admissible_p0(d5).size() == 1);
}

TEST_CASE("scan of a_p^2 zeros finds only the closed-form roots") {
    const DerivedParams dp = line(Parity::even);
    const double nu = dp.nu;
    const double roots[4] = {0.5 * (nu + dp.L), 0.5 * (nu - dp.L - 1.0), -0.5 * (nu + dp.L),
                             -0.5 * (nu - dp.L - 1.0)};
    double prev_p = 0.011, prev = a_p_squared(dp, prev_p);
    for (double p = 0.021; p <= 4.0; p += 0.01) {
        const double cur = a_p_squared(dp, p);
        if (prev * cur < 0.0 || cur == 0.0) {
            bool near_root = false;
            for (double r : roots)
                if (std::abs(p - r) < 0.03 || std::abs(prev_p - r) < 0.03) near_root = true;
            // the prefactor singularity at p = 1/2 also flips the sign
            if (std::abs(p - 0.5) < 0.03 || std::abs(prev_p - 0.5) < 0.03) near_root = true;
            CHECK(near_root);
        }
        prev = cur;
        prev_p = p;
    }
}

TEST_CASE("deformed matrix elements") {
    const DerivedParams dp = ref();
    const DeformedElements de = deformed_elements(dp, 6);
    CHECK(de.k_plus[0] == doctest::Approx(1.8998355191963330).epsilon(1e-13));
    CHECK(de.k0[0] == doctest::Approx(15.0 / 16.0).epsilon(1e-14));
    CHECK(de.k_minus[0] == 0.0);

    const DerivedParams ev = line(Parity::even);
    const LineDeformedElements le = line_deformed_elements(ev, 4);
    CHECK(le.k_plus[0] == doctest::Approx(0.79056941504209483).epsilon(1e-13));
    CHECK(le.k0[0] == doctest::Approx(0.25).epsilon(1e-14));
    // full-line elements coincide with the pseudo-radial ones at n = 2v
    const DeformedElements pe = deformed_elements(ev, 2);
    CHECK(le.k_plus[0] == doctest::Approx(pe.k_plus[0]).epsilon(1e-13));
    CHECK(le.k_plus[2] == doctest::Approx(pe.k_plus[1]).epsilon(1e-13));
    const DerivedParams od = line(Parity::odd);
    const LineDeformedElements lo = line_deformed_elements(od, 5);
    const DeformedElements po = deformed_elements(od, 2);
    CHECK(lo.k_plus[1] == doctest::Approx(po.k_plus[0]).epsilon(1e-13));
    CHECK(lo.k_plus[3] == doctest::Approx(po.k_plus[1]).epsilon(1e-13));
}

TEST_CASE("deformed elements approach su(1,1) as alpha -> 0") {
    const DerivedParams dp = derive_params({1e-6, 1.0, RadialSector{3, 0}});
    const DeformedElements de = deformed_elements(dp, 5);
    for (int n = 0; n <= 5; ++n) {
        CHECK(std::abs(de.k_plus[n] - su11_k_plus(dp, n)) <= 1e-5 * su11_k_plus(dp, n));
        if (n >= 1)
            CHECK(std::abs(de.k_minus[n] - su11_k_minus(dp, n)) <= 1e-5 * su11_k_minus(dp, n));
    }
}

TEST_CASE("tilde-basis matrix equals the exact quadrature matrix") {
    const DerivedParams dp = ref();
    const TildeElements te = tilde_elements(dp, 6);
    const BasisQuadrature bq(dp, 6);
    for (int n = 0; n <= 6; ++n) {
        CHECK(std::abs(bq.t_element(n, n) - te.b[n]) <= 1e-8);
        if (n >= 1) CHECK(std::abs(bq.t_element(n - 1, n) - te.a[n]) <= 1e-8);
        // tau_n = +1: quadrature off-diagonals come out positive
        if (n >= 1) CHECK(bq.t_element(n - 1, n) > 0.0);
    }
}

TEST_CASE("multiplication by t reduces to the jacobi three-term recursion") {
    const DerivedParams dp = ref();
    const auto jp = jacobi_params(dp);
    const NormalizationTable tab = normalization_table(dp, 9);
    const TildeElements te = tilde_elements(dp, 9);
    const double b = jp.beta, g = jp.gamma_;
    for (int n = 1; n <= 8; ++n) {
        // t P_n = A_n P_{n+1} + B_n P_n + C_n P_{n-1} from the recurrence
        const double s = 2.0 * n + b + g;
        const double a1 = 2.0 * (n + 1.0) * (n + b + g + 1.0) * s;
        const double a2c = (s + 1.0) * (b * b - g * g);
        const double a2t = (s + 1.0) * s * (s + 2.0);
        const double a3 = 2.0 * (n + b) * (n + g) * (s + 2.0);
        const double A = a1 / (a2t);
        const double B = -a2c / a2t;
        const double C = a3 / a2t;
        const double u_n = tab.ratio[n];
        CHECK(te.a[n + 1] == doctest::Approx(A * u_n / tab.ratio[n + 1]).epsilon(1e-10));
        CHECK(te.b[n] == doctest::Approx(B).epsilon(1e-10));
        CHECK(te.a[n] == doctest::Approx(C * u_n / tab.ratio[n - 1]).epsilon(1e-10));
    }
}

TEST_CASE("truncated matrices satisfy the deformed algebra exactly") {
    for (const DerivedParams& dp : {ref(), line(Parity::even), line(Parity::odd)}) {
        for (const auto& rep : deformed_commutator_matrices(dp, 12)) {
            INFO(rep.identity);
            CHECK(rep.relative <= 1e-12);
        }
    }
}

TEST_CASE("deformed casimir eigenvalue") {
    CHECK(deformed_casimir_scalar(ref()) == doctest::Approx(-3.0 / 64.0).epsilon(1e-13));
    // both line irreps share the same value
    const double ce = deformed_casimir_scalar(line(Parity::even));
    const double co = deformed_casimir_scalar(line(Parity::odd));
    CHECK(ce == doctest::Approx(co).epsilon(1e-13));
    // alpha -> 0: -3/16 for both (su(1,1) D^+_{1/4}, D^+_{3/4})
    const DerivedParams sm = derive_params({1e-9, 1.0, LineSector{Parity::even}});
    CHECK(deformed_casimir_scalar(sm) == doctest::Approx(-3.0 / 16.0).epsilon(1e-7));
}

TEST_CASE("alpha delta_n / lambda approaches 1 in the limit") {
    const DerivedParams dp = derive_params({1e-6, 1.0, RadialSector{3, 0}});
    for (int n = 0; n <= 3; ++n) {
        CHECK(dp.alpha * delta_n(dp, n) / dp.lambda == doctest::Approx(1.0).epsilon(1e-4));
    }
    CHECK(dp.alpha / dp.lambda <= 1e-5);
}

TEST_CASE("repalg verification suite") {
    for (const DerivedParams& dp : {ref(), line(Parity::even)}) {
        for (const auto& e : suite_repalg(dp)) {
            INFO(e.report.identity);
            CHECK(e.pass);
        }
    }
}
