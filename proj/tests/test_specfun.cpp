#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "pdmho/specfun.hpp"

using namespace pdmho::specfun;

namespace {

// Independent series oracle: P_n^{(b,g)}(t) as the terminating hypergeometric
// sum. Extended precision keeps the alternating-sum cancellation (worst near
// t = -1 with large b) below the comparison tolerance.
double jacobi_series(int n, double b, double g, double t) {
    // expand about the nearest endpoint: P_n^{(b,g)}(t) = (-1)^n P_n^{(g,b)}(-t)
    if (t < 0.0) return (n % 2 ? -1.0 : 1.0) * jacobi_series(n, g, b, -t);
    long double sum = 0.0L;
    const long double bl = b, gl = g, tl = t;
    for (int k = 0; k <= n; ++k) {
        const long double ln_binom = lgammal(n + 1.0L) - lgammal(k + 1.0L)
                                   - lgammal(n - k + 1.0L);
        const long double ln_ratio = lgammal(n + k + bl + gl + 1.0L) - lgammal(k + bl + 1.0L);
        sum += expl(ln_binom + ln_ratio) * powl(0.5L * (tl - 1.0L), k);
    }
    const long double ln_pre = lgammal(n + bl + 1.0L) - lgammal(n + 1.0L)
                             - lgammal(n + bl + gl + 1.0L);
    return static_cast<double>(expl(ln_pre) * sum);
}

}  // namespace

TEST_CASE("ln_gamma against exact values") {
    CHECK(ln_gamma(1.0) == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(ln_gamma(2.0) == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(ln_gamma(0.5) == doctest::Approx(0.57236494292470009).epsilon(1e-13));
    CHECK(ln_gamma(5.0) == doctest::Approx(3.1780538303479456).epsilon(1e-13));
    CHECK_THROWS_AS(ln_gamma(0.0), std::domain_error);
    CHECK_THROWS_AS(ln_gamma(-1.5), std::domain_error);
}

TEST_CASE("ln_gamma recurrence over the working range") {
    for (double x = 0.5; x <= 50.0; x += 0.173) {
        const double lhs = ln_gamma(x + 1.0);
        const double rhs = ln_gamma(x) + std::log(x);
        CHECK(std::abs(lhs - rhs) <= 1e-13 * std::max(1.0, std::abs(rhs)));
    }
}

TEST_CASE("jacobi polynomial values") {
    const JacobiParams jp{5.0 / 6.0, 0.5};
    CHECK(jacobi_p(0, jp, 0.3) == 1.0);
    CHECK(jacobi_p(1, jp, 0.0) == doctest::Approx(1.0 / 6.0).epsilon(1e-15));
    CHECK(jacobi_p(2, {0.0, 0.0}, 0.5) == doctest::Approx(-0.125).epsilon(1e-14));
    // frozen from the series oracle
    CHECK(jacobi_p(4, jp, 0.3) == doctest::Approx(-0.13977301954732510).epsilon(1e-12));
}

TEST_CASE("jacobi recurrence matches the series oracle") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> ts(-1.0, 1.0);
    for (const JacobiParams jp : {JacobiParams{5.0 / 6.0, 0.5}, JacobiParams{0.0, 0.0},
                                  JacobiParams{19.5, 1.5}, JacobiParams{2.25, -0.5}}) {
        for (int n = 0; n <= 10; ++n) {
            for (int k = 0; k < 8; ++k) {
                const double t = ts(rng);
                const double got = jacobi_p(n, jp, t);
                const double expect = jacobi_series(n, jp.beta, jp.gamma_, t);
                CHECK(std::abs(got - expect)
                      <= 3e-10 * std::max({1.0, std::abs(got), std::abs(expect)}));
            }
        }
    }
}

TEST_CASE("jacobi sequence returns all degrees") {
    const JacobiParams jp{5.0 / 6.0, 0.5};
    const auto seq = jacobi_seq(6, jp, 0.37);
    for (int n = 0; n <= 6; ++n) CHECK(seq[n] == jacobi_p(n, jp, 0.37));
}

TEST_CASE("jacobi derivative by central differences") {
    const JacobiParams jp{5.0 / 6.0, 0.5};
    const double h = 1e-6;
    for (int n = 1; n <= 8; ++n) {
        for (double t = -0.9; t < 0.95; t += 0.2) {
            const double fd = (jacobi_p(n, jp, t + h) - jacobi_p(n, jp, t - h)) / (2.0 * h);
            CHECK(jacobi_p_derivative(n, jp, t)
                  == doctest::Approx(fd).epsilon(1e-8));
        }
    }
    CHECK(jacobi_p_derivative(0, jp, 0.1) == 0.0);
}

TEST_CASE("raising combination equals the degree-raised polynomial") {
    CHECK(jacobi_raise_rhs(0, {0.0, 0.0}, 0.0) == doctest::Approx(0.0));
    CHECK(jacobi_raise_rhs(0, {5.0 / 6.0, 0.5}, 0.0)
          == doctest::Approx(-7.0 / 9.0).epsilon(1e-14));
    const JacobiParams jp{5.0 / 6.0, 0.5};
    {
        const double lhs = jacobi_raise_rhs(3, jp, 0.4);
        const double rhs = -2.0 * 4.0 * (3.0 + jp.beta + jp.gamma_ + 1.0) * jacobi_p(4, jp, 0.4);
        CHECK(std::abs(lhs - rhs) <= 1e-10 * std::abs(rhs));
    }
    for (int n = 0; n <= 12; ++n) {
        for (int i = 0; i < 50; ++i) {
            const double t = -1.0 + (i + 0.5) / 25.0;
            const double lhs = jacobi_raise_rhs(n, jp, t);
            const double rhs = -2.0 * (n + 1.0) * (n + jp.beta + jp.gamma_ + 1.0)
                             * jacobi_p(n + 1, jp, t);
            CHECK(std::abs(lhs - rhs) <= 1e-10 * std::max(1.0, std::abs(rhs)));
        }
    }
}

TEST_CASE("gauss-jacobi: legendre special case") {
    const auto rule = gauss_jacobi(2, {0.0, 0.0});
    CHECK(rule.nodes[0] == doctest::Approx(-1.0 / std::sqrt(3.0)).epsilon(1e-14));
    CHECK(rule.nodes[1] == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-14));
    CHECK(rule.weights[0] == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(rule.weights[1] == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("gauss-jacobi: weight sum equals the beta-function moment") {
    // 2^{b+g+1} B(b+1, g+1), frozen for (5/6, 1/2)
    const auto rule = gauss_jacobi(8, {5.0 / 6.0, 0.5});
    double sum = 0.0;
    for (double w : rule.weights) sum += w;
    CHECK(sum == doctest::Approx(1.5122444940664321).epsilon(1e-13));
    // same moment via ln_gamma for a large first exponent
    const JacobiParams big{20.5, 1.5};
    const auto rule2 = gauss_jacobi(12, big);
    double sum2 = 0.0;
    for (double w : rule2.weights) sum2 += w;
    const double expect = std::exp((big.beta + big.gamma_ + 1.0) * std::log(2.0)
                                   + ln_gamma(big.beta + 1.0) + ln_gamma(big.gamma_ + 1.0)
                                   - ln_gamma(big.beta + big.gamma_ + 2.0));
    CHECK(sum2 == doctest::Approx(expect).epsilon(1e-12));
}

TEST_CASE("gauss-jacobi: orthogonality under the rule itself") {
    const JacobiParams jp{5.0 / 6.0, 0.5};
    const auto rule = gauss_jacobi(12, jp);
    for (int m = 0; m <= 8; ++m) {
        for (int n = m; n <= 8; ++n) {
            double s = 0.0;
            for (std::size_t i = 0; i < rule.nodes.size(); ++i)
                s += rule.weights[i] * jacobi_p(m, jp, rule.nodes[i])
                   * jacobi_p(n, jp, rule.nodes[i]);
            const double norm = std::sqrt(jacobi_norm_sq(m, jp) * jacobi_norm_sq(n, jp));
            const double expect = (m == n) ? 1.0 : 0.0;
            CHECK(std::abs(s / norm - expect) <= 1e-10);
        }
    }
}

TEST_CASE("gauss-jacobi: nodes ordered inside (-1,1), weights positive") {
    for (int n : {1, 3, 7, 24}) {
        const auto rule = gauss_jacobi(n, {5.0 / 6.0, 0.5});
        REQUIRE(static_cast<int>(rule.nodes.size()) == n);
        for (int i = 0; i < n; ++i) {
            CHECK(rule.nodes[i] > -1.0);
            CHECK(rule.nodes[i] < 1.0);
            CHECK(rule.weights[i] > 0.0);
            if (i) CHECK(rule.nodes[i] > rule.nodes[i - 1]);
        }
    }
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(jacobi_p(2, {-1.0, 0.0}, 0.0), std::domain_error);
    CHECK_THROWS_AS(jacobi_seq(-1, {0.0, 0.0}, 0.0), std::domain_error);
    CHECK_THROWS_AS(gauss_jacobi(0, {0.0, 0.0}), std::domain_error);
}
