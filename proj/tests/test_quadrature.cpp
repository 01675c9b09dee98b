#include <ostream>

#include "check.hpp"
#include "helmholtz2d/quadrature.hpp"

using namespace helmholtz2d;
using namespace helmholtz2d::quadrature;
using C = Complex;

TEST_CASE("periodic trapezoid is exact for trigonometric polynomials") {
    const C v = periodic_trapezoid([](double t) { return C(std::cos(3.0 * t) * std::cos(3.0 * t)); },
                                   0.0, kTwoPi, 16);
    CHECK_CLOSE(v, C(kPi), 1e-15);
}

TEST_CASE("Gauss-Jacobi rule sums the weight") {
    for (auto [a, b] : {std::pair{0.0, 0.0}, {-0.75, -0.75}, {-0.25, -0.25}, {-0.5, 0.5}}) {
        const auto& rule = gauss_jacobi_rule(32, a, b);
        double sum = 0.0;
        for (double w : rule.weights) sum += w;
        const double mu0 = std::exp2(a + b + 1.0) * std::tgamma(a + 1.0) * std::tgamma(b + 1.0) /
                           std::tgamma(a + b + 2.0);
        CHECK(sum == doctest::Approx(mu0).epsilon(1e-14));
        for (double x : rule.nodes) {
            CHECK(x > -1.0);
            CHECK(x < 1.0);
        }
    }
}

TEST_CASE("Gauss-Jacobi integrates polynomials exactly") {
    // int (1-u)^{-1/2}(1+u)^{-1/2} u^2 du = pi/2
    const auto r = gauss_jacobi([](double u) { return C(u * u); }, 16, -0.5, -0.5);
    CHECK_CLOSE(r.value, C(kPi / 2.0), 1e-14);
    CHECK(r.error_estimate < 1e-14);
    CHECK_THROWS_AS(gauss_jacobi_rule(8, -1.0, 0.0), ContractError);
}

TEST_CASE("adaptive Simpson") {
    const auto r = adaptive_simpson([](double x) { return C(std::exp(-x * x), std::sin(x)); }, -6.0,
                                    6.0, 1e-12, 1.0);
    CHECK_CLOSE(r.value, C(std::sqrt(kPi), 0.0), 1e-11);
    CHECK(r.evaluations > 0);
    CHECK_THROWS_AS(adaptive_simpson([](double x) { return C(1.0 / std::sqrt(std::abs(x))); }, -1.0,
                                     1.0, 1e-12, 1.0, 8),
                    QuadratureError);
}

TEST_CASE("tanh-mapped trapezoid") {
    // int sech(t) dt = pi
    const auto r =
        tanh_map_trapezoid([](double t) { return C(1.0 / std::cosh(t)); }, 40.0, 1e-13, 0.5);
    CHECK_CLOSE(r.value, C(kPi), 1e-13);
}

TEST_CASE("rule validation") {
    QuadratureRule rule;
    rule.node_count = 4;
    CHECK_THROWS_AS(validate(rule), ContractError);
    rule.node_count = 16;
    CHECK_NOTHROW(validate(rule));
    rule.kind = RuleKind::gauss_jacobi;
    rule.alpha = -1.5;
    CHECK_THROWS_AS(validate(rule), ContractError);
}
