#include <ostream>
#include <sstream>

#include "check.hpp"
#include "helmholtz2d/harness.hpp"

using namespace helmholtz2d;
using namespace helmholtz2d::harness;
using C = Complex;

namespace {

SuiteConfig parse(const std::string& text) {
    std::istringstream in(text);
    return parse_config(in);
}

}  // namespace

TEST_CASE("reports") {
    const auto r = make_report("x", {1e-3, 2e-3}, 5e-3);
    CHECK(r.pass);
    CHECK(r.max_abs_error == 2e-3);
    CHECK(r.rms_error == doctest::Approx(std::sqrt((1e-6 + 4e-6) / 2.0)));
    CHECK_FALSE(make_report("x", {1e-3, 6e-3}, 5e-3).pass);
    CHECK_FALSE(make_report("x", {std::nan("")}, 5e-3).pass);
    CHECK(make_report("x", {0.0}, 0.0).pass);
}

TEST_CASE("JSON line layout") {
    auto r = make_report("jacobi_anger", {0.25}, 0.5);
    r.set("k", 1.5).set("parity", std::string("even")).set("m", -3LL).set("flag", true);
    CHECK(to_json_line(r) ==
          R"({"identity_name":"jacobi_anger","parameters":{"samples":1,"k":1.5,"parity":"even",)"
          R"("m":-3,"flag":true},"max_abs_error":0.25,"rms_error":0.25,"tolerance":0.5,)"
          R"("pass":true,"runtime_ms":0.0})");
    const auto bad = make_report("x", {std::numeric_limits<double>::infinity()}, 1.0);
    CHECK(to_json_line(bad).find(R"("max_abs_error":null)") != std::string::npos);
}

TEST_CASE("merge keeps the worst case") {
    const auto a = make_report("x", {1e-3}, 1e-2);
    const auto b = make_report("x", {3e-2}, 1e-2);
    const auto m = merge_reports("x", {a, b}, 1e-2);
    CHECK(m.max_abs_error == 3e-2);
    CHECK_FALSE(m.pass);
}

TEST_CASE("rng is portable") {
    Rng a(0x5EED), b(0x5EED);
    for (int i = 0; i < 100; ++i) {
        const double u = a.uniform();
        CHECK(u == b.uniform());
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
    }
    Rng c(1);
    for (int i = 0; i < 1000; ++i) {
        const int v = c.integer(-2, 2);
        CHECK(v >= -2);
        CHECK(v <= 2);
    }
}

TEST_CASE("config parsing and tolerance precedence") {
    const auto c = parse("# comment\nseed = 7\n\ntolerance = 1e-3\ntol.bailey_transformation = 1e-9\n"
                         "m_max = 60\ntiming = on\n");
    CHECK(c.seed == 7);
    CHECK(c.m_max == 60);
    CHECK(c.timing);
    CHECK(c.tolerance_for("bailey_transformation") == 1e-9);
    CHECK(c.tolerance_for("jacobi_anger") == 1e-3);
    const SuiteConfig d;
    CHECK(d.tolerance_for("jacobi_anger") == default_tolerance("jacobi_anger"));
    CHECK(parse("seed = 0x10\n").seed == 16);
}

TEST_CASE("config errors") {
    CHECK_THROWS_AS(parse("bogus = 1\n"), ConfigError);
    CHECK_THROWS_AS(parse("tol.nothing = 1\n"), ConfigError);
    CHECK_THROWS_AS(parse("tolerance = -1\n"), ConfigError);
    CHECK_THROWS_AS(parse("m_max = 500\n"), ConfigError);
    CHECK_THROWS_AS(parse("seed\n"), ConfigError);
    CHECK_THROWS_AS(parse("timing = maybe\n"), ConfigError);
    CHECK_THROWS_AS(load_config("/nonexistent/file.cfg"), ConfigError);
}

TEST_CASE("every identity has a default tolerance") {
    for (const auto& name : identity_names()) {
        CHECK(default_tolerance(name) >= 0.0);
    }
}

TEST_CASE("Jacobi-Anger") {
    CHECK(verify_jacobi_anger(1.0, 5.0, 3, 0.7).pass);
    CHECK(verify_jacobi_anger(2.0, 10.0, -4, kPi).pass);
    CHECK(verify_jacobi_anger(1.0, 1e-12, 0, 0.0).pass);
    CHECK_THROWS_AS(verify_jacobi_anger(1.0, 60.0, 0, 0.0), RangeError);
    CHECK_THROWS_AS(verify_jacobi_anger(1.0, 1.0, 21, 0.0), RangeError);
}

TEST_CASE("Cartesian from polar") {
    CHECK(verify_expansion_cartesian_from_polar({1.0, kPi / 4.0, Parity::even}, {2.0, 1.0}, 25, 1e-9)
              .pass);
    const auto odd = verify_expansion_cartesian_from_polar({1.3, 1.0, Parity::odd}, {2.0, kPi}, 25, 1e-9);
    CHECK(odd.pass);
    CHECK(odd.max_abs_error < 1e-12);
    CHECK(verify_expansion_cartesian_from_polar({1.0, 0.0, Parity::even}, {3.0, 0.4}, 25, 1e-9).pass);
    CHECK_THROWS_AS(
        verify_expansion_cartesian_from_polar({1.0, 0.0, Parity::even}, {3.0, 0.4}, 10, 1e-9),
        ContractError);
}

TEST_CASE("parabolic from polar") {
    CHECK(verify_expansion_parabolic_from_polar({1.0, 0.0, Parity::even}, {1.0, kPi / 2.0}).pass);
    CHECK(verify_expansion_parabolic_from_polar({1.0, 2.0, Parity::odd}, {1.5, 0.9}).pass);
    const auto zero = verify_expansion_parabolic_from_polar({1.0, 0.6, Parity::odd}, {2.0, 0.0});
    CHECK(zero.max_abs_error <= 1e-10);
    CHECK_THROWS_AS(verify_expansion_parabolic_from_polar({1.0, 0.0, Parity::even}, {15.0, 1.0}, 20),
                    ConvergenceError);
}

TEST_CASE("Z expansion exponents") {
    const auto [ae, be] = z_expansion_jacobi_exponents(Parity::even);
    CHECK(ae == -0.75);
    CHECK(be == -0.75);
    const auto [ao, bo] = z_expansion_jacobi_exponents(Parity::odd);
    CHECK(ao == -0.25);
    CHECK(bo == -0.25);
}

TEST_CASE("parabolic from Cartesian") {
    CHECK(verify_expansion_parabolic_from_cartesian({1.0, 0.0, Parity::even}, {1.0, 0.5}).pass);
    CHECK(verify_expansion_parabolic_from_cartesian({1.0, 1.5, Parity::odd}, {0.9, 1.1}).pass);
    CHECK(verify_expansion_parabolic_from_cartesian({1.0, 1.5, Parity::odd}, {0.9, 0.0})
              .max_abs_error < 1e-14);
}

TEST_CASE("inverse expansion") {
    CHECK(verify_inverse_polar_from_parabolic({1.0, 0}, {1.0, 0.3}, 40.0).pass);
    CHECK(verify_inverse_polar_from_parabolic({1.0, 2}, {2.0, 2.0}, 40.0).pass);
}

TEST_CASE("W orthogonality values") {
    CHECK(w_orthogonality_expected(Parity::even, 0, 1) == 0.0);
    CHECK(w_orthogonality_expected(Parity::even, 2, 2) == 0.5);
    CHECK(w_orthogonality_expected(Parity::even, 2, -2) == 0.5);
    CHECK(w_orthogonality_expected(Parity::even, 0, 0) == 1.0);
    CHECK(w_orthogonality_literal(Parity::even, 0, 0) == 0.5);
    CHECK(w_orthogonality_expected(Parity::odd, 1, -1) == -0.5);
    CHECK(w_orthogonality_expected(Parity::odd, 0, 0) == 0.0);
    CHECK(verify_w_orthogonality(1.0, 0, 1, Parity::even, 40.0).pass);
    CHECK(verify_w_orthogonality(1.0, 2, 2, Parity::even, 40.0).pass);
    CHECK(verify_w_orthogonality(1.0, 1, -1, Parity::odd, 40.0).pass);
}

TEST_CASE("Hahn norm and orthogonality") {
    CHECK(hahn_norm(0, 0.25) == doctest::Approx(2.0 * kPi * kPi * kPi).epsilon(1e-14));
    CHECK(hahn_norm(0, 0.75) == doctest::Approx(kPi * kPi * kPi / 16.0).epsilon(1e-14));
    CHECK(verify_hahn_orthogonality(0, 1, 0.25).pass);
    CHECK(verify_hahn_orthogonality(0, 0, 0.25).pass);
    CHECK(verify_hahn_orthogonality(3, 3, 0.75).pass);
}

TEST_CASE("operator eigenvalues") {
    using bases::AngleIndex;
    CHECK(operator_eigenvalue(OperatorTag::X_C, AngleIndex{1.0, 0.0, Parity::even}) == C(0.0));
    CHECK(operator_eigenvalue(OperatorTag::X_S, bases::PolarIndex{1.0, 3}) == C(-9.0));
    CHECK(operator_eigenvalue(OperatorTag::X_P, bases::ParabolicIndex{1.0, 1.2, Parity::even}) ==
          C(2.4));
    CHECK(operator_eigenvalue(OperatorTag::L3, bases::PolarIndex{1.0, -2}) == C(0.0, -2.0));
    CHECK_THROWS_AS(operator_eigenvalue(OperatorTag::X_S, bases::PlaneWaveIndex{1.0, 0.0}),
                    ContractError);
    const geometry::PointXY p{0.8, -1.1};
    CHECK(verify_operator_eigenvalue(OperatorTag::X_S, bases::PolarIndex{1.0, 3}, p).pass);
    CHECK(verify_operator_eigenvalue(OperatorTag::X_P, bases::ParabolicIndex{1.0, 1.2, Parity::even},
                                     p)
              .pass);
    CHECK(verify_operator_eigenvalue(OperatorTag::X_C, AngleIndex{1.0, 0.0, Parity::even}, p).pass);
    CHECK(verify_helmholtz(bases::MillerIndex{1.0, 0.3, -1}, p).pass);
    const auto ratio = verify_refinement_ratio(std::nullopt, bases::PolarIndex{1.0, 3}, p);
    CHECK(ratio.pass);
}

TEST_CASE("angular integral oracle") {
    CHECK(verify_I_closed_forms(Parity::even, 4, 4).pass);
    CHECK(verify_I_closed_forms(Parity::odd, 4, 4).pass);
}

TEST_CASE("Bailey transformation and sine powers") {
    CHECK(verify_bailey({0.25, 0.3}, {0.25, -0.3}, {0.8, 0.0}, {0.5, 0.0}, 5).pass);
    CHECK(verify_sine_power(0.5, 3.0).pass);
}

TEST_CASE("suites") {
    SuiteConfig c;
    const auto reports = run_suite("jacobi-anger", c);
    REQUIRE(reports.size() == 1);
    CHECK(reports[0].pass);
    CHECK(reports[0].runtime_ms == 0.0);
    CHECK(to_json_line(run_suite("jacobi-anger", c)[0]) == to_json_line(reports[0]));
    CHECK_THROWS_AS(run_suite("nope", c), ConfigError);
    c.global_tolerance = 0.0;
    CHECK_FALSE(run_suite("jacobi-anger", c)[0].pass);
}
