#include <ostream>

#include "check.hpp"
#include "helmholtz2d/coeffs.hpp"
#include "helmholtz2d/specfun.hpp"

using namespace helmholtz2d;
using namespace helmholtz2d::coeffs;
using C = Complex;

namespace {

struct WSample {
    Parity parity;
    double beta;
    int m;
    C value;
};

// k = 1, from the 3F2 form summed at 40 digits
const WSample kW[] = {
    {Parity::even, 0.0, 0, C(1.1803405990161)},
    {Parity::even, 0.0, 2, C(-0.393446866338698)},
    {Parity::even, 0.5, 0, C(0.548102486506617)},
    {Parity::even, 2.0, -3, C(-0.351186259266422)},
    {Parity::even, 0.0, 8, C(0.199278282950769)},
    {Parity::odd, 0.0, 1, C(0.0, -0.539352601188379)},
    {Parity::odd, 0.0, -3, C(0.0, -0.323611560713028)},
    {Parity::odd, 0.5, 2, C(0.0, 0.308599727127567)},
    {Parity::odd, 2.0, 8, C(0.0, 0.162504432454266)},
};

}  // namespace

TEST_CASE("S coefficients") {
    const double c = 1.0 / std::sqrt(kTwoPi);
    for (double alpha : {-3.0, -0.4, 0.0, 1.9}) {
        CHECK_CLOSE(s_coeff({Parity::even, 0, alpha}), C(c), 1e-15);
        CHECK(s_coeff({Parity::odd, 0, alpha}) == C(0.0));
    }
    CHECK_CLOSE(s_coeff({Parity::even, 2, kPi / 2.0}), C(c), 1e-15);
}

TEST_CASE("W by every route against frozen values") {
    for (const auto& s : kW) {
        const WCoeffQuery q{s.parity, 1.0, s.beta, s.m};
        CAPTURE(s.m);
        CAPTURE(s.beta);
        CHECK_CLOSE(w_coeff_3f2(q), s.value, 1e-13);
        CHECK_CLOSE(w_coeff_hahn(q), s.value, 1e-13);
        CHECK_CLOSE(w_coeff_integral(q), s.value, 1e-12);
        CHECK_CLOSE(w_projection_oracle(q, projection_radius(1.0, s.m)), s.value, 1e-10);
    }
}

TEST_CASE("W special cases") {
    // even, m = 0: |Gamma(1/4 + i beta/2k)|^2 / (2 sqrt(pi^3 k))
    for (double k : {0.5, 2.0}) {
        for (double beta : {0.0, 1.3}) {
            const double expected =
                specfun::abs_gamma_sq(0.25, beta / (2.0 * k)) / (2.0 * std::sqrt(kPi * kPi * kPi * k));
            CHECK_CLOSE(w_coeff_3f2({Parity::even, k, beta, 0}), C(expected), 1e-14);
        }
    }
    CHECK(w_coeff_3f2({Parity::odd, 1.0, 0.4, 0}) == C(0.0));
    CHECK(w_coeff_hahn({Parity::odd, 1.0, 0.4, 0}) == C(0.0));
    CHECK(w_coeff_integral({Parity::odd, 1.0, 0.4, 0}) == C(0.0));
    CHECK(std::abs(w_coeff_hahn({Parity::even, 1.0, 0.0, 1})) < 1e-15);
    CHECK_CLOSE(w_coeff_integral({Parity::even, 1.0, 1.7, 3}), w_coeff_3f2({Parity::even, 1.0, 1.7, 3}),
                1e-8);
    CHECK_CLOSE(w_projection_oracle({Parity::even, 1.0, 0.5, 2}, 2.3),
                w_coeff_3f2({Parity::even, 1.0, 0.5, 2}), 1e-7);
    CHECK_CLOSE(w_projection_oracle({Parity::even, 1.0, 0.0, 0}, 1.0), C(1.1803405990161), 1e-12);
}

TEST_CASE("W odd, m = -1, beta = k") {
    // +i (-1) |Gamma(3/4 + i/2)|^2 / (2 sqrt(pi k) Gamma(3/2)^2) sign(-1)
    const double g32 = std::sqrt(kPi) / 2.0;
    const double mag = specfun::abs_gamma_sq(0.75, 0.5) / (2.0 * std::sqrt(kPi) * g32 * g32);
    CHECK_CLOSE(w_coeff_hahn({Parity::odd, 1.0, 1.0, -1}), C(0.0, mag), 1e-14);
    CHECK_CLOSE(w_coeff_3f2({Parity::odd, 1.0, 1.0, -1}), C(0.0, mag), 1e-14);
}

TEST_CASE("W parity in m") {
    for (int m = 1; m <= 10; ++m) {
        CHECK(w_coeff_hahn({Parity::even, 1.3, 0.8, m}) == w_coeff_hahn({Parity::even, 1.3, 0.8, -m}));
        CHECK(w_coeff_hahn({Parity::odd, 1.3, 0.8, m}) == -w_coeff_hahn({Parity::odd, 1.3, 0.8, -m}));
    }
}

TEST_CASE("W guards") {
    CHECK_THROWS_AS(w_coeff_3f2({Parity::even, 1.0, 0.0, kW3F2MaxOrder + 1}), RangeError);
    CHECK_THROWS_AS(w_coeff_hahn({Parity::even, 1.0, 0.0, kWHahnMaxOrder + 1}), RangeError);
    CHECK_THROWS_AS(w_coeff_3f2({Parity::even, 0.0, 0.0, 1}), ContractError);
    CHECK_NOTHROW(w_coeff_hahn({Parity::even, 1.0, 3.0, 120}));
    CHECK_THROWS_AS(w_projection_oracle({Parity::even, 1.0, 0.0, 3}, 1e-3), NodeError);
}

TEST_CASE("Z coefficients") {
    for (double beta : {-2.0, 0.0, 3.5}) {
        CHECK_CLOSE(z_coeff({1.7, beta, kPi / 2.0}), C(1.0 / (2.0 * std::sqrt(kPi * 1.7))), 1e-15);
    }
    for (double a : {0.1, 1.0, 3.0}) {
        const C z = z_coeff({1.0, 0.0, a});
        CHECK(z.real() > 0.0);
        CHECK(z.imag() == 0.0);
    }
    CHECK_CLOSE(z_coeff({1.0, 1.0, kPi / 3.0}), C(0.2585361278269126, 0.15826313482688144), 1e-14);
    CHECK(std::arg(z_coeff({1.0, 1.0, kPi / 3.0})) ==
          doctest::Approx(std::log(std::sqrt(3.0))).epsilon(1e-14));
    CHECK_THROWS_AS(z_coeff({1.0, 1.0, 0.0}), SingularityError);
    CHECK_THROWS_AS(z_coeff({1.0, 1.0, kPi}), SingularityError);
    CHECK_THROWS_AS(z_coeff({1.0, 1.0, 3.5}), ContractError);
}

TEST_CASE("angular integrals") {
    CHECK_CLOSE(angular_integral_I(Parity::even, 0, 0, 0), C(kTwoPi), 1e-15);
    CHECK_CLOSE(angular_integral_I(Parity::even, 1, 0, 1), C(kPi), 1e-15);
    CHECK_CLOSE(angular_integral_I(Parity::even, 1, 1, 2), C(-kPi / 2.0), 1e-15);
    CHECK_CLOSE(angular_integral_I(Parity::odd, 0, 0, 1), C(0.0, -kPi), 1e-15);
    CHECK_CLOSE(angular_integral_I(Parity::odd, 0, 0, -1), C(0.0, kPi), 1e-15);
    CHECK(angular_integral_I(Parity::odd, 0, 0, 2) == C(0.0));
    CHECK(angular_integral_I(Parity::even, 1, 1, 3) == C(0.0));
    CHECK(angular_integral_in_closed_form_domain(Parity::even, 2, 1, 3));
}

TEST_CASE("S overlaps and mixed parity sums") {
    CHECK_CLOSE(s_overlap(Parity::even, 3, 3), C(0.5), 1e-15);
    CHECK_CLOSE(s_overlap(Parity::even, 3, -3), C(0.5), 1e-15);
    CHECK(s_overlap(Parity::even, 2, 1) == C(0.0));
    CHECK_CLOSE(s_overlap(Parity::even, 0, 0), C(1.0), 1e-15);
    for (int M = 0; M <= 12; ++M) {
        CHECK(mixed_parity_sum(Parity::even, 1.0, 0.7, 1.1, M) == C(0.0));
        CHECK(mixed_parity_sum(Parity::odd, 1.0, 0.7, 1.1, M) == C(0.0));
    }
}

TEST_CASE("method names") {
    for (Method m : {Method::closed_form, Method::hahn, Method::three_f_two, Method::integral}) {
        CHECK(parse_method(to_string(m)) == m);
    }
    CHECK_THROWS_AS(parse_method("fourier"), ConfigError);
    CHECK(w_coeff({Parity::even, 1.0, 0.5, 2}, Method::closed_form) ==
          w_coeff_3f2({Parity::even, 1.0, 0.5, 2}));
}

TEST_CASE("tables are ordered and deterministic") {
    const auto w = w_table({Parity::even, Parity::odd}, 1.0, {0.0, 0.5}, {-1, 0, 1},
                           {Method::three_f_two, Method::hahn, Method::integral});
    CHECK(w.kind == TableKind::W);
    REQUIRE(w.rows.size() == 36);
    CHECK(w.rows[0].parity == Parity::even);
    CHECK(w.rows[0].m == -1);
    CHECK(w.rows[1].method == Method::hahn);
    CHECK(w.rows[35].parity == Parity::odd);
    const auto again = w_table({Parity::even, Parity::odd}, 1.0, {0.0, 0.5}, {-1, 0, 1},
                               {Method::three_f_two, Method::hahn, Method::integral});
    for (std::size_t i = 0; i < w.rows.size(); ++i) {
        CHECK(w.rows[i].value == again.rows[i].value);
    }
    const auto s = s_table({Parity::even}, {0, 1}, {0.0, 1.0, 2.0});
    CHECK(s.rows.size() == 6);
    const auto z = z_table(1.0, {0.0, 1.0}, {0.5, 1.5});
    CHECK(z.rows.size() == 4);
}
