#include <chrono>
#include <cmath>
#include <string>

#include "helmholtz2d/coeffs.hpp"
#include "helmholtz2d/harness.hpp"
#include "helmholtz2d/quadrature.hpp"
#include "helmholtz2d/specfun.hpp"

namespace helmholtz2d::harness {

namespace {

using bases::BasisIndex;
using geometry::PointXY;

constexpr Parity kParities[2] = {Parity::even, Parity::odd};

// beta/k values shared by the expansion checks
constexpr double kExpansionRatios[5] = {0.0, 1.0, -1.0, 3.0, -3.0};

// beta/k grid of the W agreement and symmetry checks
constexpr double kAgreementRatios[7] = {-5.0, -2.0, -0.5, 0.0, 0.5, 2.0, 5.0};

template <class F>
VerificationReport timed(const SuiteConfig& config, F&& f) {
    if (!config.timing) {
        return f();
    }
    const auto start = std::chrono::steady_clock::now();
    VerificationReport report = f();
    const auto stop = std::chrono::steady_clock::now();
    report.runtime_ms = std::chrono::duration<double, std::milli>(stop - start).count();
    return report;
}

// Every per-case report already carries its tolerance; the merged one re-checks it.
VerificationReport merged(const std::string& name, const std::vector<VerificationReport>& cases,
                          const SuiteConfig& config) {
    return merge_reports(name, cases, config.tolerance_for(name));
}

std::string parity_name(Parity p) { return std::string(to_string(p)); }

// ---------------------------------------------------------------------------

void jacobi_anger_suite(const SuiteConfig& config, std::vector<VerificationReport>& out) {
    const std::string name = "jacobi_anger";
    const double tol = config.tolerance_for(name);
    Rng rng(config.seed);
    std::vector<VerificationReport> cases;
    for (int i = 0; i < config.jacobi_anger_draws; ++i) {
        const double k = rng.uniform(0.5, 3.0);
        const double r = rng.uniform(0.0, 30.0) / k;
        const int m = rng.integer(-15, 15);
        const double phi = rng.uniform(0.0, kTwoPi);
        cases.push_back(timed(config, [&] {
            return verify_jacobi_anger(k, r, m, phi, config.trapezoid_nodes, tol);
        }));
    }
    auto report = merged(name, cases, config);
    report.set("kr_max", 30.0).set("m_abs_max", 15LL).set("nodes",
                                                        static_cast<long long>(config.trapezoid_nodes));
    out.push_back(report);
}

void expansions_suite(const SuiteConfig& config, std::vector<VerificationReport>& out) {
    // Cartesian from polar; the error is normalized by sqrt(k)
    {
        const std::string name = "expansion_cartesian_from_polar";
        const double tol = config.tolerance_for(name);
        for (Parity parity : kParities) {
            Rng rng(config.seed + 1 + static_cast<int>(parity));
            std::vector<VerificationReport> cases;
            for (int i = 0; i < config.random_points; ++i) {
                const double k = rng.uniform(0.5, 3.0);
                const double alpha = rng.uniform(-kPi, kPi);
                const geometry::PointPolar p{rng.uniform(0.05, 10.0) / k, rng.uniform(0.0, kTwoPi)};
                const int M = static_cast<int>(std::ceil(k * p.r)) + 20;
                auto c = timed(config, [&] {
                    return verify_expansion_cartesian_from_polar({k, alpha, parity}, p, M,
                                                                 tol * std::sqrt(k));
                });
                c.max_abs_error /= std::sqrt(k);
                c.rms_error /= std::sqrt(k);
                cases.push_back(c);
            }
            auto report = merged(name, cases, config);
            report.set("parity", parity_name(parity)).set("error_scale", std::string("sqrt(k)"));
            report.set("certifies", std::string("completeness of the polar basis (round trip)"));
            out.push_back(report);
        }
    }
    // parabolic from polar
    {
        const std::string name = "expansion_parabolic_from_polar";
        const double tol = config.tolerance_for(name);
        for (double ratio : kExpansionRatios) {
            for (Parity parity : kParities) {
                Rng rng(config.seed + 11);
                std::vector<VerificationReport> cases;
                int largest_M = 0;
                for (int i = 0; i < config.random_points; ++i) {
                    const double k = rng.uniform(0.5, 2.0);
                    // 2kr <= 40
                    const geometry::PointPolar p{rng.uniform(0.05, 20.0) / k,
                                                 rng.uniform(0.0, kTwoPi)};
                    const bases::ParabolicIndex idx{k, ratio * k, parity};
                    auto c = timed(config, [&] {
                        return verify_expansion_parabolic_from_polar(idx, p, config.m_max, tol);
                    });
                    for (const auto& [key, value] : c.parameters) {
                        if (key == "M") largest_M = std::max(largest_M, static_cast<int>(std::get<long long>(value)));
                    }
                    cases.push_back(c);
                }
                auto report = merged(name, cases, config);
                report.set("parity", parity_name(parity)).set("beta_over_k", ratio);
                report.set("M_largest", static_cast<long long>(largest_M));
                report.set("M_max", static_cast<long long>(config.m_max));
                report.set("certifies", std::string("sum over m of W W* (round trip)"));
                out.push_back(report);
            }
        }
    }
    // parabolic from Cartesian
    {
        const std::string name = "expansion_parabolic_from_cartesian";
        const double tol = config.tolerance_for(name);
        for (double ratio : kExpansionRatios) {
            for (Parity parity : kParities) {
                Rng rng(config.seed + 23);
                std::vector<VerificationReport> cases;
                for (int i = 0; i < config.random_points; ++i) {
                    const double k = rng.uniform(0.5, 2.0);
                    const double reach = std::sqrt(40.0 / k);
                    const geometry::PointParabolic p{rng.uniform(0.0, reach),
                                                     rng.uniform(-reach, reach)};
                    const bases::ParabolicIndex idx{k, ratio * k, parity};
                    cases.push_back(timed(config, [&] {
                        return verify_expansion_parabolic_from_cartesian(idx, p,
                                                                         config.jacobi_nodes, tol);
                    }));
                }
                auto report = merged(name, cases, config);
                report.set("parity", parity_name(parity)).set("beta_over_k", ratio);
                report.set("certifies", std::string("int Z Z* d alpha (round trip)"));
                out.push_back(report);
            }
        }
    }
    // inverse: polar from parabolic
    {
        const std::string name = "inverse_polar_from_parabolic";
        const double tol = config.tolerance_for(name);
        for (int m = -4; m <= 4; ++m) {
            Rng rng(config.seed + 37);
            std::vector<VerificationReport> cases;
            for (int i = 0; i < config.inverse_points; ++i) {
                const double k = rng.uniform(0.5, 2.0);
                const geometry::PointPolar p{rng.uniform(0.1, 5.0) / k, rng.uniform(0.0, kTwoPi)};
                cases.push_back(timed(config, [&] {
                    return verify_inverse_polar_from_parabolic({k, m}, p, config.b_multiplier * k,
                                                               tol);
                }));
            }
            auto report = merged(name, cases, config);
            report.set("m", static_cast<long long>(m)).set("b_multiplier", config.b_multiplier);
            report.set("certifies", std::string("completeness of the parabolic basis (round trip)"));
            out.push_back(report);
        }
    }
}

void orthogonality_suite(const SuiteConfig& config, std::vector<VerificationReport>& out) {
    {
        const std::string name = "w_orthogonality";
        const double tol = config.tolerance_for(name);
        const double k = 1.0;
        for (Parity parity : kParities) {
            std::vector<VerificationReport> cases;
            for (int m = -6; m <= 6; ++m) {
                for (int m2 = -6; m2 <= 6; ++m2) {
                    cases.push_back(timed(config, [&] {
                        return verify_w_orthogonality(k, m, m2, parity, config.b_multiplier * k,
                                                      tol);
                    }));
                }
            }
            auto report = merged(name, cases, config);
            report.set("parity", parity_name(parity)).set("k", k).set("m_abs_max", 6LL);
            report.set("B", config.b_multiplier * k);
            out.push_back(report);
        }
    }
    {
        const std::string name = "hahn_orthogonality";
        const double tol = config.tolerance_for(name);
        for (double a : {0.25, 0.75}) {
            std::vector<VerificationReport> cases;
            for (int n = 0; n <= 6; ++n) {
                for (int n2 = 0; n2 <= 6; ++n2) {
                    cases.push_back(timed(config, [&] {
                        return verify_hahn_orthogonality(n, n2, a, config.hahn_x_max, tol);
                    }));
                }
            }
            auto report = merged(name, cases, config);
            report.set("a", a).set("n_max", 6LL).set("x_max", config.hahn_x_max);
            out.push_back(report);
        }
    }
    {
        // periodic trapezoid of the actual S products against the trigonometric closed form
        const std::string name = "s_orthogonality";
        const double tol = config.tolerance_for(name);
        const int nodes = 64;
        for (Parity parity : kParities) {
            std::vector<double> errors;
            for (int m = -8; m <= 8; ++m) {
                for (int m2 = -8; m2 <= 8; ++m2) {
                    const Complex quad = quadrature::periodic_trapezoid(
                        [&](double alpha) {
                            return coeffs::s_coeff({parity, m, alpha}) *
                                   std::conj(coeffs::s_coeff({parity, m2, alpha}));
                        },
                        -kPi, kTwoPi, nodes);
                    errors.push_back(std::abs(quad - coeffs::s_overlap(parity, m, m2)));
                }
            }
            auto report = make_report(name, errors, tol);
            report.set("parity", parity_name(parity)).set("m_abs_max", 8LL);
            report.set("nodes", static_cast<long long>(nodes));
            out.push_back(report);
        }
    }
    {
        const std::string name = "mixed_parity_sum";
        const double tol = config.tolerance_for(name);
        Rng rng(config.seed + 53);
        for (Parity parity : kParities) {
            std::vector<double> errors;
            for (int i = 0; i < config.random_points; ++i) {
                const double k = rng.uniform(0.5, 2.0);
                const double beta = rng.uniform(-5.0, 5.0) * k;
                const double alpha = rng.uniform(-kPi, kPi);
                for (int M = 1; M <= 20; ++M) {
                    errors.push_back(std::abs(coeffs::mixed_parity_sum(parity, k, beta, alpha, M)));
                }
            }
            auto report = make_report(name, errors, tol);
            report.set("w_parity", parity_name(parity)).set("M_max", 20LL);
            out.push_back(report);
        }
    }
}

struct NamedBasis {
    std::string label;
    BasisIndex basis;
};

std::vector<NamedBasis> pde_bases() {
    return {
        {"plane", bases::PlaneWaveIndex{0.8, -1.1}},
        {"cartesian_even", bases::AngleIndex{1.3, 0.7, Parity::even}},
        {"cartesian_odd", bases::AngleIndex{1.3, -2.1, Parity::odd}},
        {"double_even_even", bases::DoubleParityIndex{Parity::even, Parity::even, 0.9, 0.6}},
        {"double_even_odd", bases::DoubleParityIndex{Parity::even, Parity::odd, 0.9, -0.6}},
        {"double_odd_even", bases::DoubleParityIndex{Parity::odd, Parity::even, -0.4, 1.2}},
        {"double_odd_odd", bases::DoubleParityIndex{Parity::odd, Parity::odd, 1.0, 1.0}},
        {"polar_m0", bases::PolarIndex{1.1, 0}},
        {"polar_m3", bases::PolarIndex{1.1, 3}},
        {"polar_m-2", bases::PolarIndex{0.7, -2}},
        {"parabolic_even", bases::ParabolicIndex{1.0, 1.2, Parity::even}},
        {"parabolic_odd", bases::ParabolicIndex{1.0, -0.8, Parity::odd}},
        {"miller_plus", bases::MillerIndex{1.2, 0.5, 1}},
        {"miller_minus", bases::MillerIndex{1.2, 0.5, -1}},
    };
}

struct OperatorCase {
    OperatorTag tag;
    NamedBasis basis;
};

std::vector<OperatorCase> operator_cases() {
    return {
        {OperatorTag::X_S, {"polar_m3", bases::PolarIndex{1.0, 3}}},
        {OperatorTag::X_S, {"polar_m-2", bases::PolarIndex{1.4, -2}}},
        {OperatorTag::X_S, {"polar_m1", bases::PolarIndex{0.8, 1}}},
        {OperatorTag::X_C, {"cartesian_even", bases::AngleIndex{1.2, 0.9, Parity::even}}},
        {OperatorTag::X_C, {"cartesian_odd", bases::AngleIndex{1.2, -1.9, Parity::odd}}},
        {OperatorTag::X_C, {"plane", bases::PlaneWaveIndex{0.6, 0.9}}},
        {OperatorTag::X_P, {"parabolic_even", bases::ParabolicIndex{1.0, 1.2, Parity::even}}},
        {OperatorTag::X_P, {"parabolic_odd", bases::ParabolicIndex{1.0, 1.2, Parity::odd}}},
        {OperatorTag::X_P, {"parabolic_even_b-2", bases::ParabolicIndex{0.7, -2.0, Parity::even}}},
        {OperatorTag::X_P, {"miller_plus", bases::MillerIndex{1.0, 0.6, 1}}},
        {OperatorTag::L3, {"polar_m3", bases::PolarIndex{1.0, 3}}},
        {OperatorTag::L3, {"polar_m-4", bases::PolarIndex{0.9, -4}}},
        {OperatorTag::P1, {"plane", bases::PlaneWaveIndex{0.6, 0.9}}},
        {OperatorTag::P2, {"plane", bases::PlaneWaveIndex{0.6, 0.9}}},
    };
}

PointXY interior_point(Rng& rng) {
    // stay away from the origin so no stencil crosses it
    for (;;) {
        const PointXY p{rng.uniform(-3.0, 3.0), rng.uniform(-3.0, 3.0)};
        if (std::hypot(p.x, p.y) > 0.2) {
            return p;
        }
    }
}

void operators_suite(const SuiteConfig& config, std::vector<VerificationReport>& out) {
    const int pde_points = 50;
    const double h = kStepLadder[2];
    {
        const double tol = config.tolerance_for("helmholtz_pde");
        const double ratio_tol = config.tolerance_for("refinement_ratio");
        for (const auto& nb : pde_bases()) {
            Rng rng(config.seed + 71);
            std::vector<VerificationReport> residuals;
            std::vector<VerificationReport> ratios;
            for (int i = 0; i < pde_points; ++i) {
                const PointXY p = interior_point(rng);
                residuals.push_back(timed(config, [&] { return verify_helmholtz(nb.basis, p, h, tol); }));
                ratios.push_back(timed(config, [&] {
                    return verify_refinement_ratio(std::nullopt, nb.basis, p, ratio_tol);
                }));
            }
            auto report = merged("helmholtz_pde", residuals, config);
            report.set("basis", nb.label).set("h", h);
            out.push_back(report);
            long long unresolved = 0;
            for (const auto& r : ratios) {
                for (const auto& [key, value] : r.parameters) {
                    if (key == "resolved" && !std::get<bool>(value)) ++unresolved;
                }
            }
            auto ratio_report = merged("refinement_ratio", ratios, config);
            ratio_report.set("operator", std::string("helmholtz")).set("basis", nb.label);
            ratio_report.set("h_coarse", kStepLadder[0]).set("h_fine", kStepLadder[1]);
            ratio_report.set("unresolved", unresolved);
            out.push_back(ratio_report);
        }
    }
    {
        const double tol = config.tolerance_for("operator_eigenvalue");
        const double ratio_tol = config.tolerance_for("refinement_ratio");
        for (const auto& oc : operator_cases()) {
            Rng rng(config.seed + 89);
            std::vector<VerificationReport> residuals;
            std::vector<VerificationReport> ratios;
            for (int i = 0; i < config.random_points; ++i) {
                const PointXY p = interior_point(rng);
                residuals.push_back(timed(config, [&] {
                    return verify_operator_eigenvalue(oc.tag, oc.basis.basis, p, h, tol);
                }));
                ratios.push_back(timed(config, [&] {
                    return verify_refinement_ratio(oc.tag, oc.basis.basis, p, ratio_tol);
                }));
            }
            const Complex lambda = operator_eigenvalue(oc.tag, oc.basis.basis);
            auto report = merged("operator_eigenvalue", residuals, config);
            report.set("operator", std::string(to_string(oc.tag))).set("basis", oc.basis.label);
            report.set("eigenvalue_re", lambda.real()).set("eigenvalue_im", lambda.imag());
            report.set("h", h);
            out.push_back(report);
            long long unresolved = 0;
            for (const auto& r : ratios) {
                for (const auto& [key, value] : r.parameters) {
                    if (key == "resolved" && !std::get<bool>(value)) ++unresolved;
                }
            }
            auto ratio_report = merged("refinement_ratio", ratios, config);
            ratio_report.set("operator", std::string(to_string(oc.tag))).set("basis", oc.basis.label);
            ratio_report.set("h_coarse", kStepLadder[0]).set("h_fine", kStepLadder[1]);
            ratio_report.set("unresolved", unresolved);
            out.push_back(ratio_report);
        }
    }
    {
        // bit-identical parity: the error is |f(flipped) -/+ f|, which must be exactly 0
        const std::string name = "parity_exactness";
        Rng rng(config.seed + 97);
        std::vector<double> errors;
        const auto diff = [&errors](Complex a, Complex b) { errors.push_back(std::abs(a - b)); };
        for (int i = 0; i < config.random_points * 5; ++i) {
            const double k = rng.uniform(0.3, 2.0);
            const double x = rng.uniform(-4.0, 4.0);
            const double y = rng.uniform(-4.0, 4.0);
            const double alpha = rng.uniform(-kPi, kPi);
            const double beta = rng.uniform(-4.0, 4.0);
            const double k1 = rng.uniform(-2.0, 2.0);
            const double k2 = rng.uniform(-2.0, 2.0);
            for (Parity parity : kParities) {
                const double s = parity == Parity::even ? 1.0 : -1.0;
                // Cartesian single parity: y -> -y and alpha -> -alpha
                const bases::AngleIndex ai{k, alpha, parity};
                const bases::AngleIndex ai_neg{k, -alpha, parity};
                diff(bases::psi_cartesian_parity(ai, {x, -y}),
                     s * bases::psi_cartesian_parity(ai, {x, y}));
                diff(bases::psi_cartesian_parity(ai_neg, {x, y}),
                     bases::psi_cartesian_parity(ai, {x, y}));
                // parabolic: eta -> -eta, directly and through the Cartesian chart
                const bases::ParabolicIndex pi{k, beta, parity};
                const geometry::PointParabolic pp{rng.uniform(0.0, 2.5), rng.uniform(-2.5, 2.5)};
                diff(bases::psi_parabolic(pi, {pp.xi, -pp.eta}),
                     s * bases::psi_parabolic(pi, pp));
                const PointXY q{x * 0.5, y * 0.5};
                diff(bases::evaluate(pi, {q.x, -q.y}), s * bases::evaluate(pi, q));
                // zero sets of the odd functions
                if (parity == Parity::odd) {
                    diff(bases::psi_cartesian_parity(ai, {x, 0.0}), 0.0);
                    diff(bases::psi_parabolic(pi, {pp.xi, 0.0}), 0.0);
                    diff(bases::psi_parabolic(pi, {0.0, pp.eta}), 0.0);
                }
                for (Parity py : kParities) {
                    const double sy = py == Parity::even ? 1.0 : -1.0;
                    const bases::DoubleParityIndex di{parity, py, k1, k2};
                    diff(bases::psi_cartesian_double_parity(di, {-x, y}),
                         s * bases::psi_cartesian_double_parity(di, {x, y}));
                    diff(bases::psi_cartesian_double_parity(di, {x, -y}),
                         sy * bases::psi_cartesian_double_parity(di, {x, y}));
                }
            }
            // polar: Psi_{k,-m}(r, phi) = Psi_{k,m}(r, -phi)
            const int m = rng.integer(-10, 10);
            const geometry::PointPolar pol{rng.uniform(0.1, 5.0), rng.uniform(0.0, kTwoPi)};
            diff(bases::psi_polar({k, -m}, pol), bases::psi_polar({k, m}, {pol.r, -pol.phi}));
        }
        auto report = make_report(name, errors, config.tolerance_for(name));
        report.set("comparison", std::string("bit-identical"));
        out.push_back(report);
    }
    {
        // Psi_{k1 k2} = Psi+ + i sign(k2) Psi-, with the (k, alpha) sets scaled by sqrt k
        const std::string name = "plane_wave_parity_relation";
        Rng rng(config.seed + 101);
        std::vector<double> errors;
        for (int i = 0; i < config.random_points * 5; ++i) {
            const double k1 = rng.uniform(-2.0, 2.0);
            double k2 = rng.uniform(-2.0, 2.0);
            if (k2 == 0.0) k2 = 0.5;
            const PointXY p{rng.uniform(-4.0, 4.0), rng.uniform(-4.0, 4.0)};
            const double k = std::hypot(k1, k2);
            const double alpha = std::atan2(k2, k1);
            const Complex plus = bases::psi_cartesian_parity({k, alpha, Parity::even}, p);
            const Complex minus = bases::psi_cartesian_parity({k, alpha, Parity::odd}, p);
            const Complex combined = (plus + Complex(0.0, sign(k2)) * minus) / std::sqrt(k);
            errors.push_back(std::abs(bases::psi_plane({k1, k2}, p) - combined));
        }
        auto report = make_report(name, errors, config.tolerance_for(name));
        out.push_back(report);
    }
}

void integrals_suite(const SuiteConfig& config, std::vector<VerificationReport>& out) {
    for (Parity parity : kParities) {
        out.push_back(timed(config, [&] {
            return verify_I_closed_forms(parity, 10, 10, config.tolerance_for("I_closed_forms"));
        }));
    }
    {
        const std::string name = "bailey_transformation";
        const double tol = config.tolerance_for(name);
        Rng rng(config.seed + 131);
        std::vector<VerificationReport> cases;
        for (int i = 0; i < 100; ++i) {
            const Complex a(rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0));
            const Complex a2(rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0));
            const Complex c(rng.uniform(0.1, 3.0), rng.uniform(-1.0, 1.0));
            const Complex c2(rng.uniform(0.1, 3.0), rng.uniform(-1.0, 1.0));
            const int n = rng.integer(0, 10);
            cases.push_back(timed(config, [&] { return verify_bailey(a, a2, c, c2, n, tol); }));
        }
        auto report = merged(name, cases, config);
        report.set("draws", 100LL).set("n_max", 10LL);
        out.push_back(report);
    }
    {
        const std::string name = "sine_power_integral";
        const double tol = config.tolerance_for(name);
        std::vector<VerificationReport> cases;
        for (double alpha : {0.0, 0.5, 1.0, 2.0, 3.5}) {
            for (int beta = -4; beta <= 4; ++beta) {
                cases.push_back(timed(config, [&] { return verify_sine_power(alpha, beta, tol); }));
            }
        }
        out.push_back(merged(name, cases, config));
    }
    {
        // W: three closed routes and the projection oracle
        std::vector<double> hahn_err, integral_err, projection_err, symmetry_err;
        for (double k : {1.0, 2.5}) {
            for (double ratio : kAgreementRatios) {
                for (Parity parity : kParities) {
                    for (int m = -8; m <= 8; ++m) {
                        const coeffs::WCoeffQuery q{parity, k, ratio * k, m};
                        const Complex w3 = coeffs::w_coeff_3f2(q);
                        const Complex wh = coeffs::w_coeff_hahn(q);
                        const Complex wi = coeffs::w_coeff_integral(q);
                        const Complex wp =
                            coeffs::w_projection_oracle(q, coeffs::projection_radius(k, m));
                        const double scale = 1.0 + std::abs(w3);
                        hahn_err.push_back(std::abs(w3 - wh) / scale);
                        integral_err.push_back(std::abs(w3 - wi) / scale);
                        projection_err.push_back(std::max({std::abs(w3 - wp), std::abs(wh - wp),
                                                           std::abs(wi - wp)}) /
                                                 scale);
                        for (const Complex w : {w3, wh, wi}) {
                            const double off = parity == Parity::even ? w.imag() : w.real();
                            symmetry_err.push_back(std::abs(off) / (1.0 + std::abs(w)));
                        }
                    }
                }
            }
        }
        const auto add = [&](const std::string& name, const std::vector<double>& errors) {
            auto report = make_report(name, errors, config.tolerance_for(name));
            report.set("m_abs_max", 8LL).set("beta_over_k", std::string("-5,-2,-0.5,0,0.5,2,5"));
            report.set("k", std::string("1,2.5")).set("error_scale", std::string("1+|W|"));
            out.push_back(report);
        };
        add("w_agreement_hahn", hahn_err);
        add("w_agreement_integral", integral_err);
        add("w_agreement_projection", projection_err);
        add("w_symmetry", symmetry_err);
    }
    {
        const std::string name = "kummer_exponential";
        std::vector<double> errors;
        for (double b : {0.5, 1.5, 2.25}) {
            for (int i = 0; i <= 100; ++i) {
                const double t = -50.0 + i;
                const Complex f = specfun::kummer_1f1(b, b, {0.0, t});
                errors.push_back(std::abs(f - std::polar(1.0, t)));
            }
        }
        out.push_back(make_report(name, errors, config.tolerance_for(name)));
    }
    {
        const std::string name = "bessel_recurrence";
        std::vector<double> errors;
        for (int m = 1; m <= 30; ++m) {
            for (int i = 0; i <= 99; ++i) {
                const double x = 0.5 + 0.495 * i;
                const double lhs = specfun::bessel_j(m - 1, x) + specfun::bessel_j(m + 1, x);
                errors.push_back(std::abs(lhs - 2.0 * m / x * specfun::bessel_j(m, x)));
            }
        }
        out.push_back(make_report(name, errors, config.tolerance_for(name)));
    }
    {
        const std::string name = "gamma_modulus";
        std::vector<double> errors;
        for (int i = 0; i <= 200; ++i) {
            const double x = -10.0 + 0.1 * i;
            errors.push_back(std::abs(specfun::abs_gamma_sq(0.5, x) * std::cosh(kPi * x) - kPi) /
                             kPi);
        }
        out.push_back(make_report(name, errors, config.tolerance_for(name)));
    }
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"all",           "jacobi-anger", "expansions",
                                                   "orthogonality", "operators",    "integrals"};
    return names;
}

std::vector<VerificationReport> run_suite(std::string_view suite, const SuiteConfig& config) {
    std::vector<VerificationReport> out;
    const bool all = suite == "all";
    bool known = all;
    if (all || suite == "jacobi-anger") {
        jacobi_anger_suite(config, out);
        known = true;
    }
    if (all || suite == "expansions") {
        expansions_suite(config, out);
        known = true;
    }
    if (all || suite == "orthogonality") {
        orthogonality_suite(config, out);
        known = true;
    }
    if (all || suite == "operators") {
        operators_suite(config, out);
        known = true;
    }
    if (all || suite == "integrals") {
        integrals_suite(config, out);
        known = true;
    }
    if (!known) {
        throw ConfigError("unknown suite '" + std::string(suite) + "'");
    }
    return out;
}

}  // namespace helmholtz2d::harness
