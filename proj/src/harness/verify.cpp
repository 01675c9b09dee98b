#include <cmath>
#include <string>

#include "helmholtz2d/coeffs.hpp"
#include "helmholtz2d/harness.hpp"
#include "helmholtz2d/quadrature.hpp"
#include "helmholtz2d/specfun.hpp"

namespace helmholtz2d::harness {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};

std::string parity_name(Parity p) { return std::string(to_string(p)); }

}  // namespace

VerificationReport verify_jacobi_anger(double k, double r, int m, double phi, int nodes,
                                       double tolerance) {
    if (!(k > 0.0) || !(r >= 0.0) || k * r > 50.0 || std::abs(m) > 20) {
        throw RangeError("verify_jacobi_anger: requires k > 0, kr <= 50, |m| <= 20");
    }
    const double kr = k * r;
    const double md = static_cast<double>(m);
    const Complex quad = quadrature::periodic_trapezoid(
        [&](double alpha) {
            return std::polar(1.0, kr * std::cos(phi - alpha) + md * alpha);
        },
        -kPi, kTwoPi, nodes);
    const Complex closed = kTwoPi * i_pow(std::abs(m)) * specfun::bessel_j(std::abs(m), kr) *
                           std::polar(1.0, md * phi);
    auto report = make_report("jacobi_anger", {std::abs(quad - closed)}, tolerance);
    report.set("k", k).set("r", r).set("m", static_cast<long long>(m)).set("phi", phi);
    report.set("nodes", static_cast<long long>(nodes));
    return report;
}

namespace {

// alpha = pi is the same direction as -pi; the index range is half open
double wrap_pi(double alpha) { return alpha >= kPi ? -kPi : alpha; }

}  // namespace

VerificationReport verify_expansion_cartesian_from_polar(const bases::AngleIndex& idx,
                                                         const geometry::PointPolar& p, int M,
                                                         double tolerance) {
    if (M < idx.k * p.r + 20.0) {
        throw ContractError("expansion_cartesian_from_polar: M must be at least kr + 20");
    }
    const Complex lhs = bases::psi_cartesian_parity(idx, geometry::polar_to_xy(p));
    Complex sum = 0.0;
    for (int m = -M; m <= M; ++m) {
        const Complex s = coeffs::s_coeff({idx.parity, m, idx.alpha});
        sum += std::conj(s) * bases::psi_polar({idx.k, m}, p);
    }
    auto report = make_report("expansion_cartesian_from_polar", {std::abs(lhs - sum)}, tolerance);
    report.set("parity", parity_name(idx.parity)).set("k", idx.k).set("alpha", idx.alpha);
    report.set("r", p.r).set("phi", p.phi).set("M", static_cast<long long>(M));
    return report;
}

VerificationReport verify_expansion_parabolic_from_polar(const bases::ParabolicIndex& idx,
                                                         const geometry::PointPolar& p,
                                                         int m_max, double tolerance) {
    const Complex lhs = bases::psi_parabolic(idx, geometry::polar_to_parabolic(p));
    const double kr = idx.k * p.r;
    const auto term = [&](int m) {
        return coeffs::w_coeff_hahn({idx.parity, idx.k, idx.beta, m}) *
               bases::psi_polar({idx.k, m}, p);
    };
    Complex sum = term(0);
    int small_run = 0;
    double tail = 0.0;
    int truncation = -1;
    for (int m = 1; m <= m_max; ++m) {
        const Complex pair = term(m) + term(-m);
        sum += pair;
        const double size = std::abs(term(m)) + std::abs(term(-m));
        if (size < 1e-12) {
            ++small_run;
            tail += size;
        } else {
            small_run = 0;
            tail = 0.0;
        }
        if (small_run >= 3 && m >= kr) {
            truncation = m;
            break;
        }
    }
    if (truncation < 0) {
        throw ConvergenceError("expansion_parabolic_from_polar: tail monitor did not stop by m = " +
                               std::to_string(m_max));
    }
    auto report = make_report("expansion_parabolic_from_polar", {std::abs(lhs - sum)}, tolerance);
    report.set("parity", parity_name(idx.parity)).set("k", idx.k).set("beta", idx.beta);
    report.set("r", p.r).set("phi", p.phi).set("M", static_cast<long long>(truncation));
    report.set("tail_bound", tail);
    return report;
}

std::pair<double, double> z_expansion_jacobi_exponents(Parity parity) {
    // Z ~ sin^{-1/2} alpha = (1 - u^2)^{-1/4}
    const double from_z = -0.25;
    // d alpha = du / (1 - u^2)^{1/2}
    const double from_jacobian = -0.5;
    // sin(k sin alpha y) = sin alpha * entire function of u
    const double from_parity = parity == Parity::odd ? 0.5 : 0.0;
    const double e = from_z + from_jacobian + from_parity;
    if (!(e > -1.0)) {
        throw ContractError("z expansion: Jacobi exponent does not exceed -1");
    }
    return {e, e};
}

VerificationReport verify_expansion_parabolic_from_cartesian(const bases::ParabolicIndex& idx,
                                                             const geometry::PointParabolic& p,
                                                             int jacobi_nodes, double tolerance) {
    const Complex lhs = bases::psi_parabolic(idx, p);
    const geometry::PointXY xy = geometry::parabolic_to_xy(p);
    const double k = idx.k;
    const double scale = 1.0 / std::sqrt(kPi * k);
    Complex rhs;
    double estimate = 0.0;
    std::string rule;
    if (idx.beta == 0.0) {
        const auto [ea, eb] = z_expansion_jacobi_exponents(idx.parity);
        const bool odd = idx.parity == Parity::odd;
        const auto f = [&](double u) {
            const double alpha = std::acos(u);
            const Complex psi = bases::psi_cartesian_parity({k, wrap_pi(alpha), idx.parity}, xy);
            return odd ? psi * (scale / std::sqrt((1.0 - u) * (1.0 + u))) : psi * scale;
        };
        const auto res = quadrature::gauss_jacobi(f, jacobi_nodes, ea, eb);
        rhs = res.value;
        estimate = res.error_estimate;
        rule = "gauss_jacobi";
    } else {
        // cot(alpha/2) = e^tau: sin alpha = sech tau, d alpha = sech tau d tau
        const auto g = [&](double tau) {
            const double sech = 1.0 / std::cosh(tau);
            const double alpha = std::atan2(sech, std::tanh(tau));
            const Complex psi = bases::psi_cartesian_parity({k, wrap_pi(alpha), idx.parity}, xy);
            return (scale * std::sqrt(sech)) * std::polar(1.0, idx.beta * tau / k) * psi;
        };
        const auto res = quadrature::tanh_map_trapezoid(g, 72.0, 1e-11, 0.125);
        rhs = res.value;
        estimate = res.error_estimate;
        rule = "tanh_map_trapezoid";
    }
    if (estimate > tolerance) {
        throw QuadratureError("expansion_parabolic_from_cartesian: quadrature estimate " +
                              std::to_string(estimate) + " above tolerance");
    }
    auto report =
        make_report("expansion_parabolic_from_cartesian", {std::abs(lhs - rhs)}, tolerance);
    report.set("parity", parity_name(idx.parity)).set("k", k).set("beta", idx.beta);
    report.set("xi", p.xi).set("eta", p.eta).set("rule", rule).set("quadrature_estimate", estimate);
    return report;
}

VerificationReport verify_inverse_polar_from_parabolic(const bases::PolarIndex& idx,
                                                       const geometry::PointPolar& p, double B,
                                                       double tolerance) {
    const Complex lhs = bases::psi_polar(idx, p);
    const geometry::PointParabolic point = geometry::polar_to_parabolic(p);
    const double k = idx.k;
    const auto integrand = [&](double beta) {
        const Complex even = std::conj(coeffs::w_coeff_hahn({Parity::even, k, beta, idx.m})) *
                             bases::psi_parabolic({k, beta, Parity::even}, point);
        if (idx.m == 0) {
            return even;
        }
        const Complex odd = std::conj(coeffs::w_coeff_hahn({Parity::odd, k, beta, idx.m})) *
                            bases::psi_parabolic({k, beta, Parity::odd}, point);
        return even + odd;
    };
    const auto res =
        quadrature::adaptive_simpson(integrand, -B, B, 1e-3 * tolerance, 0.25 * kPi * k);
    // integrand decays like e^{-pi |beta| / 2k}; bound the neglected tails by the edge values
    const double edge = std::max(std::abs(integrand(B)), std::abs(integrand(-B)));
    const double tail = 2.0 * edge * (2.0 * k / kPi);
    if (tail > tolerance) {
        throw ConvergenceError("inverse_polar_from_parabolic: tail estimate " +
                               std::to_string(tail) + " above tolerance; increase B");
    }
    auto report =
        make_report("inverse_polar_from_parabolic", {std::abs(lhs - res.value)}, tolerance);
    report.set("k", k).set("m", static_cast<long long>(idx.m)).set("r", p.r).set("phi", p.phi);
    report.set("B", B).set("tail_bound", tail).set("quadrature_estimate", res.error_estimate);
    return report;
}

double w_orthogonality_expected(Parity parity, int m, int m2) {
    if (parity == Parity::even) {
        return 0.5 * ((m == m2 ? 1.0 : 0.0) + (m == -m2 ? 1.0 : 0.0));
    }
    return std::abs(m) == std::abs(m2) ? 0.5 * sign(m * m2) : 0.0;
}

double w_orthogonality_literal(Parity parity, int m, int m2) {
    if (parity == Parity::even) {
        return std::abs(m) == std::abs(m2) ? 0.5 : 0.0;
    }
    return w_orthogonality_expected(parity, m, m2);
}

VerificationReport verify_w_orthogonality(double k, int m, int m2, Parity parity, double B,
                                          double tolerance) {
    const auto integrand = [&](double beta) {
        return coeffs::w_coeff_hahn({parity, k, beta, m}) *
               std::conj(coeffs::w_coeff_hahn({parity, k, beta, m2}));
    };
    const auto res =
        quadrature::adaptive_simpson(integrand, -B, B, 1e-3 * tolerance, 0.25 * kPi * k);
    const double expected = w_orthogonality_expected(parity, m, m2);
    // |W|^2 ~ e^{-pi |beta|/k}; tail beyond B bounded by the edge value times k/pi
    const double edge = std::max(std::abs(integrand(B)), std::abs(integrand(-B)));
    const double tail = 2.0 * edge * k / kPi;
    auto report = make_report("w_orthogonality", {std::abs(res.value - expected)}, tolerance);
    report.set("parity", parity_name(parity)).set("k", k);
    report.set("m", static_cast<long long>(m)).set("m2", static_cast<long long>(m2));
    report.set("integral_re", res.value.real()).set("integral_im", res.value.imag());
    report.set("expected", expected).set("B", B).set("tail_bound", tail);
    return report;
}

double hahn_norm(int n, double a) {
    const double s = 4.0 * a;
    const double g = std::tgamma(n + 2.0 * a);
    const double numerator = kTwoPi * g * g * g * g;
    if (n == 0) {
        // (s-1) Gamma(s-1) -> Gamma(s)
        return numerator / std::tgamma(s);
    }
    return numerator / ((2.0 * n + s - 1.0) * std::tgamma(n + s - 1.0) * std::tgamma(n + 1.0));
}

VerificationReport verify_hahn_orthogonality(int n, int n2, double a, double x_max,
                                             double tolerance) {
    if (n < 0 || n2 < 0) {
        throw ContractError("hahn_orthogonality: degrees must be nonnegative");
    }
    const auto integrand = [&](double x) {
        const double w = specfun::abs_gamma_sq(a, x);
        const Complex pn = specfun::continuous_hahn({n, x, a, a, a, a});
        const Complex pm = specfun::continuous_hahn({n2, x, a, a, a, a});
        return (w * w) * pn * std::conj(pm);
    };
    const double norm_n = hahn_norm(n, a);
    const double norm_m = hahn_norm(n2, a);
    const double scale = std::sqrt(norm_n * norm_m);
    const auto res = quadrature::adaptive_simpson(integrand, -x_max, x_max, 1e-3 * tolerance * scale,
                                                  1.0);
    const double expected = n == n2 ? norm_n : 0.0;
    const double error = std::abs(res.value - expected) / scale;
    auto report = make_report("hahn_orthogonality", {error}, tolerance);
    report.set("n", static_cast<long long>(n)).set("n2", static_cast<long long>(n2)).set("a", a);
    report.set("integral", res.value.real()).set("norm", expected).set("x_max", x_max);
    return report;
}

std::string_view to_string(OperatorTag tag) {
    switch (tag) {
        case OperatorTag::X_S: return "X_S";
        case OperatorTag::X_C: return "X_C";
        case OperatorTag::X_P: return "X_P";
        case OperatorTag::L3: return "L3";
        case OperatorTag::P1: return "P1";
        case OperatorTag::P2: return "P2";
    }
    return "unknown";
}

Complex operator_eigenvalue(OperatorTag tag, const bases::BasisIndex& basis) {
    const auto bad = [tag]() -> Complex {
        throw ContractError("operator " + std::string(to_string(tag)) +
                            " has no stated eigenvalue on this basis");
    };
    return std::visit(
        overloaded{
            [&](const bases::PlaneWaveIndex& i) -> Complex {
                if (tag == OperatorTag::P1) return {0.0, i.k1};
                if (tag == OperatorTag::P2) return {0.0, i.k2};
                if (tag == OperatorTag::X_C) return -i.k2 * i.k2;
                return bad();
            },
            [&](const bases::AngleIndex& i) -> Complex {
                if (tag == OperatorTag::X_C) {
                    const double s = i.k * std::sin(i.alpha);
                    return -s * s;
                }
                return bad();
            },
            [&](const bases::DoubleParityIndex& i) -> Complex {
                if (tag == OperatorTag::X_C) return -i.k2 * i.k2;
                return bad();
            },
            [&](const bases::PolarIndex& i) -> Complex {
                if (tag == OperatorTag::X_S) return -static_cast<double>(i.m) * i.m;
                if (tag == OperatorTag::L3) return {0.0, static_cast<double>(i.m)};
                return bad();
            },
            [&](const bases::ParabolicIndex& i) -> Complex {
                if (tag == OperatorTag::X_P) return 2.0 * i.beta;
                return bad();
            },
            [&](const bases::MillerIndex& i) -> Complex {
                if (tag == OperatorTag::X_P) return 2.0 * i.beta;
                return bad();
            },
        },
        basis);
}

namespace {

struct Stencil {
    Complex f, fx, fy, fxx, fyy, fxy;
};

Stencil stencil(const bases::BasisIndex& basis, const geometry::PointXY& p, double h) {
    const auto f = [&](double dx, double dy) {
        return bases::evaluate(basis, {p.x + dx, p.y + dy});
    };
    Stencil s;
    s.f = f(0.0, 0.0);
    const Complex xp = f(h, 0.0), xm = f(-h, 0.0), yp = f(0.0, h), ym = f(0.0, -h);
    s.fx = (xp - xm) / (2.0 * h);
    s.fy = (yp - ym) / (2.0 * h);
    s.fxx = (xp - 2.0 * s.f + xm) / (h * h);
    s.fyy = (yp - 2.0 * s.f + ym) / (h * h);
    s.fxy = (f(h, h) - f(h, -h) - f(-h, h) + f(-h, -h)) / (4.0 * h * h);
    return s;
}

Complex apply_operator(OperatorTag tag, const Stencil& s, const geometry::PointXY& p) {
    const double x = p.x, y = p.y;
    switch (tag) {
        case OperatorTag::X_S:
            return x * x * s.fyy - 2.0 * x * y * s.fxy + y * y * s.fxx - x * s.fx - y * s.fy;
        case OperatorTag::X_C: return s.fyy;
        case OperatorTag::X_P: return 2.0 * x * s.fyy - 2.0 * y * s.fxy - s.fx;
        case OperatorTag::L3: return x * s.fy - y * s.fx;
        case OperatorTag::P1: return s.fx;
        case OperatorTag::P2: return s.fy;
    }
    return 0.0;
}

// residual of the operator relation (tag) or of the Helmholtz equation (no tag)
double residual(std::optional<OperatorTag> tag, const bases::BasisIndex& basis,
                const geometry::PointXY& p, double h) {
    const Stencil s = stencil(basis, p, h);
    if (tag) {
        const Complex lambda = operator_eigenvalue(*tag, basis);
        return std::abs(apply_operator(*tag, s, p) - lambda * s.f);
    }
    const double k = bases::wavenumber(basis);
    return std::abs(s.fxx + s.fyy + k * k * s.f);
}

// rounding floor of a second difference at step h
double noise_floor(const bases::BasisIndex& basis, const geometry::PointXY& p, double h) {
    const double size = std::abs(bases::evaluate(basis, p)) + 1e-3;
    const double lever = 1.0 + std::abs(p.x) * std::abs(p.x) + std::abs(p.y) * std::abs(p.y);
    return 1e-12 * size * lever / (h * h) + 1e-12;
}

}  // namespace

VerificationReport verify_operator_eigenvalue(OperatorTag tag, const bases::BasisIndex& basis,
                                              const geometry::PointXY& p, double h,
                                              double tolerance) {
    const double r = residual(tag, basis, p, h);
    auto report = make_report("operator_eigenvalue", {r}, tolerance);
    report.set("operator", std::string(to_string(tag))).set("x", p.x).set("y", p.y).set("h", h);
    const double r1 = residual(tag, basis, p, kStepLadder[0]);
    const double r2 = residual(tag, basis, p, kStepLadder[1]);
    report.set("refinement_ratio", r2 > 0.0 ? r1 / r2 : 0.0);
    return report;
}

VerificationReport verify_helmholtz(const bases::BasisIndex& basis, const geometry::PointXY& p,
                                    double h, double tolerance) {
    const double r = residual(std::nullopt, basis, p, h);
    auto report = make_report("helmholtz_pde", {r}, tolerance);
    report.set("x", p.x).set("y", p.y).set("h", h);
    const double r1 = residual(std::nullopt, basis, p, kStepLadder[0]);
    const double r2 = residual(std::nullopt, basis, p, kStepLadder[1]);
    report.set("refinement_ratio", r2 > 0.0 ? r1 / r2 : 0.0);
    return report;
}

VerificationReport verify_refinement_ratio(std::optional<OperatorTag> tag,
                                           const bases::BasisIndex& basis,
                                           const geometry::PointXY& p, double tolerance) {
    const double r1 = residual(tag, basis, p, kStepLadder[0]);
    const double r2 = residual(tag, basis, p, kStepLadder[1]);
    const bool resolved = r2 > noise_floor(basis, p, kStepLadder[1]);
    const double ratio = r2 > 0.0 ? r1 / r2 : 0.0;
    auto report = make_report("refinement_ratio", {resolved ? std::abs(ratio - 4.0) : 0.0},
                              tolerance);
    report.set("operator", tag ? std::string(to_string(*tag)) : std::string("helmholtz"));
    report.set("x", p.x).set("y", p.y).set("ratio", ratio).set("resolved", resolved);
    return report;
}

VerificationReport verify_I_closed_forms(Parity parity, int max_nj, int max_m,
                                         double tolerance) {
    const int nodes = std::max(64, 2 * (max_nj + max_m + 2));
    std::vector<double> errors;
    long long closed = 0;
    long long zeros = 0;
    for (int n = 0; n <= max_nj; ++n) {
        for (int j = 0; n + j <= max_nj; ++j) {
            for (int m = -max_m; m <= max_m; ++m) {
                const auto f = [&](double phi) {
                    const double c = std::cos(phi);
                    double base = std::pow(1.0 + c, n) * std::pow(1.0 - c, j);
                    if (parity == Parity::odd) base *= std::sin(phi);
                    return std::polar(base, -m * phi);
                };
                const Complex oracle = quadrature::periodic_trapezoid(f, 0.0, kTwoPi, nodes);
                const Complex value = coeffs::angular_integral_I(parity, n, j, m);
                errors.push_back(std::abs(oracle - value));
                if (coeffs::angular_integral_in_closed_form_domain(parity, n, j, m)) {
                    ++closed;
                    if (value == 0.0) ++zeros;
                }
            }
        }
    }
    auto report = make_report("I_closed_forms", errors, tolerance);
    report.set("parity", parity_name(parity)).set("max_nj", static_cast<long long>(max_nj));
    report.set("max_m", static_cast<long long>(max_m)).set("closed_form_cases", closed);
    report.set("mandated_zeros", zeros).set("nodes", static_cast<long long>(nodes));
    return report;
}

VerificationReport verify_bailey(Complex a, Complex a2, Complex c, Complex c2, int n,
                                 double tolerance) {
    const Complex mn(-n, 0.0);
    const specfun::Hyp3F2Params left{{a, a2, mn}, {c2, 1.0 - static_cast<double>(n) - c}};
    const specfun::Hyp3F2Params right{{a, c2 - a2, mn}, {c2, c + a}};
    const Complex lhs = specfun::hyp3f2_terminating(left);
    const Complex ratio = specfun::pochhammer(c + a, n) / specfun::pochhammer(c, n);
    const Complex rhs = ratio * specfun::hyp3f2_terminating(right);
    auto report = make_report("bailey_transformation", {std::abs(lhs - rhs) / (1.0 + std::abs(lhs))},
                              tolerance);
    report.set("n", static_cast<long long>(n));
    return report;
}

VerificationReport verify_sine_power(double alpha, double beta, double tolerance) {
    // phi = pi (1 + s)/2; sin^alpha phi = (phi (pi - phi))^alpha h(phi)^alpha with h smooth
    const double quarter = 0.25 * kPi * kPi;
    const auto f = [&](double s) {
        const double phi = 0.5 * kPi * (1.0 + s);
        const double product = phi * (kPi - phi);
        const double h = product > 0.0 ? std::sin(phi) / product : 1.0 / kPi;
        return std::polar(0.5 * kPi * std::pow(quarter, alpha) * std::pow(h, alpha), beta * phi);
    };
    const auto res = quadrature::gauss_jacobi(f, 64, alpha, alpha);
    const Complex closed = specfun::sine_power_integral(alpha, beta);
    auto report = make_report("sine_power_integral", {std::abs(closed - res.value)}, tolerance);
    report.set("alpha", alpha).set("beta", beta).set("quadrature_estimate", res.error_estimate);
    return report;
}

}  // namespace helmholtz2d::harness
