#include <cmath>
#include <string>
#include <vector>

#include "helmholtz2d/bases.hpp"
#include "helmholtz2d/coeffs.hpp"
#include "helmholtz2d/geometry.hpp"
#include "helmholtz2d/quadrature.hpp"
#include "helmholtz2d/specfun.hpp"

namespace helmholtz2d::coeffs {

namespace {

const double kInvSqrtTwoPi = 1.0 / std::sqrt(kTwoPi);

// pi^{3/2}
const double kPiThreeHalves = kPi * std::sqrt(kPi);

void validate(const WCoeffQuery& q) {
    if (!(q.k > 0.0) || !std::isfinite(q.k)) {
        throw ContractError("W coefficient: k must be positive and finite");
    }
    if (!std::isfinite(q.beta)) {
        throw ContractError("W coefficient: beta must be finite");
    }
}

}  // namespace

std::string_view to_string(Method method) {
    switch (method) {
        case Method::closed_form: return "closed_form";
        case Method::hahn: return "hahn";
        case Method::three_f_two: return "three_f_two";
        case Method::integral: return "integral";
    }
    return "unknown";
}

Method parse_method(std::string_view text) {
    if (text == "closed_form") return Method::closed_form;
    if (text == "hahn") return Method::hahn;
    if (text == "three_f_two") return Method::three_f_two;
    if (text == "integral") return Method::integral;
    throw ConfigError("unknown method '" + std::string(text) + "'");
}

Complex s_coeff(const SCoeffQuery& q) {
    if (!(q.alpha >= -kPi && q.alpha < kPi)) {
        throw ContractError("s_coeff: alpha must lie in [-pi, pi)");
    }
    const int am = std::abs(q.m);
    const double ma = static_cast<double>(q.m) * q.alpha;
    if (q.parity == Parity::even) {
        return minus_i_pow(am) * (std::cos(ma) * kInvSqrtTwoPi);
    }
    if (q.m == 0) {
        return 0.0;
    }
    return minus_i_pow(am) * (-sign(std::sin(q.alpha)) * std::sin(ma) * kInvSqrtTwoPi);
}

Complex w_coeff_3f2(const WCoeffQuery& q) {
    validate(q);
    const int am = std::abs(q.m);
    if (am > kW3F2MaxOrder) {
        throw RangeError("w_coeff_3f2: |m| = " + std::to_string(am) + " exceeds the guard " +
                         std::to_string(kW3F2MaxOrder) + " (use the hahn method)");
    }
    const double gamma = q.beta / (2.0 * q.k);
    const double root = std::sqrt(kPiThreeHalves * kPiThreeHalves * q.k);
    if (q.parity == Parity::even) {
        const specfun::Hyp3F2Params p{
            {Complex(-am, 0.0), Complex(am, 0.0), Complex(0.25, gamma)},
            {Complex(0.5, 0.0), Complex(0.5, 0.0)}};
        const double scale = specfun::abs_gamma_sq(0.25, gamma) / (2.0 * root);
        return minus_i_pow(am) * scale * specfun::hyp3f2_terminating(p);
    }
    if (q.m == 0) {
        return 0.0;
    }
    const specfun::Hyp3F2Params p{
        {Complex(1 - am, 0.0), Complex(1 + am, 0.0), Complex(0.75, gamma)},
        {Complex(1.5, 0.0), Complex(1.5, 0.0)}};
    const double scale = 2.0 * q.m * specfun::abs_gamma_sq(0.75, gamma) / root;
    return minus_i_pow(am) * scale * specfun::hyp3f2_terminating(p);
}

Complex w_coeff_hahn(const WCoeffQuery& q) {
    validate(q);
    const int am = std::abs(q.m);
    if (am > kWHahnMaxOrder) {
        throw RangeError("w_coeff_hahn: |m| = " + std::to_string(am) + " exceeds the guard " +
                         std::to_string(kWHahnMaxOrder));
    }
    if (q.parity == Parity::odd && q.m == 0) {
        return 0.0;
    }
    const double gamma = q.beta / (2.0 * q.k);
    const double a = q.parity == Parity::even ? 0.25 : 0.75;
    const int n = q.parity == Parity::even ? am : am - 1;

    // p_n(x; a,a,a,a) = i^n (2a)_n^2 / n! * p~_n(x), p~_n the normalized 3F2
    const auto normalized = specfun::hahn_normalized_sequence(gamma, a, a, a, a, n);
    const double log_poch = 2.0 * (std::lgamma(2.0 * a + n) - std::lgamma(2.0 * a));
    const double log_scale = std::lgamma(am + 1.0) - 2.0 * std::lgamma(0.5 + am) + log_poch -
                             std::lgamma(n + 1.0);
    const Complex hahn = i_pow(n) * normalized[static_cast<std::size_t>(n)];

    const double magnitude =
        std::exp(log_scale) * specfun::abs_gamma_sq(a, gamma) / (2.0 * std::sqrt(kPi * q.k));
    const Complex value = neg_one_pow(am) * magnitude * hahn;
    if (q.parity == Parity::even) {
        return value;
    }
    return Complex(0.0, static_cast<double>(sign(q.m))) * value;
}

Complex w_coeff_integral(const WCoeffQuery& q, double tolerance) {
    validate(q);
    if (q.parity == Parity::odd && q.m == 0) {
        return 0.0;
    }
    const int am = std::abs(q.m);
    const double gamma = q.beta / (2.0 * q.k);
    const double m = static_cast<double>(q.m);
    const bool even = q.parity == Parity::even;
    Complex integral;
    if (q.beta == 0.0) {
        // u = cos phi: the integrand becomes a polynomial against a Jacobi weight
        // odd integrand under u -> -u: the rule would only return rounding noise
        if ((am % 2 == 1) == even) {
            return 0.0;
        }
        quadrature::QuadratureResult res;
        if (even) {
            res = quadrature::gauss_jacobi(
                [m](double u) { return Complex(std::cos(m * std::acos(u))); }, 128, -0.75, -0.75);
        } else {
            res = quadrature::gauss_jacobi(
                [m](double u) {
                    return Complex(std::sin(m * std::acos(u)) / std::sqrt((1.0 - u) * (1.0 + u)));
                },
                128, -0.25, -0.25);
        }
        if (!(res.error_estimate <= tolerance * (1.0 + std::abs(res.value)))) {
            throw QuadratureError("w_coeff_integral: Gauss–Jacobi error estimate " +
                                  std::to_string(res.error_estimate) + " above tolerance");
        }
        integral = res.value;
    } else {
        // cos phi = tanh tau: (1+cos)^{-1/4-ig}(1-cos)^{-1/4+ig} dphi = sech^{1/2} e^{-2ig tau} dtau
        const auto g = [=](double tau) {
            const double sech = 1.0 / std::cosh(tau);
            const double phi = std::atan2(sech, std::tanh(tau));
            const double angular = even ? std::cos(m * phi) : std::sin(m * phi);
            return std::sqrt(sech) * angular * std::polar(1.0, -2.0 * gamma * tau);
        };
        const double step = std::min(0.25, 1.0 / (am + 2.0 * std::abs(gamma) + 1.0));
        integral = quadrature::tanh_map_trapezoid(g, 72.0, tolerance, step).value;
    }
    return minus_i_pow(am) * integral / (kPi * std::sqrt(2.0 * q.k));
}

double projection_radius(double k, int m) {
    const int am = std::abs(m);
    double best_x = 0.0;
    double best = 0.0;
    // 2 k r <= 48 keeps every 1F1 argument inside the default range
    for (int i = 0; i <= 470; ++i) {
        const double x = 0.5 + 0.05 * i;
        const double value = std::abs(specfun::bessel_j(am, x));
        if (value > best) {
            best = value;
            best_x = x;
        }
    }
    if (best < 0.2) {
        throw NodeError("projection_radius: no radius with |J_" + std::to_string(am) +
                        "(kr)| >= 0.2 inside the 1F1 range");
    }
    return best_x / k;
}

Complex w_projection_oracle(const WCoeffQuery& q, double r, int nodes) {
    validate(q);
    if (!(r > 0.0)) {
        throw ContractError("w_projection_oracle: r must be positive");
    }
    const int am = std::abs(q.m);
    const double bessel = specfun::bessel_j(am, q.k * r);
    if (std::abs(bessel) < 0.05) {
        throw NodeError("w_projection_oracle: |J_" + std::to_string(am) + "(kr)| = " +
                        std::to_string(std::abs(bessel)) + " < 0.05; pick another r");
    }
    const bases::ParabolicIndex idx{q.k, q.beta, q.parity};
    const double m = static_cast<double>(q.m);
    const auto integrand = [&](double phi) {
        const auto point = geometry::polar_to_parabolic({r, phi});
        return bases::psi_parabolic(idx, point) * std::polar(1.0, -m * phi);
    };
    const Complex projection = quadrature::periodic_trapezoid(integrand, 0.0, kTwoPi, nodes);
    return projection / (std::sqrt(kTwoPi * q.k) * bessel);
}

Complex z_coeff(const ZCoeffQuery& q) {
    if (!(q.k > 0.0) || !std::isfinite(q.k) || !std::isfinite(q.beta)) {
        throw ContractError("z_coeff: k must be positive and beta finite");
    }
    if (q.alpha_abs == 0.0 || q.alpha_abs == kPi) {
        throw SingularityError("z_coeff: |alpha| at an endpoint singularity");
    }
    if (!(q.alpha_abs > 0.0 && q.alpha_abs < kPi)) {
        throw ContractError("z_coeff: |alpha| must lie in (0, pi)");
    }
    const double modulus = 1.0 / (2.0 * std::sqrt(kPi * q.k * std::sin(q.alpha_abs)));
    const double phase = (q.beta / q.k) * -std::log(std::tan(0.5 * q.alpha_abs));
    return std::polar(modulus, phase);
}

bool angular_integral_in_closed_form_domain(Parity parity, int n, int j, int m) {
    const int am = std::abs(m);
    return parity == Parity::even ? n + j <= am : n + j + 1 <= am;
}

namespace {

// Laurent coefficients of (1+cos)^n (1-cos)^j {1, sin} in z = e^{i phi}; index offset = degree.
std::vector<Complex> trig_expansion(Parity parity, int n, int j) {
    const int degree = n + j + (parity == Parity::odd ? 1 : 0);
    std::vector<Complex> coeff(2 * degree + 1, 0.0);
    coeff[degree] = 1.0;
    const auto multiply = [&](Complex below, Complex centre, Complex above) {
        std::vector<Complex> next(coeff.size(), 0.0);
        for (std::size_t i = 0; i < coeff.size(); ++i) {
            if (coeff[i] == 0.0) continue;
            if (i > 0) next[i - 1] += below * coeff[i];
            next[i] += centre * coeff[i];
            if (i + 1 < coeff.size()) next[i + 1] += above * coeff[i];
        }
        coeff.swap(next);
    };
    for (int t = 0; t < n; ++t) multiply(0.5, 1.0, 0.5);
    for (int t = 0; t < j; ++t) multiply(-0.5, 1.0, -0.5);
    // sin phi = (z - 1/z) / 2i
    if (parity == Parity::odd) multiply(Complex(0.0, 0.5), 0.0, Complex(0.0, -0.5));
    return coeff;
}

}  // namespace

Complex angular_integral_I(Parity parity, int n, int j, int m) {
    if (n < 0 || j < 0) {
        throw ContractError("angular_integral_I: n and j must be nonnegative");
    }
    const int am = std::abs(m);
    if (parity == Parity::even) {
        if (n + j == am) {
            return kTwoPi * neg_one_pow(n - m) / std::exp2(am);
        }
        if (n + j < am) {
            return 0.0;
        }
    } else {
        if (n + j + 1 == am) {
            return Complex(0.0, sign(m) * kPi * neg_one_pow(n + am) * std::exp2(1 - am));
        }
        if (n + j + 1 < am) {
            return 0.0;
        }
    }
    const auto coeff = trig_expansion(parity, n, j);
    const int degree = static_cast<int>(coeff.size() / 2);
    return kTwoPi * coeff[static_cast<std::size_t>(degree + m)];
}

Complex s_overlap(Parity parity, int m, int m2) {
    // int_{-pi}^{pi} cos(m a) cos(m' a) da = pi (d(m,m') + d(m,-m')),
    // int sin sin = pi (d(m,m') - d(m,-m')); sign(sin a)^2 = 1 almost everywhere
    const double same = m == m2 ? 1.0 : 0.0;
    const double opposite = m == -m2 ? 1.0 : 0.0;
    const double trig = parity == Parity::even ? kPi * (same + opposite) : kPi * (same - opposite);
    const Complex phase = minus_i_pow(std::abs(m)) * std::conj(minus_i_pow(std::abs(m2)));
    return phase * trig / kTwoPi;
}

Complex mixed_parity_sum(Parity w_parity, double k, double beta, double alpha, int M) {
    const Parity s_parity = w_parity == Parity::even ? Parity::odd : Parity::even;
    const auto term = [&](int m) {
        return w_coeff_hahn({w_parity, k, beta, m}) * s_coeff({s_parity, m, alpha});
    };
    Complex sum = term(0);
    for (int m = 1; m <= M; ++m) {
        sum += term(m) + term(-m);
    }
    return sum;
}

Complex w_coeff(const WCoeffQuery& q, Method method) {
    switch (method) {
        case Method::closed_form:
        case Method::three_f_two: return w_coeff_3f2(q);
        case Method::hahn: return w_coeff_hahn(q);
        case Method::integral: return w_coeff_integral(q);
    }
    throw ContractError("w_coeff: unknown method");
}

}  // namespace helmholtz2d::coeffs
