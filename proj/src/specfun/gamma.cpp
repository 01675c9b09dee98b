#include <cmath>
#include <string>

#include "helmholtz2d/specfun.hpp"

namespace helmholtz2d::specfun {

namespace {

// Lanczos approximation with g = 607/128 and 15 terms (Godfrey).
constexpr double kLanczosG = 607.0 / 128.0;
constexpr double kLanczosCoeff[15] = {
    0.99999999999999709182,     57.156235665862923517,     -59.597960355475491248,
    14.136097974741747174,      -0.49191381609762019978,   .33994649984811888699e-4,
    .46523628927048575665e-4,   -.98374475304879564677e-4, .15808870322491248884e-3,
    -.21026444172410488319e-3,  .21743961811521264320e-3,  -.16431810653676389022e-3,
    .84418223983852743293e-4,   -.26190838401581408670e-4, .36899182659531622704e-5,
};

constexpr double kHalfLogTwoPi = 0.91893853320467274178032973640562;

bool is_nonpositive_integer(double x) { return x <= 0.0 && x == std::floor(x); }

// Valid for Re z >= 1/2.
Complex lanczos_ln_gamma(Complex z) {
    Complex series = kLanczosCoeff[0];
    for (int k = 1; k < 15; ++k) {
        series += kLanczosCoeff[k] / (z + static_cast<double>(k));
    }
    const Complex t = z + (kLanczosG + 0.5);
    return (z + 0.5) * std::log(t) - t + kHalfLogTwoPi + std::log(series) - std::log(z);
}

}  // namespace

Complex ln_gamma(Complex z) {
    if (z.imag() == 0.0 && is_nonpositive_integer(z.real())) {
        throw PoleError("ln_gamma: pole at z = " + std::to_string(z.real()));
    }
    if (z.real() >= 0.5) {
        return lanczos_ln_gamma(z);
    }
    // Shift into the right half-plane; ln Gamma(z+1) = ln Gamma(z) + log z
    // holds exactly on the principal branch.
    const int shift = static_cast<int>(std::ceil(0.5 - z.real()));
    Complex correction = 0.0;
    for (int j = 0; j < shift; ++j) {
        correction += std::log(z + static_cast<double>(j));
    }
    return lanczos_ln_gamma(z + static_cast<double>(shift)) - correction;
}

double abs_gamma_sq(double a, double x) {
    return std::exp(2.0 * ln_gamma(Complex(a, x)).real());
}

double recip_gamma(double x) {
    if (is_nonpositive_integer(x)) {
        return 0.0;
    }
    return 1.0 / std::tgamma(x);
}

Complex pochhammer(Complex a, int n) {
    Complex product = 1.0;
    for (int j = 0; j < n; ++j) {
        product *= a + static_cast<double>(j);
    }
    return product;
}

double pochhammer(double a, int n) {
    double product = 1.0;
    for (int j = 0; j < n; ++j) {
        product *= a + j;
    }
    return product;
}

Complex sine_power_integral(double alpha, double beta) {
    if (!(alpha > -1.0)) {
        throw RangeError("sine_power_integral: alpha must exceed -1");
    }
    // e^{i pi beta / 2}; integer beta goes through the quadrant table.
    Complex phase;
    if (beta == std::round(beta) && std::abs(beta) < 1e9) {
        phase = i_pow(static_cast<int>(beta));
    } else {
        phase = std::polar(1.0, 0.5 * kPi * beta);
    }
    const double magnitude = kPi / std::exp2(alpha) * std::tgamma(1.0 + alpha) *
                             recip_gamma(1.0 + 0.5 * (alpha + beta)) *
                             recip_gamma(1.0 + 0.5 * (alpha - beta));
    return magnitude * phase;
}

}  // namespace helmholtz2d::specfun
