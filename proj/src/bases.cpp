#include "helmholtz2d/bases.hpp"

#include <cmath>
#include <string>

#include "helmholtz2d/errors.hpp"
#include "helmholtz2d/specfun.hpp"

namespace helmholtz2d::bases {

namespace {

void require_positive_k(double k, const char* what) {
    if (!(k > 0.0) || !std::isfinite(k)) {
        throw ContractError(std::string(what) + ": k must be positive and finite");
    }
}

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};

}  // namespace

void validate(const PlaneWaveIndex& idx) {
    if (!std::isfinite(idx.k1) || !std::isfinite(idx.k2) || (idx.k1 == 0.0 && idx.k2 == 0.0)) {
        throw ContractError("plane wave: (k1, k2) must be finite and nonzero");
    }
}

void validate(const AngleIndex& idx) {
    require_positive_k(idx.k, "cartesian");
    if (!(idx.alpha >= -kPi && idx.alpha < kPi)) {
        throw ContractError("cartesian: alpha must lie in [-pi, pi)");
    }
}

void validate(const PolarIndex& idx) { require_positive_k(idx.k, "polar"); }

void validate(const ParabolicIndex& idx) {
    require_positive_k(idx.k, "parabolic");
    if (!std::isfinite(idx.beta)) {
        throw ContractError("parabolic: beta must be finite");
    }
}

Complex psi_plane(const PlaneWaveIndex& idx, const PointXY& p) {
    validate(idx);
    return std::polar(1.0 / kTwoPi, idx.k1 * p.x + idx.k2 * p.y);
}

Complex psi_cartesian_parity(const AngleIndex& idx, const PointXY& p) {
    validate(idx);
    const double a = std::abs(idx.alpha);
    const double ky = idx.k * std::sin(a) * std::abs(p.y);
    const Complex wave = std::polar(std::sqrt(idx.k) / kTwoPi, idx.k * p.x * std::cos(a));
    if (idx.parity == Parity::even) {
        return wave * std::cos(ky);
    }
    if (p.y == 0.0) {
        return 0.0;
    }
    return wave * (sign(p.y) * std::sin(ky));
}

double psi_cartesian_double_parity(const DoubleParityIndex& idx, const PointXY& p) {
    const double ax = std::abs(idx.k1) * std::abs(p.x);
    const double ay = std::abs(idx.k2) * std::abs(p.y);
    const double fx = idx.parity_x == Parity::even ? std::cos(ax) : sign(p.x) * std::sin(ax);
    const double fy = idx.parity_y == Parity::even ? std::cos(ay) : sign(p.y) * std::sin(ay);
    return fx * fy / (2.0 * std::sqrt(kPi)) + 0.0;
}

Complex psi_polar(const PolarIndex& idx, const PointPolar& p) {
    validate(idx);
    if (!(p.r >= 0.0)) {
        throw ContractError("polar: r must be nonnegative");
    }
    const int order = std::abs(idx.m);
    const double radial = std::sqrt(idx.k) * specfun::bessel_j(order, idx.k * p.r) /
                          std::sqrt(kTwoPi);
    // e^{im phi} with the angle reduced first so large m does not lose phase digits
    const double angle = std::remainder(static_cast<double>(idx.m) * p.phi, kTwoPi);
    return radial * std::polar(1.0, angle);
}

double parabolic_norm_constant(const ParabolicIndex& idx) {
    validate(idx);
    const double gamma = idx.beta / (2.0 * idx.k);
    if (idx.parity == Parity::even) {
        return specfun::abs_gamma_sq(0.25, gamma) / (2.0 * std::numbers::sqrt2 * kPi * kPi);
    }
    return std::numbers::sqrt2 * idx.k * specfun::abs_gamma_sq(0.75, gamma) / (kPi * kPi);
}

Complex psi_parabolic(const ParabolicIndex& idx, const PointParabolic& p) {
    validate(idx);
    if (!(p.xi >= 0.0)) {
        throw ContractError("parabolic: xi must be nonnegative");
    }
    const double k = idx.k;
    const double gamma = idx.beta / (2.0 * k);
    const double xi2 = p.xi * p.xi;
    const double eta2 = p.eta * p.eta;
    const double constant = parabolic_norm_constant(idx);
    if (idx.parity == Parity::odd && (p.xi == 0.0 || p.eta == 0.0)) {
        // still enforce the 1F1 range so the zero set does not widen the support
        if (k * std::max(xi2, eta2) > specfun::kKummerMaxArgument) {
            throw RangeError("parabolic: k max(xi^2, eta^2) exceeds the 1F1 range");
        }
        return 0.0;
    }
    const Complex phase = std::polar(1.0, -0.5 * k * (xi2 + eta2));
    if (idx.parity == Parity::even) {
        const Complex f1 = specfun::kummer_1f1({0.25, gamma}, 0.5, {0.0, k * xi2});
        const Complex f2 = specfun::kummer_1f1({0.25, -gamma}, 0.5, {0.0, k * eta2});
        return constant * phase * f1 * f2;
    }
    const Complex f1 = specfun::kummer_1f1({0.75, gamma}, 1.5, {0.0, k * xi2});
    const Complex f2 = specfun::kummer_1f1({0.75, -gamma}, 1.5, {0.0, k * eta2});
    const double prefactor = constant * p.xi * std::abs(p.eta) * sign(p.eta);
    return prefactor * phase * f1 * f2;
}

Complex psi_miller(const MillerIndex& idx, const PointParabolic& p) {
    if (idx.sign != 1 && idx.sign != -1) {
        throw ContractError("miller: sign must be +1 or -1");
    }
    const Complex even = psi_parabolic({idx.k, idx.beta, Parity::even}, p);
    const Complex odd = psi_parabolic({idx.k, idx.beta, Parity::odd}, p);
    const double scale = kPi * std::numbers::sqrt2;
    return scale * (even + Complex(0.0, static_cast<double>(idx.sign)) * odd);
}

Complex evaluate(const BasisIndex& idx, const PointXY& p) {
    const auto parabolic = [&p]() {
        if (p.x == 0.0 && p.y == 0.0) {
            return PointParabolic{0.0, 0.0};
        }
        return geometry::xy_to_parabolic(p);
    };
    return std::visit(
        overloaded{
            [&](const PlaneWaveIndex& i) { return psi_plane(i, p); },
            [&](const AngleIndex& i) { return psi_cartesian_parity(i, p); },
            [&](const DoubleParityIndex& i) { return Complex(psi_cartesian_double_parity(i, p)); },
            [&](const PolarIndex& i) {
                if (p.x == 0.0 && p.y == 0.0) {
                    return psi_polar(i, PointPolar{0.0, 0.0});
                }
                return psi_polar(i, geometry::xy_to_polar(p));
            },
            [&](const ParabolicIndex& i) { return psi_parabolic(i, parabolic()); },
            [&](const MillerIndex& i) { return psi_miller(i, parabolic()); },
        },
        idx);
}

double wavenumber(const BasisIndex& idx) {
    return std::visit(
        overloaded{
            [](const PlaneWaveIndex& i) { return std::hypot(i.k1, i.k2); },
            [](const AngleIndex& i) { return i.k; },
            [](const DoubleParityIndex& i) { return std::hypot(i.k1, i.k2); },
            [](const PolarIndex& i) { return i.k; },
            [](const ParabolicIndex& i) { return i.k; },
            [](const MillerIndex& i) { return i.k; },
        },
        idx);
}

}  // namespace helmholtz2d::bases
