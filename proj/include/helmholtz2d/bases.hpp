#pragma once

// Normalized solutions of the 2D Helmholtz equation in the Cartesian,
// polar and parabolic separable systems.

#include <variant>

#include "helmholtz2d/geometry.hpp"
#include "helmholtz2d/types.hpp"

namespace helmholtz2d::bases {

using geometry::PointParabolic;
using geometry::PointPolar;
using geometry::PointXY;

/// Plane wave e^{i(k1 x + k2 y)} / 2pi.
struct PlaneWaveIndex {
    double k1 = 1.0;
    double k2 = 0.0;
};

/// Single-parity Cartesian set labelled by k and the direction angle alpha in [-pi, pi).
struct AngleIndex {
    double k = 1.0;
    double alpha = 0.0;
    Parity parity = Parity::even;
};

/// Double-parity Cartesian set; parity_x selects cos/sin in x, parity_y in y.
struct DoubleParityIndex {
    Parity parity_x = Parity::even;
    Parity parity_y = Parity::even;
    double k1 = 1.0;
    double k2 = 1.0;
};

struct PolarIndex {
    double k = 1.0;
    int m = 0;
};

struct ParabolicIndex {
    double k = 1.0;
    double beta = 0.0;
    Parity parity = Parity::even;
};

/// Miller's parabolic functions pi sqrt2 (Psi+ +- i Psi-); sign is +1 or -1.
struct MillerIndex {
    double k = 1.0;
    double beta = 0.0;
    int sign = 1;
};

void validate(const PlaneWaveIndex& idx);
void validate(const AngleIndex& idx);
void validate(const PolarIndex& idx);
void validate(const ParabolicIndex& idx);

Complex psi_plane(const PlaneWaveIndex& idx, const PointXY& p);

/// (sqrt k / 2pi) e^{ikx cos|alpha|} {cos, sin}(k sin|alpha| y).
Complex psi_cartesian_parity(const AngleIndex& idx, const PointXY& p);

/// (1 / 2 sqrt pi) {cos, sin}(|k1| x) {cos, sin}(|k2| y).
double psi_cartesian_double_parity(const DoubleParityIndex& idx, const PointXY& p);

/// sqrt k J_|m|(kr) e^{im phi} / sqrt(2 pi). r = 0 is allowed.
Complex psi_polar(const PolarIndex& idx, const PointPolar& p);

/// C+ = |Gamma(1/4 + i beta/2k)|^2 / (2 sqrt2 pi^2), C- = sqrt2 k |Gamma(3/4 + i beta/2k)|^2 / pi^2.
double parabolic_norm_constant(const ParabolicIndex& idx);

/// Even: C+ e^{-ik(xi^2+eta^2)/2} 1F1(1/4+i gamma; 1/2; ik xi^2) 1F1(1/4-i gamma; 1/2; ik eta^2)
/// Odd:  C- xi eta e^{...} 1F1(3/4+i gamma; 3/2; ik xi^2) 1F1(3/4-i gamma; 3/2; ik eta^2)
/// with gamma = beta/2k. Requires k max(xi^2, eta^2) <= 50.
Complex psi_parabolic(const ParabolicIndex& idx, const PointParabolic& p);

Complex psi_miller(const MillerIndex& idx, const PointParabolic& p);

using BasisIndex = std::variant<PlaneWaveIndex, AngleIndex, DoubleParityIndex, PolarIndex,
                                ParabolicIndex, MillerIndex>;

/// Evaluate any basis function at a Cartesian point (charts mapped through geometry).
Complex evaluate(const BasisIndex& idx, const PointXY& p);

/// Wavenumber k of the basis function.
double wavenumber(const BasisIndex& idx);

}  // namespace helmholtz2d::bases
