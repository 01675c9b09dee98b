#pragma once

// Cartesian, polar and parabolic charts of the plane.
//   x = r cos phi, y = r sin phi
//   x = (xi^2 - eta^2)/2, y = xi eta, xi >= 0

#include <utility>

#include "helmholtz2d/errors.hpp"
#include "helmholtz2d/types.hpp"

namespace helmholtz2d::geometry {

struct PointXY {
    double x = 0.0;
    double y = 0.0;
};

struct PointPolar {
    double r = 1.0;
    double phi = 0.0;
};

struct PointParabolic {
    double xi = 0.0;
    double eta = 0.0;
};

/// Reduce an angle into [0, 2 pi).
double normalize_angle(double phi);

PointXY parabolic_to_xy(const PointParabolic& p);

/// xi = sqrt(r + x), eta = sgn+(y) sqrt(r - x) with sgn+(0) = +1.
/// Throws OriginError at (0, 0).
PointParabolic xy_to_parabolic(const PointXY& p);

/// (xi^2, eta^2) = (r (1 + cos phi), r (1 - cos phi)).
std::pair<double, double> polar_to_parabolic_sq(const PointPolar& p);

/// Half-angle form: xi = sqrt(2r)|cos(phi/2)|, eta = sqrt(2r) sin(phi/2) sgn(cos(phi/2)).
/// Agrees with xy_to_parabolic(polar_to_xy(p)) away from the negative x-axis.
PointParabolic polar_to_parabolic(const PointPolar& p);

/// phi in [0, 2 pi). Throws OriginError at (0, 0).
PointPolar xy_to_polar(const PointXY& p);

PointXY polar_to_xy(const PointPolar& p);

}  // namespace helmholtz2d::geometry
